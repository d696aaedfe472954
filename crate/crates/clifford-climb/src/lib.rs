//! Exact-arithmetic analysis of the Clifford hierarchy at desk scale.
//!
//! For a Hermitian gate U the square root Û = (I + iU)/√2 satisfies Û² = iU;
//! this crate decides, with no floating point anywhere, whether Û climbs to
//! the next hierarchy level. Hermitian Clifford gates are characterized
//! symplectically: Û is third level exactly when F_C is a hyperbolic
//! involution with residue dimension 2 (dimension 0 being the trivial Pauli
//! case). The same machinery verifies the obstruction criterion
//! (U·E·U = E′ with E, E′ anticommuting), lifts controlled gates to the
//! fourth level, and counts the diagonal and permutation climber families.
//!
//! Layers, bottom up:
//! - [`ring`]: scalars (a + bω + cω² + dω³)/√2^k, ω = exp(iπ/4), exact.
//! - [`gf2`], [`symplectic`]: bit-packed GF(2) linear algebra and Sp(2n).
//! - [`pauli`]: the Pauli group in normal form i^c X(x)Z(z).
//! - [`unitary`], [`gates`]: dense exact unitaries, the hat map, controls.
//! - [`clifford`]: symplectic extraction/synthesis, Pauli expansions,
//!   the two-Pauli diagonalizer, climber-family enumeration.
//! - [`hierarchy`]: level membership, obstruction search, climb verdicts.
//! - [`circuit`]: the text front end.
//! - [`verify`]: the named check suites behind `clifford-climb verify`.
//!
//! Class sweeps are data-parallel (rayon) when built with the default
//! `parallel` feature; disabling it compiles the same sweeps as plain loops.
//!
//! ```
//! use clifford_climb::{gates, Analyzer, Budget, Verdict};
//!
//! let analyzer = Analyzer::new(Budget::default());
//! // CZ is a Hermitian Clifford whose square root climbs: its symplectic
//! // matrix is a hyperbolic involution with residue dimension 2.
//! let report = analyzer.analyze(&gates::cz(), "CZ", true, 4).unwrap();
//! assert_eq!(report.verdict, Verdict::Climbs { trivial: false });
//! assert_eq!(report.min_level, Some(2));
//! assert_eq!(report.hat_level, Some(3));
//!
//! // The Hadamard square root is blocked: HXH = Z anticommutes with X.
//! let report = analyzer.analyze(&gates::h(), "H", true, 4).unwrap();
//! assert_eq!(report.verdict, Verdict::BlockedNotHyperbolic);
//! assert_eq!(report.hat_level, None);
//! ```

pub mod circuit;
pub mod clifford;
pub mod exec;
pub mod gates;
pub mod gf2;
pub mod hierarchy;
pub mod pauli;
pub mod ring;
pub mod symplectic;
pub mod unitary;
pub mod verify;

pub use circuit::{evaluate, parse_circuit, CircuitAst, CircuitError};
pub use clifford::{
    clifford_from_symplectic, clifford_transvection, diagonal_clifford, diagonalizer,
    enumerate_climber_family, pauli_expand, permutation_clifford, symplectic_of, CliffordError,
    CliffordRep, ClimberFamily, PauliExpansion,
};
pub use gf2::BinMatrix;
pub use hierarchy::{Analyzer, Budget, ClimbReport, HierarchyError, Verdict};
pub use pauli::{enumerate_pauli_classes, PauliError, PauliOp, SymplecticVector};
pub use ring::RingScalar;
pub use symplectic::{SymplecticError, SymplecticMatrix};
pub use unitary::{ExactUnitary, UnitaryError};
