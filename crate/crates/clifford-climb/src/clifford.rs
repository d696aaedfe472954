//! Clifford gates as symplectic data plus phases.
//!
//! A Clifford C is pinned down (up to a Pauli and a phase) by its symplectic
//! matrix F_C, the conjugation table C·E(v)·C† = ±E(vF_C). This module
//! extracts F_C from an exact matrix, synthesizes a canonical matrix back
//! from F, expands unitaries in the Hermitian Pauli basis with exact trace
//! coefficients, diagonalizes commuting Pauli pairs, and enumerates the
//! diagonal and permutation families whose square roots climb.

use crate::gf2::BinMatrix;
use crate::pauli::{enumerate_pauli_classes, PauliOp, SymplecticVector};
use crate::ring::RingScalar;
use crate::symplectic::{SymplecticError, SymplecticMatrix};
use crate::unitary::ExactUnitary;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("matrix is not a Clifford gate: conjugated generator {0} is not a Pauli")]
    NotClifford(String),
    #[error("operands must be Hermitian")]
    NotHermitian,
    #[error("operands must commute")]
    NotCommuting,
    #[error("operands must be independent")]
    NotIndependent,
    #[error("matrix must be symmetric")]
    NotSymmetric,
    #[error("matrix must be invertible")]
    NotInvertible,
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
}

/// Symplectic representation of a Clifford gate: F_C plus the signed images
/// of the 2n generators X₁..X_n, Z₁..Z_n.
#[derive(Clone, Debug)]
pub struct CliffordRep {
    n: usize,
    f: SymplecticMatrix,
    images: Vec<PauliOp>,
}

impl CliffordRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &SymplecticMatrix {
        &self.f
    }

    /// Image of the i-th generator (0..n are X₁..X_n, n..2n are Z₁..Z_n),
    /// sign included in the phase exponent.
    pub fn images(&self) -> &[PauliOp] {
        &self.images
    }

    pub fn residue_dim(&self) -> usize {
        self.f.residue_space().dim()
    }
}

impl Serialize for CliffordRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CliffordRep", 2)?;
        st.serialize_field("F", &self.f.matrix())?;
        let images: Vec<String> = self.images.iter().map(|p| p.to_string()).collect();
        st.serialize_field("images", &images)?;
        st.end()
    }
}

/// Extracts F_C by conjugating the 2n Pauli generators; fails with
/// `NotClifford` if any conjugate is not exactly a signed Hermitian Pauli.
pub fn symplectic_of(u: &ExactUnitary) -> Result<CliffordRep, CliffordError> {
    let n = u.n();
    let mut rows = Vec::with_capacity(2 * n);
    let mut images = Vec::with_capacity(2 * n);
    let udg = u.dagger();
    let mut conjugate_generator = |g: PauliOp, name: String| -> Result<(), CliffordError> {
        let conj = u.mul(&ExactUnitary::from_pauli(&g)).mul(&udg);
        let Some((e, t)) = conj.detect_pauli() else {
            return Err(CliffordError::NotClifford(name));
        };
        // Conjugates of Hermitian generators are Hermitian: phase is ±1.
        debug_assert!(t == 0 || t == 2);
        rows.push(e.vector().bits());
        images.push(e.mul_phase(t));
        Ok(())
    };
    for i in 1..=n {
        conjugate_generator(PauliOp::x_on(n, i), format!("X{i}"))?;
    }
    for i in 1..=n {
        conjugate_generator(PauliOp::z_on(n, i), format!("Z{i}"))?;
    }
    let f = SymplecticMatrix::new(n, BinMatrix::from_rows(rows, 2 * n))
        .map_err(CliffordError::Symplectic)?;
    Ok(CliffordRep { n, f, images })
}

/// The Clifford transvection C_v = (I ± iE(v))/√2; its symplectic matrix is
/// the transvection T_v.
pub fn clifford_transvection(v: &SymplecticVector, plus: bool) -> ExactUnitary {
    let e = ExactUnitary::from_pauli(&PauliOp::hermitian_rep(*v));
    let hat = e.hat().expect("Hermitian representative");
    if plus {
        hat
    } else {
        hat.dagger()
    }
}

/// A canonical unitary with the given symplectic matrix: the product of
/// plus-sign Clifford transvections along a transvection factorization of F.
/// Any Clifford with the same F differs from it by a Pauli and a phase.
pub fn clifford_from_symplectic(f: &SymplecticMatrix) -> ExactUnitary {
    let n = f.n();
    // F = T_{w₁}···T_{w_m}; the representation is an anti-homomorphism, so
    // the unitary is C_{w_m}···C_{w₁}.
    let ws = f.transvection_factorization();
    let mut u = ExactUnitary::identity(n);
    for w in &ws {
        u = clifford_transvection(w, true).mul(&u);
    }
    u
}

/// Writes `target = ζ·E·canonical` for a unit phase ζ and a Hermitian Pauli
/// representative E; defined exactly when the two gates share a symplectic
/// matrix, in which case the quotient target·canonical† is a phased Pauli.
pub fn pauli_phase_quotient(
    target: &ExactUnitary,
    canonical: &ExactUnitary,
) -> Option<(PauliOp, RingScalar)> {
    if target.n() != canonical.n() {
        return None;
    }
    target.mul(&canonical.dagger()).detect_pauli_up_to_phase()
}

/// Exact Pauli expansion U = Σ_E c_E·E over the 4^n Hermitian classes, with
/// c_E = Tr(E·U)/2^n; zero terms omitted.
///
/// For a Hermitian Clifford the support is a coset of a subgroup of the
/// phaseless classes (a subgroup outright when the identity class appears —
/// the gate is then a transvection product with no leftover Pauli factor).
#[derive(Clone, Debug)]
pub struct PauliExpansion {
    pub terms: Vec<(PauliOp, RingScalar)>,
    /// The support classes contain the identity and are XOR-closed.
    pub support_is_subgroup: bool,
    /// The support classes are a coset v ⊕ S of an XOR-closed subgroup S.
    pub support_is_coset: bool,
    /// log₂ of the support size when `support_is_coset` and the size is a
    /// power of two; for a Hermitian Clifford this is dim Res(F_C).
    pub subgroup_rank: Option<u32>,
}

impl PauliExpansion {
    /// Rebuilds the matrix from the terms; equals the expanded input exactly.
    pub fn reconstruct(&self, n: usize) -> ExactUnitary {
        let mut acc = ExactUnitary::identity(n).scale(&RingScalar::zero());
        for (p, coeff) in &self.terms {
            let term = ExactUnitary::from_pauli(p).scale(coeff);
            acc = crate::unitary::matrix_sum(&acc, &term);
        }
        acc
    }
}

impl Serialize for PauliExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            pauli: String,
            coeff: &'a RingScalar,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(p, c)| Term {
                pauli: p.to_string(),
                coeff: c,
            })
            .collect();
        let mut st = serializer.serialize_struct("PauliExpansion", 4)?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("support_is_subgroup", &self.support_is_subgroup)?;
        st.serialize_field("support_is_coset", &self.support_is_coset)?;
        st.serialize_field("subgroup_rank", &self.subgroup_rank)?;
        st.end()
    }
}

pub fn pauli_expand(u: &ExactUnitary) -> PauliExpansion {
    let n = u.n();
    let inv_dim = RingScalar::new(1, 0, 0, 0, 2 * n as u32); // 1/2^n = 1/√2^{2n}
    let mut terms = Vec::new();
    for p in enumerate_pauli_classes(n) {
        let e = PauliOp::hermitian_rep(p.vector());
        let coeff = &u.trace_with_pauli(&e) * &inv_dim;
        if !coeff.is_zero() {
            terms.push((e, coeff));
        }
    }
    let classes: Vec<u64> = terms.iter().map(|(p, _)| p.vector().bits()).collect();
    let set: std::collections::HashSet<u64> = classes.iter().copied().collect();
    let support_is_subgroup = set.contains(&0)
        && classes
            .iter()
            .all(|a| classes.iter().all(|b| set.contains(&(a ^ b))));
    // Coset test: shift by any member; the shifted set must be XOR-closed.
    let support_is_coset = match classes.first() {
        Some(&rep) => {
            let shifted: std::collections::HashSet<u64> = classes.iter().map(|c| c ^ rep).collect();
            shifted
                .iter()
                .all(|a| shifted.iter().all(|b| shifted.contains(&(a ^ b))))
        }
        None => false,
    };
    let subgroup_rank = if support_is_coset && terms.len().is_power_of_two() {
        Some(terms.len().trailing_zeros())
    } else {
        None
    };
    PauliExpansion {
        terms,
        support_is_subgroup,
        support_is_coset,
        subgroup_rank,
    }
}

/// A Clifford C₁ with C₁E₁C₁† = Z₁ and C₁E₂C₁† = Z₂, both signs +1.
pub fn diagonalizer(e1: &PauliOp, e2: &PauliOp) -> Result<ExactUnitary, CliffordError> {
    if !e1.is_hermitian() || !e2.is_hermitian() {
        return Err(CliffordError::NotHermitian);
    }
    if !e1.commutes_with(e2) {
        return Err(CliffordError::NotCommuting);
    }
    let (v1, v2) = (e1.vector(), e2.vector());
    if v1.is_zero() || v2.is_zero() || v1 == v2 {
        return Err(CliffordError::NotIndependent);
    }
    let n = e1.n();
    let g = SymplecticMatrix::complete_isotropic(&[v1, v2]).map_err(|err| match err {
        SymplecticError::NotIndependent => CliffordError::NotIndependent,
        other => CliffordError::Symplectic(other),
    })?;
    let c1 = clifford_from_symplectic(&g);
    // Fix signs with an X-type Pauli: X_i flips the sign of Z_i only.
    let mut xmask = 0u64;
    for (i, e) in [e1, e2].iter().enumerate() {
        let conj = c1.conjugate(&ExactUnitary::from_pauli(e));
        let (p, t) = conj
            .detect_pauli()
            .expect("conjugate of a Pauli by a Clifford");
        debug_assert_eq!(p, PauliOp::z_on(n, i + 1));
        debug_assert!(t == 0 || t == 2);
        if t == 2 {
            xmask |= 1 << i;
        }
    }
    let c = if xmask == 0 {
        c1
    } else {
        ExactUnitary::from_pauli(&PauliOp::new(n, xmask, 0, 0)).mul(&c1)
    };
    debug_assert_eq!(
        c.conjugate(&ExactUnitary::from_pauli(e1)).detect_pauli(),
        Some((PauliOp::z_on(n, 1), 0))
    );
    Ok(c)
}

/// The diagonal gate [i^{xAxᵀ mod 4}] of a symmetric binary quadratic form;
/// Hermitian exactly when A has an all-zero diagonal.
pub fn diagonal_clifford(a: &BinMatrix) -> Result<ExactUnitary, CliffordError> {
    if !a.is_symmetric() {
        return Err(CliffordError::NotSymmetric);
    }
    let n = a.rows();
    let dim = 1usize << n;
    let mut entries = vec![RingScalar::zero(); dim * dim];
    for idx in 0..dim {
        // Qubit i+1 of the basis state is bit n−1−i of the index.
        let xbit = |i: usize| (idx >> (n - 1 - i)) & 1;
        let mut expo = 0usize;
        for i in 0..n {
            if a.get(i, i) && xbit(i) == 1 {
                expo += 1;
            }
            for j in (i + 1)..n {
                if a.get(i, j) && xbit(i) == 1 && xbit(j) == 1 {
                    expo += 2;
                }
            }
        }
        entries[idx * dim + idx] = RingScalar::i_pow((expo % 4) as u8);
    }
    Ok(ExactUnitary::from_entries_unchecked(n, entries))
}

/// The permutation gate |x⟩ ↦ |xB⟩ of an invertible B; its symplectic matrix
/// is diag(B, B^{−T}).
pub fn permutation_clifford(b: &BinMatrix) -> Result<ExactUnitary, CliffordError> {
    if b.rows() != b.cols() || b.inverse().is_err() {
        return Err(CliffordError::NotInvertible);
    }
    let n = b.rows();
    let dim = 1usize << n;
    let mut entries = vec![RingScalar::zero(); dim * dim];
    for idx in 0..dim {
        // Row vector x over qubits from the basis index.
        let mut x = 0u64;
        for i in 0..n {
            if (idx >> (n - 1 - i)) & 1 == 1 {
                x |= 1 << i;
            }
        }
        let xb = b.apply_row(x);
        let mut target = 0usize;
        for i in 0..n {
            if (xb >> i) & 1 == 1 {
                target |= 1 << (n - 1 - i);
            }
        }
        entries[target * dim + idx] = RingScalar::one();
    }
    Ok(ExactUnitary::from_entries_unchecked(n, entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClimberFamily {
    Diagonal,
    Permutation,
}

/// The closed-form family size: (2^n−1)(2^n−2)/6 diagonal, resp.
/// (2^n−1)(2^{n−1}−1) permutation climbers.
pub fn climber_count(family: ClimberFamily, n: usize) -> u64 {
    let p = 1u64 << n;
    match family {
        ClimberFamily::Diagonal => (p - 1) * (p - 2) / 6,
        ClimberFamily::Permutation => (p - 1) * ((p / 2) - 1),
    }
}

/// Enumerates the defining matrices of a climber family:
/// diagonal — symmetric zero-diagonal A of rank 2 (as aᵀb + bᵀa);
/// permutation — involutive invertible B with rank(I+B) = 1 (as I + aᵀb, a·bᵀ = 0).
/// Deduplicated by matrix equality.
pub fn enumerate_climber_family(family: ClimberFamily, n: usize) -> Vec<BinMatrix> {
    assert!((2..=16).contains(&n));
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in 1u64..(1 << n) {
        for b in 1u64..(1 << n) {
            let mat = match family {
                ClimberFamily::Diagonal => {
                    if a == b {
                        continue;
                    }
                    // A = aᵀb + bᵀa
                    let rows: Vec<u64> = (0..n)
                        .map(|i| {
                            let mut row = 0;
                            if (a >> i) & 1 == 1 {
                                row ^= b;
                            }
                            if (b >> i) & 1 == 1 {
                                row ^= a;
                            }
                            row
                        })
                        .collect();
                    BinMatrix::from_rows(rows, n)
                }
                ClimberFamily::Permutation => {
                    if (a & b).count_ones() % 2 == 1 {
                        continue; // a·bᵀ must vanish for invertibility
                    }
                    let rows: Vec<u64> = (0..n)
                        .map(|i| {
                            let mut row = 1u64 << i;
                            if (a >> i) & 1 == 1 {
                                row ^= b;
                            }
                            row
                        })
                        .collect();
                    BinMatrix::from_rows(rows, n)
                }
            };
            if seen.insert(mat.clone()) {
                out.push(mat);
            }
        }
    }
    out
}

/// Constructs the gate of a family member.
pub fn climber_gate(family: ClimberFamily, m: &BinMatrix) -> Result<ExactUnitary, CliffordError> {
    match family {
        ClimberFamily::Diagonal => diagonal_clifford(m),
        ClimberFamily::Permutation => permutation_clifford(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;

    #[test]
    fn symplectic_of_hadamard() {
        let rep = symplectic_of(&gates::h()).unwrap();
        // X ↦ Z, Z ↦ X.
        assert_eq!(rep.f().matrix().bit_rows(), vec!["01", "10"]);
        assert_eq!(rep.images()[0], PauliOp::z_on(1, 1));
        assert_eq!(rep.images()[1], PauliOp::x_on(1, 1));
    }

    #[test]
    fn symplectic_of_phase_gate() {
        let rep = symplectic_of(&gates::s()).unwrap();
        // X ↦ Y = i·XZ, Z ↦ Z.
        assert_eq!(rep.f().matrix().bit_rows(), vec!["11", "01"]);
        assert_eq!(rep.images()[0], PauliOp::new(1, 1, 1, 1));
        assert_eq!(rep.images()[1], PauliOp::z_on(1, 1));
    }

    #[test]
    fn symplectic_of_cz_is_diagonal_form() {
        let rep = symplectic_of(&gates::cz()).unwrap();
        let a = BinMatrix::from_rows(vec![0b10, 0b01], 2);
        let expected = SymplecticMatrix::from_upper_block(&a).unwrap();
        assert_eq!(rep.f(), &expected);
    }

    #[test]
    fn non_clifford_is_rejected() {
        let tof = gates::ccx();
        assert!(matches!(
            symplectic_of(&tof),
            Err(CliffordError::NotClifford(_))
        ));
    }

    #[test]
    fn transvection_zero_is_phase_times_identity() {
        let c = clifford_transvection(&SymplecticVector::zero(1), true);
        assert_eq!(c, ExactUnitary::identity(1).scale(&RingScalar::omega()));
    }

    #[test]
    fn transvection_of_z_is_phase_times_sdg() {
        // (I + iZ)/√2 = (1+i)/√2 · S†.
        let c = clifford_transvection(&SymplecticVector::from_xz(1, 0, 1), true);
        assert_eq!(c, gates::sdg().scale(&RingScalar::omega()));
    }

    #[test]
    fn transvections_have_transvection_symplectic() {
        for bits in 0..16u64 {
            let v = SymplecticVector::new(2, bits);
            for plus in [true, false] {
                let rep = symplectic_of(&clifford_transvection(&v, plus)).unwrap();
                assert_eq!(rep.f(), &SymplecticMatrix::transvection(&v));
            }
        }
    }

    #[test]
    fn pauli_phase_quotient_relates_canonical_representatives() {
        // Every library Clifford equals ζ·E times the canonical transvection
        // product with the same symplectic matrix.
        for u in [
            gates::h(),
            gates::s(),
            gates::cz(),
            gates::cx(),
            gates::swap(),
        ] {
            let rep = symplectic_of(&u).unwrap();
            let canonical = clifford_from_symplectic(rep.f());
            let (e, zeta) = pauli_phase_quotient(&u, &canonical).expect("same symplectic class");
            let rebuilt = ExactUnitary::from_pauli(&e).scale(&zeta).mul(&canonical);
            assert_eq!(rebuilt, u);
        }
        // Different symplectic classes have no phased-Pauli quotient.
        let canonical_cz = clifford_from_symplectic(symplectic_of(&gates::cz()).unwrap().f());
        assert!(pauli_phase_quotient(&gates::swap(), &canonical_cz).is_none());
    }

    #[test]
    fn from_symplectic_round_trip_spot_checks() {
        for u in [
            gates::h(),
            gates::s(),
            gates::cz(),
            gates::swap(),
            gates::cx(),
        ] {
            let rep = symplectic_of(&u).unwrap();
            let c = clifford_from_symplectic(rep.f());
            let rep2 = symplectic_of(&c).unwrap();
            assert_eq!(rep.f(), rep2.f());
        }
        assert_eq!(
            clifford_from_symplectic(&SymplecticMatrix::identity(2)),
            ExactUnitary::identity(2)
        );
    }

    #[test]
    fn expand_identity_and_hadamard() {
        let exp = pauli_expand(&ExactUnitary::identity(2));
        assert_eq!(exp.terms.len(), 1);
        assert_eq!(exp.terms[0].0, PauliOp::identity(2));
        assert!(exp.terms[0].1.is_one());

        // H = (X + Z)/√2.
        let exp = pauli_expand(&gates::h());
        assert_eq!(exp.terms.len(), 2);
        let coeffs: Vec<&RingScalar> = exp.terms.iter().map(|(_, c)| c).collect();
        assert!(coeffs.iter().all(|c| **c == RingScalar::inv_sqrt2()));
        // Support {X, Z} misses the identity but is the coset X ⊕ {I, XZ}.
        assert!(!exp.support_is_subgroup);
        assert!(exp.support_is_coset);
        assert_eq!(exp.subgroup_rank, Some(1));
    }

    #[test]
    fn expand_cz_matches_half_sum() {
        // CZ = (I + Z₁ + Z₂ − Z₁Z₂)/2.
        let exp = pauli_expand(&gates::cz());
        assert_eq!(exp.terms.len(), 4);
        assert!(exp.support_is_subgroup);
        assert_eq!(exp.subgroup_rank, Some(2));
        let half = RingScalar::half();
        for (p, c) in &exp.terms {
            let want = if p.x_bits() == 0 && p.z_bits() == 0b11 {
                -&half
            } else {
                half.clone()
            };
            assert_eq!(*c, want, "coefficient of {p}");
        }
        assert_eq!(exp.reconstruct(2), gates::cz());
    }

    #[test]
    fn expansion_reconstructs_hat_matrices() {
        let u = gates::swap().hat().unwrap();
        assert_eq!(pauli_expand(&u).reconstruct(2), u);
    }

    #[test]
    fn diagonalizer_examples() {
        let z1 = PauliOp::z_on(2, 1);
        let z2 = PauliOp::z_on(2, 2);
        let c = diagonalizer(&z1, &z2).unwrap();
        assert_eq!(
            c.conjugate(&ExactUnitary::from_pauli(&z1)).detect_pauli(),
            Some((z1, 0))
        );
        assert_eq!(
            c.conjugate(&ExactUnitary::from_pauli(&z2)).detect_pauli(),
            Some((z2, 0))
        );

        let x1 = PauliOp::x_on(2, 1);
        let c = diagonalizer(&x1, &z2).unwrap();
        assert_eq!(
            c.conjugate(&ExactUnitary::from_pauli(&x1)).detect_pauli(),
            Some((z1, 0))
        );
        assert_eq!(
            c.conjugate(&ExactUnitary::from_pauli(&z2)).detect_pauli(),
            Some((z2, 0))
        );
    }

    #[test]
    fn diagonalizer_rejects_bad_pairs() {
        let x1 = PauliOp::x_on(2, 1);
        let z1 = PauliOp::z_on(2, 1);
        assert_eq!(
            diagonalizer(&x1, &z1).unwrap_err(),
            CliffordError::NotCommuting
        );
        assert_eq!(
            diagonalizer(&x1, &x1).unwrap_err(),
            CliffordError::NotIndependent
        );
        let xz = PauliOp::new(1, 1, 1, 0); // XZ is not Hermitian
        assert_eq!(
            diagonalizer(&xz, &xz).unwrap_err(),
            CliffordError::NotHermitian
        );
    }

    #[test]
    fn diagonal_clifford_examples() {
        assert_eq!(
            diagonal_clifford(&BinMatrix::zero(2, 2)).unwrap(),
            ExactUnitary::identity(2)
        );
        let a = BinMatrix::from_rows(vec![0b10, 0b01], 2);
        assert_eq!(diagonal_clifford(&a).unwrap(), gates::cz());
        let s = BinMatrix::from_rows(vec![0b1], 1);
        assert_eq!(diagonal_clifford(&s).unwrap(), gates::s());
        let bad = BinMatrix::from_rows(vec![0b10, 0b00], 2);
        assert_eq!(
            diagonal_clifford(&bad).unwrap_err(),
            CliffordError::NotSymmetric
        );
    }

    #[test]
    fn permutation_clifford_examples() {
        assert_eq!(
            permutation_clifford(&BinMatrix::identity(2)).unwrap(),
            ExactUnitary::identity(2)
        );
        let b = BinMatrix::from_rows(vec![0b10, 0b01], 2);
        assert_eq!(permutation_clifford(&b).unwrap(), gates::swap());
        // B = [[1,1],[0,1]]: (x₁, x₂) ↦ (x₁, x₁⊕x₂) = CNOT(1→2).
        let b = BinMatrix::from_rows(vec![0b11, 0b10], 2);
        assert_eq!(permutation_clifford(&b).unwrap(), gates::cx());
        let sing = BinMatrix::from_rows(vec![0b11, 0b11], 2);
        assert_eq!(
            permutation_clifford(&sing).unwrap_err(),
            CliffordError::NotInvertible
        );
    }

    #[test]
    fn permutation_symplectic_is_block_diagonal() {
        let b = BinMatrix::from_rows(vec![0b11, 0b10], 2);
        let rep = symplectic_of(&permutation_clifford(&b).unwrap()).unwrap();
        let expected = SymplecticMatrix::from_linear(&b).unwrap();
        assert_eq!(rep.f(), &expected);
    }

    #[test]
    fn family_counts_small() {
        assert_eq!(
            enumerate_climber_family(ClimberFamily::Diagonal, 2).len(),
            1
        );
        assert_eq!(
            enumerate_climber_family(ClimberFamily::Permutation, 2).len(),
            3
        );
        assert_eq!(climber_count(ClimberFamily::Diagonal, 2), 1);
        assert_eq!(climber_count(ClimberFamily::Permutation, 2), 3);
        // n = 2 diagonal family is exactly CZ.
        let m = &enumerate_climber_family(ClimberFamily::Diagonal, 2)[0];
        assert_eq!(
            climber_gate(ClimberFamily::Diagonal, m).unwrap(),
            gates::cz()
        );
    }

    #[test]
    fn conjugation_table_matches_symplectic_rows_exhaustively() {
        // U·E(v)·U† = ±E(vF) for every class v, on the library Cliffords and
        // an n = 3 diagonal member.
        let mut gates_under_test = vec![
            gates::h(),
            gates::s(),
            gates::cz(),
            gates::cx(),
            gates::swap(),
        ];
        let a3 = BinMatrix::from_rows(vec![0b010, 0b101, 0b010], 3);
        gates_under_test.push(diagonal_clifford(&a3).unwrap());
        gates_under_test.push(gates::swap().embed(3, &[1, 3]));
        for u in gates_under_test {
            let rep = symplectic_of(&u).unwrap();
            for p in enumerate_pauli_classes(u.n()) {
                let e = PauliOp::hermitian_rep(p.vector());
                let conj = u.conjugate(&ExactUnitary::from_pauli(&e));
                let (img, t) = conj.detect_pauli().expect("Clifford conjugate is Pauli");
                assert!(t == 0 || t == 2);
                assert_eq!(img.vector(), rep.f().apply(&p.vector()));
            }
        }
    }

    #[test]
    fn diagonal_gate_hermitian_iff_zero_diagonal() {
        for n in 1..=3usize {
            let cells: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
            for mask in 0u64..(1 << cells.len()) {
                let mut a = BinMatrix::zero(n, n);
                for (bit, &(i, j)) in cells.iter().enumerate() {
                    if (mask >> bit) & 1 == 1 {
                        a.set(i, j, true);
                        a.set(j, i, true);
                    }
                }
                let g = diagonal_clifford(&a).unwrap();
                assert_eq!(g.is_hermitian(), a.has_zero_diagonal(), "A = {a:?}");
            }
        }
    }

    #[test]
    fn permutation_gate_hermitian_iff_involution() {
        for n in 2..=3usize {
            for code in 0u64..(1 << (n * n)) {
                let rows: Vec<u64> = (0..n).map(|i| (code >> (i * n)) & ((1 << n) - 1)).collect();
                let b = BinMatrix::from_rows(rows, n);
                if b.inverse().is_err() {
                    continue;
                }
                let g = permutation_clifford(&b).unwrap();
                assert_eq!(g.is_hermitian(), b.mul(&b) == BinMatrix::identity(n));
            }
        }
    }

    #[test]
    fn diagonalizer_of_z1_z2_is_identity() {
        let c = diagonalizer(&PauliOp::z_on(2, 1), &PauliOp::z_on(2, 2)).unwrap();
        assert_eq!(c, ExactUnitary::identity(2));
    }

    #[test]
    fn diagonalizer_random_commuting_pairs() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(31);
        for n in 3..=4usize {
            let mut done = 0;
            while done < 12 {
                let v1 = SymplecticVector::new(n, rng.gen_range(1..(1u64 << (2 * n))));
                let v2 = SymplecticVector::new(n, rng.gen_range(1..(1u64 << (2 * n))));
                if v1 == v2 || v1.inner(&v2) {
                    continue;
                }
                let (e1, e2) = (PauliOp::hermitian_rep(v1), PauliOp::hermitian_rep(v2));
                let c = diagonalizer(&e1, &e2).unwrap();
                assert_eq!(
                    c.conjugate(&ExactUnitary::from_pauli(&e1)).detect_pauli(),
                    Some((PauliOp::z_on(n, 1), 0))
                );
                assert_eq!(
                    c.conjugate(&ExactUnitary::from_pauli(&e2)).detect_pauli(),
                    Some((PauliOp::z_on(n, 2), 0))
                );
                done += 1;
            }
        }
    }

    #[test]
    fn family_members_match_defining_predicate() {
        for n in 2..=4usize {
            let diag = enumerate_climber_family(ClimberFamily::Diagonal, n);
            assert_eq!(diag.len() as u64, climber_count(ClimberFamily::Diagonal, n));
            for a in &diag {
                assert!(a.is_symmetric() && a.has_zero_diagonal());
                assert_eq!(a.rank(), 2);
            }
            let perm = enumerate_climber_family(ClimberFamily::Permutation, n);
            assert_eq!(
                perm.len() as u64,
                climber_count(ClimberFamily::Permutation, n)
            );
            for b in &perm {
                assert_eq!(b.mul(b), BinMatrix::identity(n));
                assert_eq!(b.add(&BinMatrix::identity(n)).rank(), 1);
            }
        }
    }
}
