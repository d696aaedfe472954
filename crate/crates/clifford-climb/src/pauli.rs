//! The n-qubit Pauli group in normal form i^c·X(x)Z(z).
//!
//! A Pauli is stored as two n-bit masks (bit i−1 ↔ qubit i) plus a phase
//! exponent c mod 4. Multiplication tracks the phase exactly, commutation is
//! the symplectic inner product of the (x, z) vectors, and Hermiticity is the
//! congruence c ≡ x·zᵀ (mod 2).

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("qubit count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid Pauli string: {0}")]
    Parse(String),
}

/// A vector in F₂^{2n}, split as (x-part, z-part): bit i is x_i, bit n+i is z_i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticVector {
    n: usize,
    bits: u64,
}

impl SymplecticVector {
    pub fn new(n: usize, bits: u64) -> Self {
        assert!(2 * n <= 64);
        debug_assert!(n == 32 || bits < (1u64 << (2 * n)));
        SymplecticVector { n, bits }
    }

    pub fn from_xz(n: usize, x: u64, z: u64) -> Self {
        Self::new(n, x | (z << n))
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn x_part(&self) -> u64 {
        self.bits & lowmask(self.n)
    }

    pub fn z_part(&self) -> u64 {
        self.bits >> self.n
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// ⟨(a,b),(c,d)⟩ = a·dᵀ + b·cᵀ mod 2; 1 means the Paulis anticommute.
    pub fn try_inner(&self, other: &SymplecticVector) -> Result<bool, PauliError> {
        if self.n != other.n {
            return Err(PauliError::DimensionMismatch(self.n, other.n));
        }
        Ok(self.inner(other))
    }

    pub fn inner(&self, other: &SymplecticVector) -> bool {
        assert_eq!(self.n, other.n, "symplectic vectors of different length");
        let t = (self.x_part() & other.z_part()).count_ones()
            + (self.z_part() & other.x_part()).count_ones();
        t % 2 == 1
    }

    /// The functional row of ⟨·, self⟩: ⟨w, v⟩ = parity(w & omega(v)).
    pub fn omega_row(&self) -> u64 {
        self.z_part() | (self.x_part() << self.n)
    }
}

/// i^c · X(x) Z(z) on n qubits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PauliOp {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliOp {
    pub fn new(n: usize, x: u64, z: u64, phase: u8) -> Self {
        assert!((1..=32).contains(&n));
        assert!(n == 64 || (x < (1u64 << n) && z < (1u64 << n)));
        PauliOp {
            n,
            x,
            z,
            phase: phase % 4,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, 0, 0)
    }

    /// The Hermitian representative E(v) = i^{x·zᵀ} X(x) Z(z); squares to I.
    pub fn hermitian_rep(v: SymplecticVector) -> Self {
        let c = ((v.x_part() & v.z_part()).count_ones() % 2) as u8;
        Self::new(v.n(), v.x_part(), v.z_part(), c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn vector(&self) -> SymplecticVector {
        SymplecticVector::from_xz(self.n, self.x, self.z)
    }

    pub fn is_identity_class(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// X_i (1-based qubit index).
    pub fn x_on(n: usize, qubit: usize) -> Self {
        Self::new(n, 1 << (qubit - 1), 0, 0)
    }

    /// Z_i (1-based qubit index).
    pub fn z_on(n: usize, qubit: usize) -> Self {
        Self::new(n, 0, 1 << (qubit - 1), 0)
    }

    pub fn try_mul(&self, rhs: &PauliOp) -> Result<PauliOp, PauliError> {
        if self.n != rhs.n {
            return Err(PauliError::DimensionMismatch(self.n, rhs.n));
        }
        // X(x1)Z(z1)·X(x2)Z(z2) = (−1)^{z1·x2} X(x1+x2) Z(z1+z2).
        let swaps = (self.z & rhs.x).count_ones() % 2;
        let phase = (self.phase + rhs.phase + 2 * swaps as u8) % 4;
        Ok(PauliOp::new(self.n, self.x ^ rhs.x, self.z ^ rhs.z, phase))
    }

    pub fn commutes_with(&self, other: &PauliOp) -> bool {
        !self.vector().inner(&other.vector())
    }

    /// c ≡ x·zᵀ (mod 2); equivalent to P² = I at the matrix level.
    pub fn is_hermitian(&self) -> bool {
        (self.phase % 2) as u32 == (self.x & self.z).count_ones() % 2
    }

    pub fn mul_phase(&self, extra: u8) -> PauliOp {
        PauliOp {
            phase: (self.phase + extra) % 4,
            ..*self
        }
    }

    /// Drops the phase, keeping the (x, z) class representative.
    pub fn class(&self) -> PauliOp {
        PauliOp { phase: 0, ..*self }
    }
}

impl Mul for &PauliOp {
    type Output = PauliOp;
    fn mul(self, rhs: &PauliOp) -> PauliOp {
        self.try_mul(rhs).expect("pauli qubit counts must match")
    }
}

/// Yields one phaseless representative (c = 0) per class, 4^n in total,
/// ordered with the z-part as the outer index.
pub fn enumerate_pauli_classes(n: usize) -> impl Iterator<Item = PauliOp> {
    assert!(n >= 1 && 2 * n < 63);
    (0..(1u64 << (2 * n))).map(move |v| {
        let x = v & lowmask(n);
        let z = v >> n;
        PauliOp::new(n, x, z, 0)
    })
}

fn lowmask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Per-site letters absorb one i per Y (Y = iXZ), the rest is a prefix.
        let y_sites = (self.x & self.z).count_ones() as u8;
        let prefix_exp = (self.phase + 4 - (y_sites % 4)) % 4;
        let prefix = match prefix_exp {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}")?;
        for q in 0..self.n {
            let (xb, zb) = ((self.x >> q) & 1, (self.z >> q) & 1);
            let letter = match (xb, zb) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            };
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliOp {
    type Err = PauliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Accept the typographic minus sign alongside the ASCII one.
        let ascii = s.trim().replace('\u{2212}', "-");
        let body = ascii.as_str();
        let (prefix_exp, rest) = if let Some(r) = body.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = body.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = body.strip_prefix('i') {
            (1, r)
        } else if let Some(r) = body.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = body.strip_prefix('+') {
            (0, r)
        } else {
            (0, body)
        };
        if rest.is_empty() || rest.len() > 32 {
            return Err(PauliError::Parse(s.into()));
        }
        let (mut x, mut z) = (0u64, 0u64);
        let mut y_sites = 0u8;
        for (q, ch) in rest.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => x |= 1 << q,
                'Z' => z |= 1 << q,
                'Y' => {
                    x |= 1 << q;
                    z |= 1 << q;
                    y_sites += 1;
                }
                _ => return Err(PauliError::Parse(s.into())),
            }
        }
        Ok(PauliOp::new(rest.len(), x, z, (prefix_exp + y_sites) % 4))
    }
}

impl Serialize for SymplecticVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s: String = (0..2 * self.n)
            .map(|i| if (self.bits >> i) & 1 == 1 { '1' } else { '0' })
            .collect();
        serializer.serialize_str(&s)
    }
}

impl Serialize for PauliOp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let bitstring = |bits: u64| -> String {
            (0..self.n)
                .map(|q| if (bits >> q) & 1 == 1 { '1' } else { '0' })
                .collect()
        };
        let mut st = serializer.serialize_struct("PauliOp", 3)?;
        st.serialize_field("x", &bitstring(self.x))?;
        st.serialize_field("z", &bitstring(self.z))?;
        st.serialize_field("c", &self.phase)?;
        st.end()
    }
}
