//! Dense 2^n × 2^n unitaries with exact ring entries.
//!
//! Everything stays in Z[ω, 1/√2] so matrix equality is decidable bit for
//! bit. The hat map Û = (I + iU)/√2, controlled-gate construction and the
//! exact Pauli detector live here; level logic builds on top of them.
//!
//! Basis convention: qubit 1 is the leftmost (most significant) tensor
//! factor, so qubit i corresponds to bit n − i of a basis-state index.

use crate::pauli::PauliOp;
use crate::ring::RingScalar;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnitaryError {
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("matrix is not Hermitian")]
    NotHermitian,
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactUnitary {
    n: usize,
    dim: usize,
    entries: Vec<RingScalar>,
}

impl ExactUnitary {
    /// Validates U·U† = I exactly before accepting the matrix.
    pub fn from_rows(n: usize, rows: Vec<Vec<RingScalar>>) -> Result<Self, UnitaryError> {
        let dim = 1usize << n;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(UnitaryError::NotUnitary);
        }
        let u = ExactUnitary {
            n,
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        if !u.is_unitary() {
            return Err(UnitaryError::NotUnitary);
        }
        Ok(u)
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<RingScalar>) -> Self {
        let dim = 1usize << n;
        debug_assert_eq!(entries.len(), dim * dim);
        ExactUnitary { n, dim, entries }
    }

    pub fn identity(n: usize) -> Self {
        let dim = 1usize << n;
        let mut entries = vec![RingScalar::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = RingScalar::one();
        }
        ExactUnitary { n, dim, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RingScalar {
        &self.entries[i * self.dim + j]
    }

    fn is_unitary(&self) -> bool {
        let prod = self.mul(&self.dagger());
        prod == Self::identity(self.n)
    }

    pub fn mul(&self, rhs: &ExactUnitary) -> ExactUnitary {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let dim = self.dim;
        let mut out = vec![RingScalar::zero(); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let bkj = rhs.get(k, j);
                    if bkj.is_zero() {
                        continue;
                    }
                    let idx = i * dim + j;
                    out[idx] = &out[idx] + &(aik * bkj);
                }
            }
        }
        ExactUnitary {
            n: self.n,
            dim,
            entries: out,
        }
    }

    pub fn dagger(&self) -> ExactUnitary {
        let dim = self.dim;
        let mut out = vec![RingScalar::zero(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                out[j * dim + i] = self.get(i, j).conj();
            }
        }
        ExactUnitary {
            n: self.n,
            dim,
            entries: out,
        }
    }

    pub fn conjugate(&self, p: &ExactUnitary) -> ExactUnitary {
        self.mul(p).mul(&self.dagger())
    }

    pub fn tensor(&self, rhs: &ExactUnitary) -> ExactUnitary {
        let (da, db) = (self.dim, rhs.dim);
        let dim = da * db;
        let mut out = vec![RingScalar::zero(); dim * dim];
        for i in 0..da {
            for j in 0..da {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out[(i * db + k) * dim + (j * db + l)] = a * b;
                        }
                    }
                }
            }
        }
        ExactUnitary {
            n: self.n + rhs.n,
            dim,
            entries: out,
        }
    }

    pub fn scale(&self, f: &RingScalar) -> ExactUnitary {
        let entries = self.entries.iter().map(|e| e * f).collect();
        ExactUnitary {
            n: self.n,
            dim: self.dim,
            entries,
        }
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> RingScalar {
        let mut acc = RingScalar::zero();
        for i in 0..self.dim {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Û = (I + iU)/√2; unitary exactly when U is Hermitian, and Û² = iU.
    pub fn hat(&self) -> Result<ExactUnitary, UnitaryError> {
        if !self.is_hermitian() {
            return Err(UnitaryError::NotHermitian);
        }
        let dim = self.dim;
        let mut out = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut e = self.get(i, j).mul_i();
                if i == j {
                    e = &e + &RingScalar::one();
                }
                out.push(e.div_sqrt2());
            }
        }
        Ok(ExactUnitary {
            n: self.n,
            dim,
            entries: out,
        })
    }

    /// C^{(i)}(U): i control qubits in front, identity on every block except
    /// the last, which is U.
    pub fn controlled(&self, controls: usize) -> ExactUnitary {
        let mut cur = self.clone();
        for _ in 0..controls {
            let dim = cur.dim * 2;
            let mut out = vec![RingScalar::zero(); dim * dim];
            for i in 0..cur.dim {
                out[i * dim + i] = RingScalar::one();
            }
            for i in 0..cur.dim {
                for j in 0..cur.dim {
                    let e = cur.get(i, j);
                    if !e.is_zero() {
                        out[(cur.dim + i) * dim + (cur.dim + j)] = e.clone();
                    }
                }
            }
            cur = ExactUnitary {
                n: cur.n + 1,
                dim,
                entries: out,
            };
        }
        cur
    }

    /// Embeds this gate at the given 1-based qubit positions of an n-qubit
    /// register; `positions[0]` is the gate's own first (control-most) qubit.
    pub fn embed(&self, n: usize, positions: &[usize]) -> ExactUnitary {
        assert_eq!(positions.len(), self.n);
        assert!(positions.iter().all(|&q| q >= 1 && q <= n));
        let k = self.n;
        let dim = 1usize << n;
        // Gate qubit j sits at index bit n − positions[j]; gate sub-index bit
        // k − 1 − j, matching the qubit-1-leftmost convention.
        let bitpos: Vec<usize> = positions.iter().map(|&q| n - q).collect();
        let gate_index = |full: usize| -> usize {
            let mut g = 0usize;
            for (j, &bp) in bitpos.iter().enumerate() {
                g |= ((full >> bp) & 1) << (k - 1 - j);
            }
            g
        };
        let mut clear_mask = usize::MAX;
        for &bp in &bitpos {
            clear_mask &= !(1usize << bp);
        }
        let mut out = vec![RingScalar::zero(); dim * dim];
        for col in 0..dim {
            let gc = gate_index(col);
            let rest = col & clear_mask;
            for gr in 0..(1usize << k) {
                let e = self.get(gr, gc);
                if e.is_zero() {
                    continue;
                }
                let mut row = rest;
                for (j, &bp) in bitpos.iter().enumerate() {
                    row |= ((gr >> (k - 1 - j)) & 1) << bp;
                }
                out[row * dim + col] = e.clone();
            }
        }
        ExactUnitary {
            n,
            dim,
            entries: out,
        }
    }

    /// The dense matrix of a Pauli operator: i^c (−1)^{z·y} |y ⊕ x⟩⟨y|.
    pub fn from_pauli(p: &PauliOp) -> ExactUnitary {
        let n = p.n();
        let dim = 1usize << n;
        let xm = qubit_to_index_mask(p.x_bits(), n);
        let zm = qubit_to_index_mask(p.z_bits(), n);
        let phase = RingScalar::i_pow(p.phase_exp());
        let mut out = vec![RingScalar::zero(); dim * dim];
        for col in 0..dim {
            let row = col ^ xm as usize;
            let sign = (col as u64 & zm).count_ones() % 2 == 1;
            out[row * dim + col] = if sign { -&phase } else { phase.clone() };
        }
        ExactUnitary {
            n,
            dim,
            entries: out,
        }
    }

    /// Exact Pauli detection: Some((E, t)) iff M = i^t · E(x, z) with E the
    /// Hermitian representative and t ∈ Z₄. Every column is checked: one
    /// nonzero per column, a single XOR shift, and a linear sign pattern.
    pub fn detect_pauli(&self) -> Option<(PauliOp, u8)> {
        let (class, phase) = self.monomial_class()?;
        // Strict Pauli phases are the powers of i.
        let mut t = None;
        let mut cand = RingScalar::one();
        for e in 0..4u8 {
            if phase == cand {
                t = Some(e);
                break;
            }
            cand = cand.mul_i();
        }
        let t = t?;
        // M = i^t X(x)Z(z) = i^{t − c_E} E with E the Hermitian representative.
        let e = PauliOp::hermitian_rep(class.vector());
        let fold = (t + 4 - e.phase_exp() % 4) % 4;
        Some((e, fold))
    }

    /// Like `detect_pauli` but accepts any of the eight unit phases ±ω^j;
    /// used for projective (level-one) membership.
    pub fn is_pauli_up_to_phase(&self) -> bool {
        self.detect_pauli_up_to_phase().is_some()
    }

    /// M = ζ·E with E a Hermitian Pauli representative and ζ one of the
    /// eight unit phases ±ω^j; the decomposition of Clifford quotients.
    pub fn detect_pauli_up_to_phase(&self) -> Option<(PauliOp, RingScalar)> {
        let (class, phi) = self.monomial_class()?;
        if !phi.is_unit_phase() {
            return None;
        }
        let e = PauliOp::hermitian_rep(class.vector());
        // M = φ·X(x)Z(z) = φ·i^{−c_E}·E.
        let zeta = &phi * &RingScalar::i_pow((4 - e.phase_exp() % 4) % 4);
        Some((e, zeta))
    }

    /// Common part of Pauli detection: M = phase · X(x)Z(z) for some scalar
    /// `phase`; returns the (x, z) class (c = 0) and the scalar.
    fn monomial_class(&self) -> Option<(PauliOp, RingScalar)> {
        let dim = self.dim;
        let n = self.n;
        // Column 0: exactly one nonzero, at row a = index-mask of x.
        let mut a = None;
        for r in 0..dim {
            if !self.get(r, 0).is_zero() {
                if a.is_some() {
                    return None;
                }
                a = Some(r);
            }
        }
        let a = a?;
        let phi = self.get(a, 0).clone();
        // Read z off the basis columns e_j, then verify every column exactly.
        let mut zm = 0u64;
        for bit in 0..n {
            let col = 1usize << bit;
            let e = self.get(col ^ a, col);
            if *e == phi {
                // z bit clear
            } else if *e == -&phi {
                zm |= 1 << bit;
            } else {
                return None;
            }
        }
        for col in 0..dim {
            let expect_neg = (col as u64 & zm).count_ones() % 2 == 1;
            for row in 0..dim {
                let e = self.get(row, col);
                if row == col ^ a {
                    let want = if expect_neg { -&phi } else { phi.clone() };
                    if *e != want {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        let x = index_to_qubit_mask(a as u64, n);
        let z = index_to_qubit_mask(zm, n);
        Some((PauliOp::new(n, x, z, 0), phi))
    }

    /// Tr(E·U) computed through the monomial structure of E; O(dim) instead
    /// of a full product.
    pub fn trace_with_pauli(&self, p: &PauliOp) -> RingScalar {
        assert_eq!(p.n(), self.n);
        let xm = qubit_to_index_mask(p.x_bits(), self.n) as usize;
        let zm = qubit_to_index_mask(p.z_bits(), self.n);
        let phase = RingScalar::i_pow(p.phase_exp());
        let mut acc = RingScalar::zero();
        for c in 0..self.dim {
            // E[c][c^xm] = i^t (−1)^{z·(c⊕xm)}
            let u = self.get(c ^ xm, c);
            if u.is_zero() {
                continue;
            }
            let sign = ((c ^ xm) as u64 & zm).count_ones() % 2 == 1;
            let term = u * &phase;
            acc = if sign { &acc - &term } else { &acc + &term };
        }
        acc
    }

    /// Canonical-phase fingerprint: the matrix is serialized under all eight
    /// global phases ω^j and the lexicographically smallest encoding wins, so
    /// gates equal up to a unit phase share a fingerprint.
    pub fn fingerprint(&self) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        let mut rotated: Vec<RingScalar> = self.entries.clone();
        for _ in 0..8 {
            let mut buf = Vec::with_capacity(self.entries.len() * 8);
            buf.extend_from_slice(&(self.dim as u32).to_le_bytes());
            for e in &rotated {
                e.encode_into(&mut buf);
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf);
            }
            for e in rotated.iter_mut() {
                *e = e.mul_omega();
            }
        }
        best.unwrap()
    }
}

/// Entrywise sum; the result is generally not unitary, so this stays a
/// crate-internal building block for expansions and identity checks.
pub(crate) fn matrix_sum(a: &ExactUnitary, b: &ExactUnitary) -> ExactUnitary {
    assert_eq!(a.dim, b.dim);
    let dim = a.dim;
    let mut out = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            out.push(a.get(i, j) + b.get(i, j));
        }
    }
    ExactUnitary {
        n: a.n,
        dim,
        entries: out,
    }
}

/// Maps a qubit mask (bit i−1 ↔ qubit i) to a basis-index mask
/// (bit n−i ↔ qubit i), i.e. reverses the low n bits.
pub(crate) fn qubit_to_index_mask(mask: u64, n: usize) -> u64 {
    let mut out = 0;
    for q in 0..n {
        if (mask >> q) & 1 == 1 {
            out |= 1 << (n - 1 - q);
        }
    }
    out
}

pub(crate) fn index_to_qubit_mask(mask: u64, n: usize) -> u64 {
    qubit_to_index_mask(mask, n)
}

impl fmt::Debug for ExactUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactUnitary(n={})", self.n)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
