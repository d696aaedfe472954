//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are stored as `u64` masks (bit j of row i is the (i, j) entry), which
//! caps matrices at 64 columns. The symplectic layer works in dimension 2n
//! with n ≤ 32, far beyond the dense-unitary budget, so the cap is harmless.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A rows × cols matrix over GF(2), one `u64` per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BinMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "BinMatrix supports at most 64 columns");
        BinMatrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: Vec<u64>, cols: usize) -> Self {
        assert!(cols <= 64);
        let mask = mask(cols);
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row has bits past `cols`"
        );
        BinMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&r| r == 0)
    }

    /// Row-vector times matrix: returns Σ_i v_i · row_i.
    pub fn apply_row(&self, v: u64) -> u64 {
        let mut acc = 0;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= self.data[i];
            bits &= bits - 1;
        }
        acc
    }

    pub fn mul(&self, rhs: &BinMatrix) -> BinMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let data = self.data.iter().map(|&r| rhs.apply_row(r)).collect();
        BinMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    pub fn add(&self, rhs: &BinMatrix) -> BinMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a ^ b)
            .collect();
        BinMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            let mut bits = self.data[i];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                t.data[j] |= 1 << i;
                bits &= bits - 1;
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self.get(i, i))
    }

    /// Reduced row echelon basis of the row space, plus the rank.
    pub fn row_space(&self) -> (Vec<u64>, usize) {
        let mut basis: Vec<u64> = Vec::new();
        for &row in &self.data {
            let mut cur = row;
            for &b in &basis {
                let lead = 63 - b.leading_zeros();
                if (cur >> lead) & 1 == 1 {
                    cur ^= b;
                }
            }
            if cur != 0 {
                basis.push(cur);
            }
        }
        // Back-substitute so every pivot column is cleared elsewhere, then
        // order by descending pivot.
        for i in 0..basis.len() {
            let lead = 63 - basis[i].leading_zeros();
            for j in 0..basis.len() {
                if j != i && (basis[j] >> lead) & 1 == 1 {
                    basis[j] ^= basis[i];
                }
            }
        }
        basis.sort_by_key(|b| std::cmp::Reverse(*b));
        let rank = basis.len();
        (basis, rank)
    }

    pub fn rank(&self) -> usize {
        self.row_space().1
    }

    pub fn inverse(&self) -> Result<BinMatrix, Gf2Error> {
        if self.rows != self.cols {
            return Err(Gf2Error::DimensionMismatch(
                "inverse needs a square matrix".into(),
            ));
        }
        let n = self.rows;
        // Augmented elimination: low bits the matrix, high bits the identity.
        let mut aug: Vec<u128> = (0..n)
            .map(|i| self.data[i] as u128 | (1u128 << (64 + i)))
            .collect();
        // Invertible matrices pivot on every column, so row c is the pivot.
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| (aug[i] >> c) & 1 == 1) else {
                return Err(Gf2Error::Singular);
            };
            aug.swap(c, p);
            for i in 0..n {
                if i != c && (aug[i] >> c) & 1 == 1 {
                    aug[i] ^= aug[c];
                }
            }
        }
        let data = aug.iter().map(|&row| (row >> 64) as u64).collect();
        Ok(BinMatrix {
            rows: n,
            cols: n,
            data,
        })
    }

    /// Any solution w of the system { parity(row_i & w) = rhs_i }, over
    /// `unknowns` bits, or None when inconsistent.
    pub fn solve_parity_system(constraints: &[(u64, bool)], unknowns: usize) -> Option<u64> {
        let mut mat: Vec<u128> = constraints
            .iter()
            .map(|&(row, rhs)| row as u128 | ((rhs as u128) << unknowns))
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..unknowns {
            let Some(p) = (r..mat.len()).find(|&i| (mat[i] >> c) & 1 == 1) else {
                continue;
            };
            mat.swap(r, p);
            for i in 0..mat.len() {
                if i != r && (mat[i] >> c) & 1 == 1 {
                    mat[i] ^= mat[r];
                }
            }
            pivots.push(c);
            r += 1;
        }
        for row in &mat[r..] {
            if (row >> unknowns) & 1 == 1 {
                return None; // 0 = 1
            }
        }
        let mut w = 0u64;
        for (i, &c) in pivots.iter().enumerate() {
            if (mat[i] >> unknowns) & 1 == 1 {
                w |= 1 << c;
            }
        }
        Some(w)
    }

    /// Renders each row as a string of '0'/'1' of length `cols`.
    pub fn bit_rows(&self) -> Vec<String> {
        self.data
            .iter()
            .map(|&r| {
                (0..self.cols)
                    .map(|j| if (r >> j) & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

fn mask(cols: usize) -> u64 {
    if cols == 64 {
        u64::MAX
    } else {
        (1u64 << cols) - 1
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{}", self.rows, self.cols)?;
        for row in self.bit_rows() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl Serialize for BinMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = self.bit_rows();
        let mut seq = serializer.serialize_seq(Some(rows.len()))?;
        for r in rows {
            seq.serialize_element(&r)?;
        }
        seq.end()
    }
}
