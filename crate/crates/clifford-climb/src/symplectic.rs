//! The binary symplectic group Sp(2n): transvections, involutions,
//! hyperbolicity, residue spaces, and transvection factorizations.
//!
//! Vectors are paired by ⟨(a,b),(c,d)⟩ = a·dᵀ + b·cᵀ, i.e. Ω = [[0,I],[I,0]].
//! A matrix F is symplectic when FΩFᵀ = Ω; it acts on row vectors, v ↦ vF.

use crate::gf2::BinMatrix;
use crate::pauli::SymplecticVector;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("matrix does not satisfy FΩFᵀ = Ω")]
    NotSymplectic,
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("vectors are not linearly independent")]
    NotIndependent,
    #[error("vectors are not pairwise symplectically orthogonal")]
    NotIsotropic,
    #[error("no transvection decomposition found (internal error)")]
    DecompositionNotFound,
}

/// A 2n × 2n symplectic matrix over GF(2); constructors validate FΩFᵀ = Ω.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymplecticMatrix {
    n: usize,
    m: BinMatrix,
}

/// Basis of the residue space Res(F) = rowspace(I + F).
#[derive(Clone, Debug, Serialize)]
pub struct ResidueSpace {
    pub basis: Vec<SymplecticVector>,
}

impl ResidueSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        let mut cur = v.bits();
        for b in &self.basis {
            let lead = 63 - b.bits().leading_zeros();
            if (cur >> lead) & 1 == 1 {
                cur ^= b.bits();
            }
        }
        cur == 0
    }

    /// All 2^r elements, small r only.
    pub fn elements(&self) -> Vec<SymplecticVector> {
        let r = self.basis.len();
        assert!(r <= 20);
        let n = self.basis.first().map_or(1, |b| b.n());
        (0..(1u64 << r))
            .map(|mask| {
                let mut acc = 0;
                for (i, b) in self.basis.iter().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        acc ^= b.bits();
                    }
                }
                SymplecticVector::new(n, acc)
            })
            .collect()
    }
}

impl SymplecticMatrix {
    pub fn new(n: usize, m: BinMatrix) -> Result<Self, SymplecticError> {
        if m.rows() != 2 * n || m.cols() != 2 * n || !preserves_form(&m, n) {
            return Err(SymplecticError::NotSymplectic);
        }
        Ok(SymplecticMatrix { n, m })
    }

    pub fn identity(n: usize) -> Self {
        SymplecticMatrix {
            n,
            m: BinMatrix::identity(2 * n),
        }
    }

    /// The transvection T_v = I + Ω vᵀ v, acting as w ↦ w + ⟨w, v⟩ v.
    pub fn transvection(v: &SymplecticVector) -> Self {
        let n = v.n();
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..2 * n {
            let e = SymplecticVector::new(n, 1 << i);
            let row = if e.inner(v) {
                (1 << i) ^ v.bits()
            } else {
                1 << i
            };
            rows.push(row);
        }
        SymplecticMatrix {
            n,
            m: BinMatrix::from_rows(rows, 2 * n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &BinMatrix {
        &self.m
    }

    /// Block form [[B, 0], [0, B^{-T}]] of a basis-change matrix B.
    pub fn from_linear(b: &BinMatrix) -> Result<Self, SymplecticError> {
        let n = b.rows();
        let binv_t = b
            .inverse()
            .map_err(|_| SymplecticError::NotSymplectic)?
            .transpose();
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            rows.push(b.row(i));
        }
        for i in 0..n {
            rows.push(binv_t.row(i) << n);
        }
        SymplecticMatrix::new(n, BinMatrix::from_rows(rows, 2 * n))
    }

    /// Block form [[I, A], [0, I]] of a symmetric A (the diagonal-gate shape).
    pub fn from_upper_block(a: &BinMatrix) -> Result<Self, SymplecticError> {
        let n = a.rows();
        if !a.is_symmetric() {
            return Err(SymplecticError::NotSymplectic);
        }
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            rows.push((1 << i) | (a.row(i) << n));
        }
        for i in 0..n {
            rows.push(1 << (n + i));
        }
        SymplecticMatrix::new(n, BinMatrix::from_rows(rows, 2 * n))
    }

    pub fn apply(&self, v: &SymplecticVector) -> SymplecticVector {
        SymplecticVector::new(self.n, self.m.apply_row(v.bits()))
    }

    pub fn mul(&self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.n, rhs.n);
        SymplecticMatrix {
            n: self.n,
            m: self.m.mul(&rhs.m),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m == BinMatrix::identity(2 * self.n)
    }

    /// F⁻¹ = Ω Fᵀ Ω, from FΩFᵀ = Ω.
    pub fn inverse(&self) -> SymplecticMatrix {
        let om = omega(self.n);
        SymplecticMatrix {
            n: self.n,
            m: om.mul(&self.m.transpose()).mul(&om),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.mul(self).is_identity()
    }

    /// ⟨vF, v⟩ = 0 for all v, decided in O(n²): the Gram matrix FΩ of the
    /// quadratic form must be symmetric with zero diagonal.
    pub fn is_hyperbolic(&self) -> bool {
        let fo = self.m.mul(&omega(self.n));
        fo.is_symmetric() && fo.has_zero_diagonal()
    }

    /// The defining ∀v quantifier, kept as an independent cross-check.
    pub fn is_hyperbolic_bruteforce(&self) -> bool {
        let dim = 2 * self.n;
        assert!(dim <= 24);
        (0..(1u64 << dim)).all(|bits| {
            let v = SymplecticVector::new(self.n, bits);
            !self.apply(&v).inner(&v)
        })
    }

    /// A vector witnessing non-hyperbolicity: ⟨vF, v⟩ = 1.
    pub fn hyperbolic_violation(&self) -> Option<SymplecticVector> {
        let fo = self.m.mul(&omega(self.n));
        let dim = 2 * self.n;
        for i in 0..dim {
            if fo.get(i, i) {
                return Some(SymplecticVector::new(self.n, 1 << i));
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if fo.get(i, j) != fo.get(j, i) {
                    return Some(SymplecticVector::new(self.n, (1 << i) | (1 << j)));
                }
            }
        }
        None
    }

    pub fn residue_space(&self) -> ResidueSpace {
        let i_plus_f = self.m.add(&BinMatrix::identity(2 * self.n));
        let (basis, _) = i_plus_f.row_space();
        ResidueSpace {
            basis: basis
                .into_iter()
                .map(|b| SymplecticVector::new(self.n, b))
                .collect(),
        }
    }

    /// Factors an involution as T_{v₁}···T_{v_r} (or T_{v₁}···T_{v_r}·T_v with
    /// v = v₁+…+v_r in the hyperbolic case), all vectors inside Res(F).
    ///
    /// The factorization is found constructively: writing Ω(I+F) = WᵀSW over a
    /// residue basis W, a congruence transform brings the symmetric S to I_r
    /// (non-alternating) or to I_r + 𝟙ᵀ𝟙 (alternating), which is exactly the
    /// Gram shape a transvection product produces.
    pub fn decompose_involution(&self) -> Result<Vec<SymplecticVector>, SymplecticError> {
        if !self.is_involution() {
            return Err(SymplecticError::NotInvolution);
        }
        let n = self.n;
        let dim = 2 * n;
        let res = self.residue_space();
        let r = res.dim();
        if r == 0 {
            return Ok(Vec::new());
        }
        // N = Ω(I+F): swap the x/z row blocks of I+F. Symmetric for involutions.
        let i_plus_f = self.m.add(&BinMatrix::identity(dim));
        let mut n_rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let src = if i < n { i + n } else { i - n };
            n_rows.push(i_plus_f.row(src));
        }
        let nmat = BinMatrix::from_rows(n_rows, dim);
        let w: Vec<u64> = {
            let (basis, _) = nmat.row_space();
            basis
        };
        debug_assert_eq!(w.len(), r);
        // Coordinates of each row of N in the rref basis W.
        let coords = |row: u64| -> u64 {
            let mut cur = row;
            let mut xbits = 0u64;
            for (idx, &b) in w.iter().enumerate() {
                let lead = 63 - b.leading_zeros();
                if (cur >> lead) & 1 == 1 {
                    cur ^= b;
                    xbits |= 1 << idx;
                }
            }
            debug_assert_eq!(cur, 0);
            xbits
        };
        // N = WᵀSW: reading S off the pivot rows of C where N = C·W.
        let pivots: Vec<usize> = w
            .iter()
            .map(|&b| (63 - b.leading_zeros()) as usize)
            .collect();
        let s_rows: Vec<u64> = pivots.iter().map(|&p| coords(nmat.row(p))).collect();
        let (mut g, alternating) = sym_congruence_normalize(&s_rows, r);
        if alternating {
            // Compose with Q⁻¹ where Q(J+I)Qᵀ is the Ω-block form, so that the
            // overall transform sends S to J+I = I + 𝟙ᵀ𝟙.
            let ji: Vec<u64> = (0..r).map(|i| (lowmask(r)) ^ (1 << i)).collect();
            let (q, alt2) = sym_congruence_normalize(&ji, r);
            debug_assert!(alt2);
            let qinv = BinMatrix::from_rows(q, r)
                .inverse()
                .map_err(|_| SymplecticError::DecompositionNotFound)?;
            let gm = qinv.mul(&BinMatrix::from_rows(g, r));
            g = (0..r).map(|i| gm.row(i)).collect();
        }
        let ginv = BinMatrix::from_rows(g, r)
            .inverse()
            .map_err(|_| SymplecticError::DecompositionNotFound)?;
        // W' = G^{-T} W.
        let mut vecs = Vec::with_capacity(r + 1);
        for i in 0..r {
            let mut acc = 0u64;
            for (j, &wrow) in w.iter().enumerate() {
                if ginv.get(j, i) {
                    acc ^= wrow;
                }
            }
            vecs.push(SymplecticVector::new(n, acc));
        }
        if alternating {
            let sum = vecs.iter().fold(0u64, |acc, v| acc ^ v.bits());
            vecs.push(SymplecticVector::new(n, sum));
        }
        // The construction is exact; verify and fail loudly if not.
        let mut prod = SymplecticMatrix::identity(n);
        for v in &vecs {
            prod = prod.mul(&SymplecticMatrix::transvection(v));
        }
        if prod != *self || !vecs.iter().all(|v| res.contains(v)) {
            return Err(SymplecticError::DecompositionNotFound);
        }
        Ok(vecs)
    }

    /// Factors an arbitrary symplectic matrix into transvections,
    /// F = T_{w₁}·T_{w₂}···T_{w_m}, by fixing the basis pairs (eᵢ, e_{n+i})
    /// one at a time.
    pub fn transvection_factorization(&self) -> Vec<SymplecticVector> {
        let n = self.n;
        let dim = 2 * n;
        let mut m = self.clone();
        let mut ws: Vec<SymplecticVector> = Vec::new();
        let mut fixed: Vec<SymplecticVector> = Vec::new();

        let mut apply =
            |m: &mut SymplecticMatrix, ws: &mut Vec<SymplecticVector>, v: SymplecticVector| {
                *m = m.mul(&SymplecticMatrix::transvection(&v));
                ws.push(v);
            };
        // Maps u to target by one or two transvections whose vectors are
        // orthogonal to every fixed vector f exactly when ⟨f,u⟩ = ⟨f,target⟩,
        // which holds by symplecticity of the remaining rows.
        let map_to = |m: &mut SymplecticMatrix,
                      ws: &mut Vec<SymplecticVector>,
                      apply: &mut dyn FnMut(
            &mut SymplecticMatrix,
            &mut Vec<SymplecticVector>,
            SymplecticVector,
        ),
                      u: SymplecticVector,
                      target: SymplecticVector,
                      fixed: &[SymplecticVector]| {
            if u == target {
                return;
            }
            if u.inner(&target) {
                apply(m, ws, SymplecticVector::new(n, u.bits() ^ target.bits()));
                return;
            }
            let mut cons: Vec<(u64, bool)> =
                vec![(u.omega_row(), true), (target.omega_row(), true)];
            for f in fixed {
                cons.push((f.omega_row(), f.inner(&u)));
            }
            let w = BinMatrix::solve_parity_system(&cons, dim)
                .expect("intermediate transvection vector must exist");
            let w = SymplecticVector::new(n, w);
            apply(m, ws, SymplecticVector::new(n, u.bits() ^ w.bits()));
            apply(m, ws, SymplecticVector::new(n, w.bits() ^ target.bits()));
        };

        for i in 0..n {
            let ei = SymplecticVector::new(n, 1 << i);
            let eni = SymplecticVector::new(n, 1 << (n + i));
            let u = m.apply(&ei);
            map_to(&mut m, &mut ws, &mut apply, u, ei, &fixed);
            fixed.push(ei);
            let v = m.apply(&eni);
            map_to(&mut m, &mut ws, &mut apply, v, eni, &fixed);
            fixed.push(eni);
        }
        debug_assert!(m.is_identity());
        // F·T_{w₁}···T_{w_m} = I ⟹ F = T_{w_m}···T_{w₁} (transvections are involutions).
        ws.reverse();
        ws
    }

    /// Completes pairwise-orthogonal independent vectors u₁..u_k to a full
    /// symplectic basis and returns G = B⁻¹, so that uᵢG = e_{n+i}.
    pub fn complete_isotropic(
        us: &[SymplecticVector],
    ) -> Result<SymplecticMatrix, SymplecticError> {
        let n = us.first().expect("at least one vector").n();
        let dim = 2 * n;
        let k = us.len();
        assert!(k <= n);
        let (_, rank) =
            BinMatrix::from_rows(us.iter().map(|u| u.bits()).collect(), dim).row_space();
        if rank != k {
            return Err(SymplecticError::NotIndependent);
        }
        for (i, u) in us.iter().enumerate() {
            for v in &us[i + 1..] {
                if u.inner(v) {
                    return Err(SymplecticError::NotIsotropic);
                }
            }
        }
        let mut zs: Vec<SymplecticVector> = us.to_vec();
        let mut xs: Vec<SymplecticVector> = Vec::new();
        // Partners for the given z's.
        for i in 0..k {
            let mut cons: Vec<(u64, bool)> = Vec::new();
            for (j, z) in zs.iter().enumerate() {
                cons.push((z.omega_row(), j == i));
            }
            for x in &xs {
                cons.push((x.omega_row(), false));
            }
            let w =
                BinMatrix::solve_parity_system(&cons, dim).ok_or(SymplecticError::NotIsotropic)?;
            xs.push(SymplecticVector::new(n, w));
        }
        // Fill the remaining pairs from the symplectic complement. Any nonzero
        // solution of the homogeneous system is independent of the chosen
        // vectors, because the chosen family pairs nondegenerately with itself.
        while zs.len() < n {
            let cons: Vec<(u64, bool)> = xs
                .iter()
                .chain(zs.iter())
                .map(|t| (t.omega_row(), false))
                .collect();
            let z = nonzero_nullspace_vector(&cons, dim).ok_or(SymplecticError::NotIsotropic)?;
            let z = SymplecticVector::new(n, z);
            let mut cons2: Vec<(u64, bool)> = Vec::new();
            for (j, zz) in zs.iter().enumerate() {
                let _ = j;
                cons2.push((zz.omega_row(), false));
            }
            cons2.push((z.omega_row(), true));
            for x in &xs {
                cons2.push((x.omega_row(), false));
            }
            let w =
                BinMatrix::solve_parity_system(&cons2, dim).ok_or(SymplecticError::NotIsotropic)?;
            zs.push(z);
            xs.push(SymplecticVector::new(n, w));
        }
        let rows: Vec<u64> = xs.iter().chain(zs.iter()).map(|v| v.bits()).collect();
        let b = SymplecticMatrix::new(n, BinMatrix::from_rows(rows, dim))?;
        let ginv = b.m.inverse().map_err(|_| SymplecticError::NotIndependent)?;
        let g = SymplecticMatrix::new(n, ginv)?;
        for (i, u) in us.iter().enumerate() {
            debug_assert_eq!(g.apply(u).bits(), 1 << (n + i));
        }
        Ok(g)
    }
}

/// Ω_n = [[0, I], [I, 0]].
pub fn omega(n: usize) -> BinMatrix {
    let mut rows = Vec::with_capacity(2 * n);
    for i in 0..n {
        rows.push(1u64 << (n + i));
    }
    for i in 0..n {
        rows.push(1u64 << i);
    }
    BinMatrix::from_rows(rows, 2 * n)
}

fn preserves_form(m: &BinMatrix, n: usize) -> bool {
    let dim = 2 * n;
    for i in 0..dim {
        let vi = SymplecticVector::new(n, m.row(i));
        for j in i..dim {
            let vj = SymplecticVector::new(n, m.row(j));
            let expected =
                SymplecticVector::new(n, 1 << i).inner(&SymplecticVector::new(n, 1 << j));
            if vi.inner(&vj) != expected {
                return false;
            }
        }
    }
    true
}

fn lowmask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn nonzero_nullspace_vector(cons: &[(u64, bool)], unknowns: usize) -> Option<u64> {
    // Eliminate; free column gives a nonzero kernel vector.
    let mut mat: Vec<u64> = cons.iter().map(|&(row, _)| row).collect();
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
    let free = (0..unknowns).find(|c| !pivots.contains(c))?;
    let mut v = 1u64 << free;
    for (i, &c) in pivots.iter().enumerate() {
        if (mat[i] >> free) & 1 == 1 {
            v |= 1 << c;
        }
    }
    Some(v)
}

/// Brings an invertible symmetric S over GF(2) to congruence normal form:
/// returns (G, alternating) with G·S·Gᵀ = I_r when S has a nonzero diagonal
/// somewhere in its orbit, or the Ω-block form ⊕[[0,1],[1,0]] when S is
/// alternating (zero diagonal, even rank).
fn sym_congruence_normalize(s_rows: &[u64], r: usize) -> (Vec<u64>, bool) {
    let mut s: Vec<u64> = s_rows.to_vec();
    let mut g: Vec<u64> = (0..r).map(|i| 1u64 << i).collect();

    // Congruent row operation S ← (I+E_{ij}) S (I+E_{ij})ᵀ.
    fn add_row(s: &mut [u64], g: &mut [u64], i: usize, j: usize) {
        g[i] ^= g[j];
        s[i] ^= s[j];
        for row in s.iter_mut() {
            if (*row >> j) & 1 == 1 {
                *row ^= 1 << i;
            }
        }
    }
    fn swap_rows(s: &mut [u64], g: &mut [u64], i: usize, j: usize) {
        g.swap(i, j);
        s.swap(i, j);
        for row in s.iter_mut() {
            let bi = (*row >> i) & 1;
            let bj = (*row >> j) & 1;
            if bi != bj {
                *row ^= (1 << i) | (1 << j);
            }
        }
    }

    let mut done = 0;
    // Diagonal pivots first.
    while done < r {
        match (done..r).find(|&i| (s[i] >> i) & 1 == 1) {
            Some(p) => {
                if p != done {
                    swap_rows(&mut s, &mut g, done, p);
                }
                for i in 0..r {
                    if i != done && (s[i] >> done) & 1 == 1 {
                        add_row(&mut s, &mut g, i, done);
                    }
                }
                done += 1;
            }
            None => break,
        }
    }
    let k = done;
    // The remainder is alternating; pair it into Ω blocks.
    while done < r {
        let p = (done + 1..r)
            .find(|&i| (s[done] >> i) & 1 == 1)
            .expect("alternating block of an invertible matrix pairs up");
        if p != done + 1 {
            swap_rows(&mut s, &mut g, done + 1, p);
        }
        for i in 0..r {
            if i != done && i != done + 1 {
                if (s[i] >> (done + 1)) & 1 == 1 {
                    add_row(&mut s, &mut g, i, done);
                }
                if (s[i] >> done) & 1 == 1 {
                    add_row(&mut s, &mut g, i, done + 1);
                }
            }
        }
        done += 2;
    }
    if k == 0 {
        return (g, true);
    }
    if k < r {
        // Mixed case: absorb each Ω block into the identity part. The rows
        // (1,1,0), (1,0,1), (1,1,1) over coordinates (p, q, q+1) send
        // diag(1) ⊕ [[0,1],[1,0]] to I₃.
        let mut q = k;
        while q < r {
            let p = q - 1;
            let (rp, rq, rq1) = (g[p], g[q], g[q + 1]);
            g[p] = rp ^ rq;
            g[q] = rp ^ rq1;
            g[q + 1] = rp ^ rq ^ rq1;
            q += 2;
        }
    }
    (g, false)
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticMatrix(n={})\n{}", self.n, self)
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        for i in 0..2 * n {
            if i == n {
                writeln!(f, "{}-+-{}", "-".repeat(n), "-".repeat(n))?;
            }
            let row = self.m.row(i);
            for j in 0..n {
                write!(f, "{}", (row >> j) & 1)?;
            }
            write!(f, " | ")?;
            for j in n..2 * n {
                write!(f, "{}", (row >> j) & 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Enumerates all of Sp(2n) by closure over transvections; practical for
/// n = 2 (720 elements), used by the exhaustive verification suite.
pub fn enumerate_sp(n: usize) -> Vec<SymplecticMatrix> {
    assert!(n <= 2, "exhaustive enumeration is desk-scale only");
    let dim = 2 * n;
    let gens: Vec<SymplecticMatrix> = (1..(1u64 << dim))
        .map(|bits| SymplecticMatrix::transvection(&SymplecticVector::new(n, bits)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let id = SymplecticMatrix::identity(n);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    let mut all = Vec::new();
    while let Some(m) = frontier.pop() {
        all.push(m.clone());
        for gen in &gens {
            let next = m.mul(gen);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    all
}
