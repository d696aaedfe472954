//! Named verification suites: `paper` (the closed-form identities and
//! worked examples behind the climb characterization), `counting`
//! (climber-family sizes), and `symplectic` (exhaustive Sp(4) cross-checks
//! against brute-force oracles).
//!
//! Every check is independent of the code path it validates wherever an
//! oracle is available: hyperbolicity is compared against the ∀v quantifier,
//! conjugation tables against dense matrix products, family sizes against
//! full predicate scans.

use crate::clifford::{
    clifford_from_symplectic, climber_count, climber_gate, diagonal_clifford,
    enumerate_climber_family, pauli_expand, symplectic_of, ClimberFamily,
};
use crate::gates;
use crate::gf2::BinMatrix;
use crate::hierarchy::{
    hat_controlled_x_identity, verify_controlled_x_rules, Analyzer, Budget, Verdict,
};
use crate::pauli::{enumerate_pauli_classes, PauliOp, SymplecticVector};
use crate::ring::RingScalar;
use crate::symplectic::{enumerate_sp, SymplecticMatrix};
use crate::unitary::ExactUnitary;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub tag: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(tag: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            tag: tag.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paper,
    Counting,
    Symplectic,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Suite::Paper),
            "counting" => Ok(Suite::Counting),
            "symplectic" => Ok(Suite::Symplectic),
            other => Err(format!(
                "unknown suite `{other}` (paper|counting|symplectic)"
            )),
        }
    }
}

pub fn run_suite(suite: Suite, n: usize, budget: &Budget) -> Vec<CheckResult> {
    match suite {
        Suite::Paper => paper_suite(n, budget),
        Suite::Counting => counting_suite(n),
        Suite::Symplectic => symplectic_suite(n),
    }
}

// ---------------------------------------------------------------- counting

pub fn counting_suite(n_max: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 2..=n_max.max(2) {
        for family in [ClimberFamily::Diagonal, ClimberFamily::Permutation] {
            let members = enumerate_climber_family(family, n);
            let formula = climber_count(family, n);
            let tag = format!("counting-{:?}-n{n}", family).to_lowercase();
            out.push(CheckResult::new(
                &tag,
                members.len() as u64 == formula,
                format!("enumerated {} vs formula {}", members.len(), formula),
            ));
            // Independent oracle: full scan of the defining predicate.
            if n <= 4 {
                let scanned = scan_family(family, n);
                out.push(CheckResult::new(
                    &format!("{tag}-scan"),
                    scanned == members.len() as u64,
                    format!("predicate scan {} vs enumerated {}", scanned, members.len()),
                ));
            }
        }
    }
    out
}

/// Counts family members by scanning every candidate matrix.
fn scan_family(family: ClimberFamily, n: usize) -> u64 {
    match family {
        ClimberFamily::Diagonal => {
            // all symmetric zero-diagonal A with rank 2
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            let mut count = 0;
            for mask in 0u64..(1 << pairs.len()) {
                let mut m = BinMatrix::zero(n, n);
                for (bit, &(i, j)) in pairs.iter().enumerate() {
                    if (mask >> bit) & 1 == 1 {
                        m.set(i, j, true);
                        m.set(j, i, true);
                    }
                }
                if m.rank() == 2 {
                    count += 1;
                }
            }
            count
        }
        ClimberFamily::Permutation => {
            // all involutive invertible B with rank(I + B) = 1
            let mut count = 0;
            let total = 1u64 << (n * n);
            for code in 0..total {
                let rows: Vec<u64> = (0..n).map(|i| (code >> (i * n)) & ((1 << n) - 1)).collect();
                let b = BinMatrix::from_rows(rows, n);
                if b.inverse().is_err() {
                    continue;
                }
                if b.mul(&b) != BinMatrix::identity(n) {
                    continue;
                }
                if b.add(&BinMatrix::identity(n)).rank() == 1 {
                    count += 1;
                }
            }
            count
        }
    }
}

// -------------------------------------------------------------- symplectic

pub fn symplectic_suite(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let _ = n;
    let sp4 = enumerate_sp(2);
    out.push(CheckResult::new(
        "sp4-order",
        sp4.len() == 720,
        format!("|Sp(4)| = {}", sp4.len()),
    ));

    let mut hyp_mismatch = 0usize;
    for f in &sp4 {
        if f.is_hyperbolic() != f.is_hyperbolic_bruteforce() {
            hyp_mismatch += 1;
        }
    }
    out.push(CheckResult::new(
        "sp4-hyperbolic-oracle",
        hyp_mismatch == 0,
        format!("{hyp_mismatch} mismatches against the ∀v quantifier over 720 elements"),
    ));

    let involutions: Vec<&SymplecticMatrix> = sp4.iter().filter(|f| f.is_involution()).collect();
    let mut lcom_bad = 0usize;
    let mut decomp_bad = 0usize;
    let mut decomp_long = 0usize;
    for f in &involutions {
        let res = f.residue_space();
        for u in &res.basis {
            for v in &res.basis {
                if u.inner(v) {
                    lcom_bad += 1;
                }
            }
        }
        match f.decompose_involution() {
            Ok(vecs) => {
                if vecs.len() > res.dim() + 1 {
                    decomp_long += 1;
                }
                let mut prod = SymplecticMatrix::identity(2);
                for v in &vecs {
                    prod = prod.mul(&SymplecticMatrix::transvection(v));
                }
                if &prod != *f || !vecs.iter().all(|v| res.contains(v)) {
                    decomp_bad += 1;
                }
            }
            Err(_) => decomp_bad += 1,
        }
    }
    out.push(CheckResult::new(
        "sp4-involution-residue-isotropic",
        lcom_bad == 0,
        format!(
            "{} involutions checked, {lcom_bad} orthogonality violations",
            involutions.len()
        ),
    ));
    out.push(CheckResult::new(
        "sp4-involution-decomposition",
        decomp_bad == 0 && decomp_long == 0,
        format!(
            "{} involutions reconstructed ({} hyperbolic)",
            involutions.len(),
            involutions.iter().filter(|f| f.is_hyperbolic()).count()
        ),
    ));

    let mut roundtrip_bad = 0usize;
    for f in &sp4 {
        let c = clifford_from_symplectic(f);
        match symplectic_of(&c) {
            Ok(rep) if *rep.f() == *f => {}
            _ => roundtrip_bad += 1,
        }
    }
    out.push(CheckResult::new(
        "sp4-clifford-round-trip",
        roundtrip_bad == 0,
        format!("{roundtrip_bad} failures over 720 symplectic matrices"),
    ));

    // Sampled hyperbolicity cross-check in Sp(6) and Sp(8).
    let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
    let mut sampled_bad = 0usize;
    for half in [3usize, 4] {
        for _ in 0..60 {
            let mut f = SymplecticMatrix::identity(half);
            for _ in 0..rng.gen_range(0..8) {
                let bits = rng.gen_range(1..(1u64 << (2 * half)));
                f = f.mul(&SymplecticMatrix::transvection(&SymplecticVector::new(
                    half, bits,
                )));
            }
            if f.is_hyperbolic() != f.is_hyperbolic_bruteforce() {
                sampled_bad += 1;
            }
        }
    }
    out.push(CheckResult::new(
        "sampled-sp6-sp8-hyperbolic-oracle",
        sampled_bad == 0,
        format!("{sampled_bad} mismatches over 120 sampled elements"),
    ));
    out
}

// ------------------------------------------------------------------- paper

pub fn paper_suite(n_max: usize, budget: &Budget) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let analyzer = Analyzer::new(budget.clone());

    // Square-root law on the gate library.
    let library: Vec<(&str, ExactUnitary)> = vec![
        ("X", gates::x()),
        ("Y", gates::y()),
        ("Z", gates::z()),
        ("H", gates::h()),
        ("SWAP", gates::swap()),
        ("CZ", gates::cz()),
        ("CX", gates::cx()),
        ("CCX", gates::ccx()),
        ("CSWAP", gates::cswap()),
    ];
    let mut bad = Vec::new();
    for (name, u) in &library {
        let hat = u.hat().expect("library gate is Hermitian");
        if hat.mul(&hat) != u.scale(&RingScalar::i()) {
            bad.push(*name);
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for idx in 0..100 {
        let n = 1 + (idx % 3);
        let c = random_hermitian_clifford(&mut rng, n);
        let hat = c.hat().expect("construction is Hermitian");
        if hat.mul(&hat) != c.scale(&RingScalar::i()) {
            bad.push("random");
        }
    }
    out.push(CheckResult::new(
        "hat-square-law",
        bad.is_empty(),
        if bad.is_empty() {
            "hat(U)² = iU on the library and 100 random Hermitian Cliffords".to_string()
        } else {
            format!("failures: {bad:?}")
        },
    ));

    // Hadamard obstruction: pair (X, Z), no hierarchy level up to 4, and the
    // exact conjugate ĤXĤ† = X·Ĥ·(−iZ) = (H − Y)/√2.
    {
        let h = gates::h();
        let pair = analyzer.counter_obstruction(&h).unwrap();
        let pair_ok = pair == Some((PauliOp::x_on(1, 1), PauliOp::z_on(1, 1)));
        let hh = h.hat().unwrap();
        let mut levels_ok = true;
        for k in 2..=4 {
            if analyzer.level_at_most(&hh, k).unwrap() {
                levels_ok = false;
            }
        }
        let lhs = hh.conjugate(&gates::x());
        let rhs = gates::x()
            .mul(&hh)
            .mul(&gates::z().scale(&(-&RingScalar::i())));
        let identity_ok = lhs == rhs;
        out.push(CheckResult::new(
            "hadamard-obstruction",
            pair_ok && levels_ok && identity_ok,
            format!("pair-ok={pair_ok} levels-blocked={levels_ok} exact-conjugate={identity_ok}"),
        ));
    }

    // Obstruction conjugate identity: ÛEÛ† = E·(I−iU)/√2·(I+EE′)/√2 when UEU = E′.
    {
        let mut ok = true;
        let cases: Vec<(ExactUnitary, PauliOp)> = vec![
            (gates::h(), PauliOp::x_on(1, 1)),
            (
                pauli_sum_clifford(&PauliOp::x_on(2, 1), &PauliOp::z_on(2, 1)),
                PauliOp::x_on(2, 1),
            ),
            (
                pauli_sum_clifford(&PauliOp::new(2, 0b11, 0b01, 1), &PauliOp::z_on(2, 2)),
                PauliOp::new(2, 0b11, 0b01, 1),
            ),
        ];
        for (u, e) in &cases {
            let e_mat = ExactUnitary::from_pauli(e);
            let w = u.mul(&e_mat).mul(u);
            let Some((e2, t)) = w.detect_pauli() else {
                ok = false;
                continue;
            };
            let e2 = e2.mul_phase(t);
            if !e.vector().inner(&e2.vector()) {
                ok = false;
                continue;
            }
            let uhat = u.hat().expect("cases are Hermitian");
            let lhs = uhat.conjugate(&e_mat);
            let ee2 = ExactUnitary::from_pauli(&e.try_mul(&e2).unwrap());
            let rhs = e_mat.mul(&uhat.dagger()).mul(&hat_of_sum(&ee2));
            if lhs != rhs {
                ok = false;
            }
        }
        out.push(CheckResult::new(
            "obstruction-conjugate-identity",
            ok,
            "ÛEÛ† = E·Û†·(I+EE′)/√2 on the Hadamard and two-qubit cases",
        ));
    }

    // (E + E′)/√2 is Clifford and its conjugation table matches the
    // four-case form, exhaustively at n ≤ 2.
    {
        let mut checked = 0usize;
        let mut failures = 0usize;
        for n in 1..=2usize {
            for pe in enumerate_pauli_classes(n) {
                for pf in enumerate_pauli_classes(n) {
                    let e = PauliOp::hermitian_rep(pe.vector());
                    let f = PauliOp::hermitian_rep(pf.vector());
                    if !e.vector().inner(&f.vector()) {
                        continue;
                    }
                    let c = pauli_sum_clifford(&e, &f);
                    let (e_m, f_m) = (ExactUnitary::from_pauli(&e), ExactUnitary::from_pauli(&f));
                    let ee2 = e_m.mul(&f_m);
                    for p in enumerate_pauli_classes(n) {
                        checked += 1;
                        let p_m = ExactUnitary::from_pauli(&p);
                        let lhs = c.conjugate(&p_m);
                        let com_e = p.commutes_with(&e);
                        let com_f = p.commutes_with(&f);
                        let rhs = match (com_e, com_f) {
                            (true, true) => p_m.clone(),
                            (true, false) => p_m.mul(&ee2),
                            (false, true) => p_m.mul(&ee2).scale(&(-&RingScalar::one())),
                            (false, false) => p_m.scale(&(-&RingScalar::one())),
                        };
                        if lhs != rhs {
                            failures += 1;
                        }
                    }
                }
            }
        }
        out.push(CheckResult::new(
            "anticommuting-sum-conjugation-table",
            failures == 0,
            format!("{checked} conjugations checked, {failures} failures"),
        ));
    }

    // Square roots of Z-controls: hat(Z) = ω·S†, hat(C^{(k)}(Z)) = ω·C^{(k)}(S†).
    {
        let mut ok = gates::z().hat().unwrap() == gates::sdg().scale(&RingScalar::omega());
        for k in 1..=2usize {
            let lhs = gates::z().controlled(k).hat().unwrap();
            let rhs = gates::sdg().controlled(k).scale(&RingScalar::omega());
            ok = ok && lhs == rhs;
        }
        out.push(CheckResult::new(
            "hat-controlled-z-identity",
            ok,
            "hat(C^k(Z)) = ω·C^k(S†), k ≤ 2",
        ));
    }

    // CNOT lifting: the closed form and the five conjugation-rule families.
    out.push(CheckResult::new(
        "hat-controlled-x-closed-form",
        hat_controlled_x_identity(1) && hat_controlled_x_identity(2),
        "hat(C^k(X)) = ω·C^k(R), k ∈ {1, 2}",
    ));
    for k in 1..=2usize {
        let r = verify_controlled_x_rules(k);
        out.push(CheckResult::new(
            &format!("controlled-x-rules-k{k}"),
            r.is_ok(),
            r.err()
                .unwrap_or_else(|| "all five rule families hold".into()),
        ));
    }

    // SWAP lifting: four exact conjugation identities and the level.
    {
        let sw = gates::swap();
        let swhat = sw.hat().unwrap();
        let hxh = gates::h().tensor(&gates::h());
        let sxs = gates::s().tensor(&gates::s());
        let cz = gates::cz();
        let mut ok = true;
        for i in 1..=2usize {
            let xi = gates::x().embed(2, &[i]);
            let rhs = sw.mul(&hxh).mul(&cz).mul(&sxs).mul(&hxh).mul(&xi);
            ok = ok && swhat.conjugate(&xi) == rhs;
            let zi = gates::z().embed(2, &[i]);
            let rhs = sw.mul(&cz).mul(&sxs).mul(&zi);
            ok = ok && swhat.conjugate(&zi) == rhs;
        }
        let lvl = analyzer.min_level(&swhat, 4).unwrap();
        out.push(CheckResult::new(
            "swap-root-conjugation-identities",
            ok && lvl == Some(3),
            format!("identities={ok} min-level={lvl:?}"),
        ));
    }

    // Characterization equivalence on the full Hermitian diagonal and
    // permutation families: Climbs ⟺ hat ∈ C^(3) ⟺ residue dim ∈ {0, 2}.
    for n in 2..=n_max.min(3) {
        let (checked, failures) = characterization_equivalence(n, budget);
        out.push(CheckResult::new(
            &format!("characterization-equivalence-n{n}"),
            failures == 0,
            format!("{checked} Hermitian gates checked, {failures} disagreements"),
        ));
    }

    // Trace magnitudes over the n = 3 families: |Tr(EC)|² ∈ {0, 4^n/2^r}.
    if n_max >= 3 {
        let (checked, failures) = trace_magnitude_families(3);
        out.push(CheckResult::new(
            "trace-magnitudes-families-n3",
            failures == 0,
            format!("{checked} traces checked, {failures} off-pattern"),
        ));
    }

    if n_max >= 4 {
        out.extend(four_qubit_checks(&analyzer));
    }

    out
}

/// (E + E′)/√2 for anticommuting Hermitian Paulis.
fn pauli_sum_clifford(e: &PauliOp, f: &PauliOp) -> ExactUnitary {
    let (em, fm) = (ExactUnitary::from_pauli(e), ExactUnitary::from_pauli(f));
    let dim = em.dim();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            row.push((em.get(i, j) + fm.get(i, j)).div_sqrt2());
        }
        rows.push(row);
    }
    ExactUnitary::from_rows(e.n(), rows).expect("anticommuting Hermitian sum is unitary")
}

/// (I + M)/√2 for a matrix M with M² = −... (used for (I + EE′)/√2).
fn hat_of_sum(m: &ExactUnitary) -> ExactUnitary {
    let dim = m.dim();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut e = m.get(i, j).clone();
            if i == j {
                e = &e + &RingScalar::one();
            }
            row.push(e.div_sqrt2());
        }
        rows.push(row);
    }
    ExactUnitary::from_rows(m.n(), rows).expect("(I + EE′)/√2 is unitary")
}

/// A random Hermitian Clifford: Q·D·Q† with D a random real ±1 diagonal
/// Clifford and Q a random product of Clifford transvections.
pub fn random_hermitian_clifford(rng: &mut StdRng, n: usize) -> ExactUnitary {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut a = BinMatrix::zero(n, n);
    for &(i, j) in &pairs {
        if rng.gen_bool(0.5) {
            a.set(i, j, true);
            a.set(j, i, true);
        }
    }
    let mut d = diagonal_clifford(&a).expect("symmetric by construction");
    let zmask = rng.gen_range(0..(1u64 << n));
    if zmask != 0 {
        d = d.mul(&ExactUnitary::from_pauli(&PauliOp::new(n, 0, zmask, 0)));
    }
    let mut q = ExactUnitary::identity(n);
    for _ in 0..rng.gen_range(0..5) {
        let bits = rng.gen_range(1..(1u64 << (2 * n)));
        q = q.mul(&crate::clifford::clifford_transvection(
            &SymplecticVector::new(n, bits),
            true,
        ));
    }
    q.mul(&d).mul(&q.dagger())
}

/// Hermitian members of both climber-characterization domains at a given n:
/// all diagonal gates of symmetric zero-diagonal forms and all permutation
/// involutions, swept through both decision routes. Returns (checked, failures).
pub fn characterization_equivalence(n: usize, budget: &Budget) -> (usize, usize) {
    let analyzer = Analyzer::new(budget.clone());
    let mut checked = 0usize;
    let mut failures = 0usize;
    let mut run = |c: ExactUnitary| {
        checked += 1;
        let report = analyzer.climb_verdict(&c, "family member").unwrap();
        let climbs = matches!(report.verdict, Verdict::Climbs { .. });
        let nontrivial_climb = report.verdict == Verdict::Climbs { trivial: false };
        let hat = c.hat().expect("family member is Hermitian");
        let direct = analyzer.level_at_most(&hat, 3).unwrap();
        let summary = report.clifford.expect("family member is Clifford");
        // Hermitian diagonal and permutation gates are always hyperbolic, so
        // the characterization collapses to the residue dimension: 2 for the
        // theorem case, 0 for the trivial Pauli case.
        if !summary.hyperbolic
            || climbs != direct
            || nontrivial_climb != (summary.residue_dim == 2)
            || (climbs && !nontrivial_climb) != (summary.residue_dim == 0)
        {
            failures += 1;
        }
    };
    // Diagonal: every symmetric zero-diagonal A.
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    for mask in 0u64..(1 << pairs.len()) {
        let mut a = BinMatrix::zero(n, n);
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
        run(diagonal_clifford(&a).unwrap());
    }
    // Permutation: every involutive invertible B.
    for code in 0u64..(1 << (n * n)) {
        let rows: Vec<u64> = (0..n).map(|i| (code >> (i * n)) & ((1 << n) - 1)).collect();
        let b = BinMatrix::from_rows(rows, n);
        if b.inverse().is_err() || b.mul(&b) != BinMatrix::identity(n) {
            continue;
        }
        run(crate::clifford::permutation_clifford(&b).unwrap());
    }
    (checked, failures)
}

/// |Tr(E·C)|² ∈ {0, 4^n/2^r} over all classes for every gate in both
/// climber families at n, plus the subgroup/coefficient shape of the
/// expansion. Returns (checked, failures).
pub fn trace_magnitude_families(n: usize) -> (usize, usize) {
    let mut checked = 0usize;
    let mut failures = 0usize;
    for family in [ClimberFamily::Diagonal, ClimberFamily::Permutation] {
        for m in enumerate_climber_family(family, n) {
            let c = climber_gate(family, &m).unwrap();
            let rep = symplectic_of(&c).unwrap();
            let r = rep.residue_dim() as u32;
            let allowed = RingScalar::new(1i64 << (2 * n as u32 - r), 0, 0, 0, 0);
            for p in enumerate_pauli_classes(n) {
                checked += 1;
                let e = PauliOp::hermitian_rep(p.vector());
                let t = c.trace_with_pauli(&e);
                let mag = t.abs_sq();
                if !(mag.is_zero() || mag == allowed) {
                    failures += 1;
                }
            }
            let exp = pauli_expand(&c);
            if !exp.support_is_coset || exp.subgroup_rank != Some(r) || exp.terms.len() != (1 << r)
            {
                failures += 1;
            }
        }
    }
    (checked, failures)
}

/// The four-qubit examples: the CZ₁₄·CZ₂₃ square root, the commuting CNOT
/// product, and controlled lifting, all at their budgeted levels.
fn four_qubit_checks(analyzer: &Analyzer) -> Vec<CheckResult> {
    let mut out = Vec::new();
    // C = CZ₁₄·CZ₂₃: residue 4, hat in C⁴ \ C³, exact conjugation table of
    // V = ĈX₁Ĉ†.
    {
        let c = gates::cz()
            .embed(4, &[1, 4])
            .mul(&gates::cz().embed(4, &[2, 3]));
        let rep = symplectic_of(&c).unwrap();
        let dim_ok = rep.residue_dim() == 4;
        let hat = c.hat().unwrap();
        let not_l3 = !analyzer.level_at_most(&hat, 3).unwrap();
        let in_l4 = analyzer.level_at_most(&hat, 4).unwrap();
        let v = hat.conjugate(&gates::x().embed(4, &[1]));
        let x = |i: usize| gates::x().embed(4, &[i]);
        let z = |i: usize| gates::z().embed(4, &[i]);
        let cz = |i: usize, j: usize| gates::cz().embed(4, &[i, j]);
        let mut table_ok = v.conjugate(&x(1)) == x(1).mul(&z(4));
        table_ok = table_ok && v.conjugate(&x(2)) == x(2).mul(&cz(3, 4));
        table_ok = table_ok && v.conjugate(&x(3)) == x(3).mul(&cz(2, 4));
        // The printed product X₄Z₁Z₄·CZ₂₃ is anti-Hermitian; the conjugate
        // carries the Hermitian-restoring phase i: i·X₄Z₁Z₄ = Z₁Y₄.
        let rhs4 = x(4)
            .mul(&z(1))
            .mul(&z(4))
            .mul(&cz(2, 3))
            .scale(&RingScalar::i());
        table_ok = table_ok && v.conjugate(&x(4)) == rhs4;
        out.push(CheckResult::new(
            "four-qubit-cz-product",
            dim_ok && not_l3 && in_l4 && table_ok,
            format!(
                "residue4={dim_ok} hat∉C3={not_l3} hat∈C4={in_l4} conjugation-table={table_ok}"
            ),
        ));
    }
    // CX₁₃·CX₂₄: residue 4, hat ∉ C³, but hat(CX₁₃)·hat(CX₂₄) ∈ C³.
    {
        let c1 = gates::cx().embed(4, &[1, 3]);
        let c2 = gates::cx().embed(4, &[2, 4]);
        let c = c1.mul(&c2);
        let rep = symplectic_of(&c).unwrap();
        let dim_ok = rep.residue_dim() == 4;
        let not_l3 = !analyzer.level_at_most(&c.hat().unwrap(), 3).unwrap();
        let prod = c1.hat().unwrap().mul(&c2.hat().unwrap());
        let prod_l3 = analyzer.level_at_most(&prod, 3).unwrap();
        out.push(CheckResult::new(
            "cnot-product-non-lift",
            dim_ok && not_l3 && prod_l3,
            format!("residue4={dim_ok} hat∉C3={not_l3} hat-product∈C3={prod_l3}"),
        ));
    }
    // Controlled lifting: CSWAP and the shared-control Toffoli pair; HS rejected.
    {
        let cswap = gates::cswap();
        let cswap_l3 = analyzer.level_at_most(&cswap, 3).unwrap()
            && !analyzer.level_at_most(&cswap, 2).unwrap();
        let hat_l4 = analyzer.min_level(&cswap.hat().unwrap(), 4).unwrap() == Some(4);
        let pair = gates::ccx()
            .embed(4, &[1, 2, 3])
            .mul(&gates::ccx().embed(4, &[1, 2, 4]));
        let pair_hat_l4 = analyzer.min_level(&pair.hat().unwrap(), 4).unwrap() == Some(4);
        let chs = gates::h().mul(&gates::s()).controlled(1);
        let chs_not_l3 = !analyzer.level_at_most(&chs, 3).unwrap();
        out.push(CheckResult::new(
            "controlled-lifting",
            cswap_l3 && hat_l4 && pair_hat_l4 && chs_not_l3,
            format!("cswap∈C3={cswap_l3} hat(cswap)∈C4={hat_l4} toffoli-pair-hat∈C4={pair_hat_l4} C(HS)∉C3={chs_not_l3}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_suite_passes() {
        for check in counting_suite(3) {
            assert!(check.passed, "{}: {}", check.tag, check.detail);
        }
    }

    #[test]
    fn symplectic_suite_passes() {
        for check in symplectic_suite(2) {
            assert!(check.passed, "{}: {}", check.tag, check.detail);
        }
    }

    #[test]
    fn paper_suite_small_passes() {
        for check in paper_suite(2, &Budget::default()) {
            assert!(check.passed, "{}: {}", check.tag, check.detail);
        }
    }

    #[test]
    fn random_hermitian_cliffords_are_hermitian_cliffords() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..20 {
            let c = random_hermitian_clifford(&mut rng, 2);
            assert!(c.is_hermitian());
            assert!(symplectic_of(&c).is_ok());
        }
    }
}
