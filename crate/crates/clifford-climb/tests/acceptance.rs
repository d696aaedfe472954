//! Acceptance suite: one test per criterion, every equality exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion. Criterion 12 (six qubits) is `#[ignore]`d;
//! opt in with `-- --ignored`.
//!
//! Criterion 02 is known-red: its middle clause asserts the literal identity
//! ĤXĤ† = −Ĥ·Y, which is arithmetically false — the exact conjugate is
//! (H − Y)/√2 = X·Ĥ·(−iZ). The test states the assertion faithfully, fails on
//! it, and prints the correct closed form (which is itself verified, along
//! with the general obstruction identity, by `verify --suite paper`).

use clifford_climb::clifford::{
    climber_count, enumerate_climber_family, symplectic_of, ClimberFamily,
};
use clifford_climb::gates;
use clifford_climb::hierarchy::{
    hat_controlled_x_identity, verify_controlled_x_rules, Analyzer, Budget, HierarchyError,
};
use clifford_climb::pauli::PauliOp;
use clifford_climb::ring::RingScalar;
use clifford_climb::symplectic::{enumerate_sp, SymplecticMatrix};
use clifford_climb::unitary::ExactUnitary;
use clifford_climb::verify;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed: {detail}");
}

fn analyzer() -> Analyzer {
    Analyzer::new(Budget::default())
}

fn x_at(n: usize, i: usize) -> ExactUnitary {
    gates::x().embed(n, &[i])
}

fn z_at(n: usize, i: usize) -> ExactUnitary {
    gates::z().embed(n, &[i])
}

fn cz_at(n: usize, i: usize, j: usize) -> ExactUnitary {
    gates::cz().embed(n, &[i, j])
}

#[test]
fn acceptance_01_square_root_law() {
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
    let mut failures = Vec::new();
    for (name, u) in &library {
        let hat = u.hat().expect("library gate is Hermitian");
        if hat.mul(&hat) != u.scale(&RingScalar::i()) {
            failures.push(name.to_string());
        }
    }
    let mut rng = StdRng::seed_from_u64(0xc0ffee);
    for idx in 0..100 {
        let n = 1 + (idx % 3);
        let c = verify::random_hermitian_clifford(&mut rng, n);
        let hat = c.hat().expect("random Hermitian Clifford");
        if hat.mul(&hat) != c.scale(&RingScalar::i()) {
            failures.push(format!("random#{idx}"));
        }
    }
    report(
        "01 square-root-law",
        failures.is_empty(),
        &format!("hat(U)² = iU on 9 library gates + 100 random Hermitian Cliffords; failures: {failures:?}"),
    );
}

#[test]
fn acceptance_02_hadamard_obstruction() {
    let a = analyzer();
    let h = gates::h();
    let pair = a.counter_obstruction(&h).unwrap();
    let pair_ok = pair == Some((PauliOp::x_on(1, 1), PauliOp::z_on(1, 1)));

    let hh = h.hat().unwrap();
    let mut levels_ok = true;
    for k in 2..=4u8 {
        if a.level_at_most(&hh, k).unwrap() {
            levels_ok = false;
        }
    }

    // The criterion's literal middle clause: ĤXĤ† = −Ĥ·Y.
    let lhs = hh.conjugate(&gates::x());
    let minus_hat_y = hh.mul(&gates::y()).scale(&(-&RingScalar::one()));
    let stated_identity_ok = lhs == minus_hat_y;
    // The arithmetically correct closed form, for the failure message.
    let true_form = gates::x()
        .mul(&hh)
        .mul(&gates::z().scale(&(-&RingScalar::i())));
    let true_form_holds = lhs == true_form;

    report(
        "02 hadamard-obstruction",
        pair_ok && levels_ok && stated_identity_ok,
        &format!(
            "obstruction-pair(X,Z)={pair_ok} levels-2-4-blocked={levels_ok} \
             stated-identity(hatH·X·hatH† = −hatH·Y)={stated_identity_ok} \
             [the stated identity is arithmetically false; the exact conjugate \
             is (H−Y)/√2 = X·hatH·(−iZ), which holds here: {true_form_holds}]"
        ),
    );
}

#[test]
fn acceptance_03_cnot_lift() {
    let a = analyzer();
    let level_ok = a.min_level(&gates::cx().hat().unwrap(), 4).unwrap() == Some(3);
    let closed_form_ok = hat_controlled_x_identity(1) && hat_controlled_x_identity(2);
    let rules1 = verify_controlled_x_rules(1);
    let rules2 = verify_controlled_x_rules(2);
    report(
        "03 cnot-lift",
        level_ok && closed_form_ok && rules1.is_ok() && rules2.is_ok(),
        &format!(
            "min_level(hat(CX))=3: {level_ok}; hat(C^k(X)) = ω·C^k(R) for k=1,2: {closed_form_ok}; \
             rules k=1: {rules1:?}; rules k=2: {rules2:?}"
        ),
    );
}

#[test]
fn acceptance_04_swap_lift() {
    let a = analyzer();
    let sw = gates::swap();
    let swhat = sw.hat().unwrap();
    let level_ok = a.min_level(&swhat, 4).unwrap() == Some(3);
    let hxh = gates::h().tensor(&gates::h());
    let sxs = gates::s().tensor(&gates::s());
    let cz = gates::cz();
    let mut identities_ok = true;
    for i in 1..=2usize {
        let xi = x_at(2, i);
        identities_ok &= swhat.conjugate(&xi) == sw.mul(&hxh).mul(&cz).mul(&sxs).mul(&hxh).mul(&xi);
        let zi = z_at(2, i);
        identities_ok &= swhat.conjugate(&zi) == sw.mul(&cz).mul(&sxs).mul(&zi);
    }
    report(
        "04 swap-lift",
        level_ok && identities_ok,
        &format!("min_level(hat(SWAP))=3: {level_ok}; four conjugation identities exact: {identities_ok}"),
    );
}

#[test]
fn acceptance_05_four_qubit_counterexample() {
    let a = analyzer();
    let c = cz_at(4, 1, 4).mul(&cz_at(4, 2, 3));
    let rep = symplectic_of(&c).unwrap();
    let dim_ok = rep.residue_dim() == 4;
    let hat = c.hat().unwrap();
    let not_l3 = !a.level_at_most(&hat, 3).unwrap();
    let in_l4 = a.level_at_most(&hat, 4).unwrap();
    // The conjugation table of V = ĈX₁Ĉ† on X₁..X₄ (row 4 carries the
    // Hermitian-restoring phase i: i·X₄Z₁Z₄ = Z₁Y₄).
    let v = hat.conjugate(&x_at(4, 1));
    let t1 = v.conjugate(&x_at(4, 1)) == x_at(4, 1).mul(&z_at(4, 4));
    let t2 = v.conjugate(&x_at(4, 2)) == x_at(4, 2).mul(&cz_at(4, 3, 4));
    let t3 = v.conjugate(&x_at(4, 3)) == x_at(4, 3).mul(&cz_at(4, 2, 4));
    let rhs4 = x_at(4, 4)
        .mul(&z_at(4, 1))
        .mul(&z_at(4, 4))
        .mul(&cz_at(4, 2, 3))
        .scale(&RingScalar::i());
    let t4 = v.conjugate(&x_at(4, 4)) == rhs4;
    report(
        "05 four-qubit-counterexample",
        dim_ok && not_l3 && in_l4 && t1 && t2 && t3 && t4,
        &format!(
            "residue_dim=4: {dim_ok}; hat∉C3: {not_l3}; hat∈C4: {in_l4}; \
             X-conjugation rows: [{t1}, {t2}, {t3}, {t4}]"
        ),
    );
}

#[test]
fn acceptance_06_characterization_equivalence() {
    let budget = Budget::default();
    let mut detail = String::new();
    let mut all_ok = true;
    for n in 2..=3usize {
        let (checked, failures) = verify::characterization_equivalence(n, &budget);
        all_ok &= failures == 0;
        detail.push_str(&format!(
            "n={n}: {checked} gates, {failures} disagreements; "
        ));
    }
    report("06 characterization-equivalence", all_ok, detail.trim_end());
}

#[test]
fn acceptance_07_counting_corollaries() {
    let expected = [(2usize, 1u64, 3u64), (3, 7, 21), (4, 35, 105)];
    let mut all_ok = true;
    let mut detail = String::new();
    for (n, diag, perm) in expected {
        let d = enumerate_climber_family(ClimberFamily::Diagonal, n).len() as u64;
        let p = enumerate_climber_family(ClimberFamily::Permutation, n).len() as u64;
        let ok = d == diag
            && p == perm
            && climber_count(ClimberFamily::Diagonal, n) == diag
            && climber_count(ClimberFamily::Permutation, n) == perm;
        all_ok &= ok;
        detail.push_str(&format!("n={n}: ({d},{p}) want ({diag},{perm}); "));
    }
    report("07 counting-corollaries", all_ok, detail.trim_end());
}

#[test]
fn acceptance_08_trace_magnitudes() {
    let (checked, failures) = verify::trace_magnitude_families(3);
    let families_ok = failures == 0;

    // hat of the residue-dimension-4 gate: at least two distinct nonzero
    // |Tr|² magnitudes (exactly {8, 136} here).
    let c = cz_at(4, 1, 4).mul(&cz_at(4, 2, 3));
    let hat = c.hat().unwrap();
    let mut magnitudes = std::collections::HashSet::new();
    for p in clifford_climb::pauli::enumerate_pauli_classes(4) {
        let e = PauliOp::hermitian_rep(p.vector());
        let m = hat.trace_with_pauli(&e).abs_sq();
        if !m.is_zero() {
            magnitudes.insert(format!("{m}"));
        }
    }
    let distinct_ok = magnitudes.len() >= 2;
    report(
        "08 trace-magnitudes",
        families_ok && distinct_ok,
        &format!(
            "n=3 families: {checked} traces, {failures} off-pattern; \
             hat(dim-4 gate) nonzero |Tr|² values: {}",
            magnitudes.len()
        ),
    );
}

#[test]
fn acceptance_09_cnot_product_non_lift() {
    let a = analyzer();
    let c1 = gates::cx().embed(4, &[1, 3]);
    let c2 = gates::cx().embed(4, &[2, 4]);
    let c = c1.mul(&c2);
    let dim_ok = symplectic_of(&c).unwrap().residue_dim() == 4;
    let not_l3 = !a.level_at_most(&c.hat().unwrap(), 3).unwrap();
    let product = c1.hat().unwrap().mul(&c2.hat().unwrap());
    let product_l3 = a.level_at_most(&product, 3).unwrap();
    report(
        "09 cnot-product-non-lift",
        dim_ok && not_l3 && product_l3,
        &format!(
            "residue_dim=4: {dim_ok}; hat(C)∉C3: {not_l3}; hat(CX13)·hat(CX24)∈C3: {product_l3}"
        ),
    );
}

#[test]
fn acceptance_10_controlled_lifting() {
    let a = analyzer();
    let cswap = gates::cswap();
    let cswap_l3 = a.level_at_most(&cswap, 3).unwrap() && !a.level_at_most(&cswap, 2).unwrap();
    let cswap_hat_l4 = a.min_level(&cswap.hat().unwrap(), 4).unwrap() == Some(4);
    let pair = gates::ccx()
        .embed(4, &[1, 2, 3])
        .mul(&gates::ccx().embed(4, &[1, 2, 4]));
    let pair_hat_l4 = a.min_level(&pair.hat().unwrap(), 4).unwrap() == Some(4);
    let hs = gates::h().mul(&gates::s());
    let chs_not_l3 = !a.level_at_most(&hs.controlled(1), 3).unwrap();
    let hs_rejected = matches!(
        a.lift_controlled(&hs, "HS"),
        Err(HierarchyError::OrderNotTwoOrFour(_))
    );
    report(
        "10 controlled-lifting",
        cswap_l3 && cswap_hat_l4 && pair_hat_l4 && chs_not_l3 && hs_rejected,
        &format!(
            "CSWAP∈C3: {cswap_l3}; hat(CSWAP)∈C4: {cswap_hat_l4}; \
             hat(T123·T124)∈C4: {pair_hat_l4}; C(HS)∉C3: {chs_not_l3}; HS rejected: {hs_rejected}"
        ),
    );
}

#[test]
fn acceptance_11_symplectic_layer() {
    let sp4 = enumerate_sp(2);
    let order_ok = sp4.len() == 720;
    let mut hyp_ok = true;
    let mut decomp_ok = true;
    let mut lcom_ok = true;
    for f in &sp4 {
        if f.is_hyperbolic() != f.is_hyperbolic_bruteforce() {
            hyp_ok = false;
        }
        if !f.is_involution() {
            continue;
        }
        let res = f.residue_space();
        for u in &res.basis {
            for v in &res.basis {
                if u.inner(v) {
                    lcom_ok = false;
                }
            }
        }
        match f.decompose_involution() {
            Ok(vecs) => {
                let mut prod = SymplecticMatrix::identity(2);
                for v in &vecs {
                    prod = prod.mul(&SymplecticMatrix::transvection(v));
                }
                if prod != *f || vecs.len() > res.dim() + 1 || !vecs.iter().all(|v| res.contains(v))
                {
                    decomp_ok = false;
                }
            }
            Err(_) => decomp_ok = false,
        }
    }
    report(
        "11 symplectic-layer",
        order_ok && hyp_ok && decomp_ok && lcom_ok,
        &format!(
            "|Sp(4)|=720: {order_ok}; hyperbolicity oracle agreement: {hyp_ok}; \
             involution decomposition: {decomp_ok}; residue isotropy: {lcom_ok}"
        ),
    );
}

#[test]
#[ignore = "slow six-qubit witness check; run with -- --ignored"]
fn acceptance_12_disjoint_toffolis_slow() {
    let budget = Budget::default().with_qubits(6);
    let a = Analyzer::new(budget);
    let u = gates::ccx()
        .embed(6, &[1, 2, 3])
        .mul(&gates::ccx().embed(6, &[4, 5, 6]));
    let hat = u.hat().unwrap();
    // The k = 3 generator sweep exits at the first non-Clifford conjugate
    // (the X₁ image already fails).
    let not_l3 = !a.level_at_most(&hat, 3).unwrap();
    report(
        "12 disjoint-toffolis (slow)",
        not_l3,
        &format!(
            "hat(T123·T456)∉C3 at n=6: {not_l3}; work used: {}",
            a.work_used()
        ),
    );
}
