//! Clifford-hierarchy level decisions and the climb verdict.
//!
//! Membership follows the nested definition: level 1 is the Pauli group
//! (taken projectively, up to a unit phase), and U ∈ C^(k) when U·P·U† lands
//! in C^(k−1) for every Pauli P. For k = 2, 3 the target sets are groups, so
//! conjugating the 2n generators suffices; for k = 4 the target C^(3) is not
//! multiplicatively closed and all 4^n phaseless classes are swept. Class
//! sweeps run data-parallel (deterministic first-witness) and verdicts are
//! memoized under a phase-canonical matrix fingerprint.

use crate::clifford::{symplectic_of, CliffordError};
use crate::exec;
use crate::gates;
use crate::pauli::{enumerate_pauli_classes, PauliOp};
use crate::ring::RingScalar;
use crate::unitary::ExactUnitary;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HierarchyError {
    #[error("gate is not Hermitian")]
    NotHermitian,
    #[error("gate is not Clifford")]
    NotClifford,
    #[error("gate must square to ±I, got order {0}")]
    OrderNotTwoOrFour(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Work limits for the dense sweeps. `CLIMB_BUDGET` overrides the defaults,
/// e.g. `CLIMB_BUDGET=qubits=6,level=4,work=8000000000,parallel=0`.
#[derive(Clone, Debug, Serialize)]
pub struct Budget {
    pub max_qubits: usize,
    pub max_level: u8,
    pub max_work: u64,
    pub parallel: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_qubits: 5,
            max_level: 4,
            max_work: 4_000_000_000,
            parallel: exec::parallel_available(),
        }
    }
}

impl Budget {
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(spec) = std::env::var("CLIMB_BUDGET") {
            for part in spec.split(',') {
                let Some((key, value)) = part.split_once('=') else {
                    continue;
                };
                match key.trim() {
                    "qubits" => {
                        if let Ok(v) = value.trim().parse() {
                            b.max_qubits = v;
                        }
                    }
                    "level" => {
                        if let Ok(v) = value.trim().parse() {
                            b.max_level = v;
                        }
                    }
                    "work" => {
                        if let Ok(v) = value.trim().parse() {
                            b.max_work = v;
                        }
                    }
                    "parallel" => {
                        b.parallel = value.trim() != "0" && exec::parallel_available();
                    }
                    _ => {}
                }
            }
        }
        b
    }

    pub fn with_qubits(mut self, n: usize) -> Self {
        self.max_qubits = n;
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// Structured verdict for a Hermitian gate C and its square root Û.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Verdict {
    /// F_C is a hyperbolic involution with residue dimension exactly 2,
    /// or 0 in the `trivial` case (C is a Pauli up to phase, Û is Clifford).
    Climbs {
        trivial: bool,
    },
    BlockedNotHyperbolic,
    BlockedResidueGt2 {
        dim: usize,
    },
    /// A pair E, E′ of anticommuting Hermitian Paulis with U·E·U = E′.
    BlockedObstruction,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evidence {
    ResidueBasis { basis: Vec<String> },
    ObstructionPair { e: String, e_prime: String },
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliffordSummary {
    pub f: Vec<String>,
    pub hyperbolic: bool,
    pub residue_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClimbReport {
    pub input: String,
    pub n: usize,
    pub hermitian: bool,
    pub min_level: Option<u8>,
    pub clifford: Option<CliffordSummary>,
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub hat_level: Option<u8>,
    pub budget: BudgetReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetReport {
    pub max_qubits: usize,
    pub max_level: u8,
    pub work_used: u64,
    pub work_limit: u64,
    pub parallel: bool,
}

/// Level-decision engine: owns the budget, the work counter and the memo
/// table. Verdicts are deterministic and independent of sweep order; the
/// memo is an optimization only.
pub struct Analyzer {
    budget: Budget,
    work: AtomicU64,
    memo: RwLock<HashMap<(Vec<u8>, u8), bool>>,
}

impl Analyzer {
    pub fn new(budget: Budget) -> Self {
        Analyzer {
            budget,
            work: AtomicU64::new(0),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn work_used(&self) -> u64 {
        self.work.load(Ordering::Relaxed)
    }

    pub fn budget_report(&self) -> BudgetReport {
        BudgetReport {
            max_qubits: self.budget.max_qubits,
            max_level: self.budget.max_level,
            work_used: self.work_used(),
            work_limit: self.budget.max_work,
            parallel: self.budget.parallel,
        }
    }

    fn charge(&self, units: u64) -> Result<(), HierarchyError> {
        let total = self.work.fetch_add(units, Ordering::Relaxed) + units;
        if total > self.budget.max_work {
            return Err(HierarchyError::BudgetExceeded(format!(
                "work {total} exceeds limit {}",
                self.budget.max_work
            )));
        }
        Ok(())
    }

    fn check_feasible(&self, n: usize, k: u8) -> Result<(), HierarchyError> {
        if n > self.budget.max_qubits {
            return Err(HierarchyError::BudgetExceeded(format!(
                "{n} qubits exceeds budget of {}",
                self.budget.max_qubits
            )));
        }
        if k > self.budget.max_level {
            return Err(HierarchyError::BudgetExceeded(format!(
                "level {k} exceeds budget of {}",
                self.budget.max_level
            )));
        }
        Ok(())
    }

    /// Exact membership U ∈ C^(k) under the nested definition.
    pub fn level_at_most(&self, u: &ExactUnitary, k: u8) -> Result<bool, HierarchyError> {
        assert!(k >= 1, "levels start at 1");
        self.check_feasible(u.n(), k)?;
        self.level_rec(u, k)
    }

    fn level_rec(&self, u: &ExactUnitary, k: u8) -> Result<bool, HierarchyError> {
        if k == 1 {
            return Ok(u.is_pauli_up_to_phase());
        }
        let key = (u.fingerprint(), k);
        if let Some(&v) = self.memo.read().unwrap().get(&key) {
            return Ok(v);
        }
        let n = u.n();
        let conj_cost = 2 * (1u64 << n).pow(3);
        let result = if k <= 3 {
            // Pauli and Clifford targets are groups: generators suffice.
            let mut ok = true;
            for g in generator_paulis(n) {
                self.charge(conj_cost)?;
                let conj = u.conjugate(&ExactUnitary::from_pauli(&g));
                if !self.level_rec(&conj, k - 1)? {
                    ok = false;
                    break;
                }
            }
            ok
        } else {
            // C^(k−1) is not multiplicatively closed for k ≥ 4: sweep every
            // phaseless class, in parallel, stopping at the first failure.
            let classes: Vec<PauliOp> = enumerate_pauli_classes(n).collect();
            let witness = exec::find_map_first(&classes, self.budget.parallel, |p| {
                if let Err(e) = self.charge(conj_cost) {
                    return Some(Err(e));
                }
                let conj = u.conjugate(&ExactUnitary::from_pauli(p));
                match self.level_rec(&conj, k - 1) {
                    Ok(true) => None,
                    Ok(false) => Some(Ok(*p)),
                    Err(e) => Some(Err(e)),
                }
            });
            match witness {
                None => true,
                Some(Ok(_)) => false,
                Some(Err(e)) => return Err(e),
            }
        };
        self.memo.write().unwrap().insert(key, result);
        Ok(result)
    }

    /// Smallest k ≤ k_max with U ∈ C^(k), or None.
    pub fn min_level(&self, u: &ExactUnitary, k_max: u8) -> Result<Option<u8>, HierarchyError> {
        self.check_feasible(u.n(), k_max)?;
        for k in 1..=k_max {
            if self.level_at_most(u, k)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// Searches for anticommuting Hermitian Paulis E, E′ with U·E·U = E′,
    /// which certifies that Û does not climb. Deterministic first witness.
    pub fn counter_obstruction(
        &self,
        u: &ExactUnitary,
    ) -> Result<Option<(PauliOp, PauliOp)>, HierarchyError> {
        if !u.is_hermitian() {
            return Err(HierarchyError::NotHermitian);
        }
        let n = u.n();
        self.check_feasible(n, 1)?;
        let conj_cost = 2 * (1u64 << n).pow(3);
        let classes: Vec<PauliOp> = enumerate_pauli_classes(n)
            .filter(|p| !p.is_identity_class())
            .collect();
        let found = exec::find_map_first(&classes, self.budget.parallel, |p| {
            if let Err(err) = self.charge(conj_cost) {
                return Some(Err(err));
            }
            let e = PauliOp::hermitian_rep(p.vector());
            let w = u.mul(&ExactUnitary::from_pauli(&e)).mul(u);
            match w.detect_pauli() {
                Some((e2, t)) => {
                    debug_assert!(t == 0 || t == 2, "UEU is Hermitian");
                    if e.vector().inner(&e2.vector()) {
                        Some(Ok((e, e2.mul_phase(t))))
                    } else {
                        None
                    }
                }
                None => None,
            }
        });
        match found {
            None => Ok(None),
            Some(Ok(pair)) => Ok(Some(pair)),
            Some(Err(e)) => Err(e),
        }
    }

    /// The symplectic climb verdict for a Hermitian gate. Clifford inputs are
    /// decided by hyperbolicity and residue dimension; non-Clifford inputs
    /// get a degraded report from the obstruction search alone.
    pub fn climb_verdict(
        &self,
        c: &ExactUnitary,
        input: &str,
    ) -> Result<ClimbReport, HierarchyError> {
        if !c.is_hermitian() {
            return Err(HierarchyError::NotHermitian);
        }
        let n = c.n();
        self.check_feasible(n, 1)?;
        let mut report = ClimbReport {
            input: input.to_string(),
            n,
            hermitian: true,
            min_level: None,
            clifford: None,
            verdict: Verdict::Unknown,
            evidence: Evidence::None,
            hat_level: None,
            budget: self.budget_report(),
        };
        match symplectic_of(c) {
            Ok(rep) => {
                let f = rep.f();
                debug_assert!(f.is_involution(), "Hermitian Clifford has involutive F");
                let res = f.residue_space();
                let hyperbolic = f.is_hyperbolic();
                report.clifford = Some(CliffordSummary {
                    f: f.matrix().bit_rows(),
                    hyperbolic,
                    residue_dim: res.dim(),
                });
                if res.dim() == 0 {
                    report.verdict = Verdict::Climbs { trivial: true };
                } else if !hyperbolic {
                    report.verdict = Verdict::BlockedNotHyperbolic;
                    let v = f
                        .hyperbolic_violation()
                        .expect("non-hyperbolic has a witness");
                    let e = PauliOp::hermitian_rep(v);
                    self.charge(2 * (1u64 << n).pow(3))?;
                    let w = c.mul(&ExactUnitary::from_pauli(&e)).mul(c);
                    let (e2, t) = w.detect_pauli().expect("Clifford conjugate is a Pauli");
                    report.evidence = Evidence::ObstructionPair {
                        e: e.to_string(),
                        e_prime: e2.mul_phase(t).to_string(),
                    };
                } else if res.dim() == 2 {
                    report.verdict = Verdict::Climbs { trivial: false };
                    report.evidence = Evidence::ResidueBasis {
                        basis: res
                            .basis
                            .iter()
                            .map(|v| PauliOp::hermitian_rep(*v).to_string())
                            .collect(),
                    };
                } else {
                    report.verdict = Verdict::BlockedResidueGt2 { dim: res.dim() };
                    report.evidence = Evidence::ResidueBasis {
                        basis: res
                            .basis
                            .iter()
                            .map(|v| PauliOp::hermitian_rep(*v).to_string())
                            .collect(),
                    };
                }
            }
            Err(CliffordError::NotClifford(_)) => match self.counter_obstruction(c)? {
                Some((e, e2)) => {
                    report.verdict = Verdict::BlockedObstruction;
                    report.evidence = Evidence::ObstructionPair {
                        e: e.to_string(),
                        e_prime: e2.to_string(),
                    };
                }
                None => report.verdict = Verdict::Unknown,
            },
            Err(_) => return Err(HierarchyError::NotClifford),
        }
        report.budget = self.budget_report();
        Ok(report)
    }

    /// Full analysis: climb verdict plus direct level searches for U and
    /// (when requested and U is Hermitian) for Û.
    pub fn analyze(
        &self,
        u: &ExactUnitary,
        input: &str,
        with_hat: bool,
        k_max: u8,
    ) -> Result<ClimbReport, HierarchyError> {
        let hermitian = u.is_hermitian();
        if with_hat && !hermitian {
            return Err(HierarchyError::NotHermitian);
        }
        let mut report = if hermitian {
            self.climb_verdict(u, input)?
        } else {
            ClimbReport {
                input: input.to_string(),
                n: u.n(),
                hermitian: false,
                min_level: None,
                clifford: None,
                verdict: Verdict::Unknown,
                evidence: Evidence::None,
                hat_level: None,
                budget: self.budget_report(),
            }
        };
        report.min_level = self.min_level(u, k_max)?;
        if with_hat {
            let hat = u.hat().expect("hermitian checked above");
            report.hat_level = self.min_level(&hat, k_max)?;
        }
        report.budget = self.budget_report();
        Ok(report)
    }

    /// Controlled lifting: C² = ±I makes C(C) third level, and a
    /// climbing Hermitian C lifts further: hat(C(C)) is fourth level. Both
    /// facts are verified directly on the dense matrices.
    pub fn lift_controlled(
        &self,
        c: &ExactUnitary,
        input: &str,
    ) -> Result<ClimbReport, HierarchyError> {
        let c_squared = c.mul(c);
        let id = ExactUnitary::identity(c.n());
        let minus_id = id.scale(&(-&RingScalar::one()));
        if c_squared != id && c_squared != minus_id {
            return Err(HierarchyError::OrderNotTwoOrFour(input.to_string()));
        }
        if symplectic_of(c).is_err() {
            return Err(HierarchyError::NotClifford);
        }
        let u = c.controlled(1);
        let mut report = ClimbReport {
            input: format!("C({input})"),
            n: u.n(),
            hermitian: u.is_hermitian(),
            min_level: self.min_level(&u, 3)?,
            clifford: None,
            verdict: Verdict::Unknown,
            evidence: Evidence::None,
            hat_level: None,
            budget: self.budget_report(),
        };
        if c.is_hermitian() {
            let inner = self.climb_verdict(c, input)?;
            if matches!(inner.verdict, Verdict::Climbs { .. }) && u.is_hermitian() {
                let hat = u.hat().expect("controlled Hermitian is Hermitian");
                report.hat_level = self.min_level(&hat, 4)?;
                report.verdict = Verdict::Climbs { trivial: false };
            }
        }
        report.budget = self.budget_report();
        Ok(report)
    }
}

/// X₁..X_n, Z₁..Z_n.
pub fn generator_paulis(n: usize) -> Vec<PauliOp> {
    let mut gens = Vec::with_capacity(2 * n);
    for i in 1..=n {
        gens.push(PauliOp::x_on(n, i));
    }
    for i in 1..=n {
        gens.push(PauliOp::z_on(n, i));
    }
    gens
}

/// The five conjugation-rule families for Ĉ with C = C^{(k)}(X); returns the
/// name of the first failing rule, if any. The Z_{k+1} image carries S†, not
/// S, under the (I + iU)/√2 convention.
pub fn verify_controlled_x_rules(k: usize) -> Result<(), String> {
    assert!(
        (1..=2).contains(&k),
        "rule check is budgeted to k ∈ {{1, 2}}"
    );
    let n = k + 1;
    let c = gates::x().controlled(k);
    let chat = c.hat().expect("controlled X is Hermitian");
    let conj = |p: &ExactUnitary| chat.mul(p).mul(&chat.dagger());

    let x1 = gates::x().embed(n, &[1]);
    let m1 = conj(&x1);
    let ratio_gate = |g: ExactUnitary| -> ExactUnitary {
        if k == 1 {
            g
        } else {
            g.controlled(k - 1)
        }
    };
    let rhs1 = gates::x().tensor(&ratio_gate(gates::r())).mul(&c);
    if m1 != rhs1 {
        return Err(format!("X1 rule failed at k={k}"));
    }
    for i in 2..=k {
        let swap = gates::swap().embed(n, &[1, i]);
        let lhs = conj(&gates::x().embed(n, &[i]));
        let rhs = swap.mul(&m1).mul(&swap.dagger());
        if lhs != rhs {
            return Err(format!("X{i} swap rule failed at k={k}"));
        }
    }
    let x_last = gates::x().embed(n, &[n]);
    if conj(&x_last) != x_last {
        return Err(format!("X{n} fixed rule failed at k={k}"));
    }
    for i in 1..=k {
        let zi = gates::z().embed(n, &[i]);
        if conj(&zi) != zi {
            return Err(format!("Z{i} fixed rule failed at k={k}"));
        }
    }
    let z_last = gates::z().embed(n, &[n]);
    let rhs5 = ratio_gate(gates::sdg()).tensor(&gates::z()).mul(&c);
    if conj(&z_last) != rhs5 {
        return Err(format!("Z{n} rule failed at k={k}"));
    }
    Ok(())
}

/// hat(C^{(k)}(X)) = (1+i)/√2 · C^{(k)}(R) with R = HS†H, exactly.
pub fn hat_controlled_x_identity(k: usize) -> bool {
    let c = gates::x().controlled(k);
    let hat = c.hat().expect("controlled X is Hermitian");
    let rhs = gates::r().controlled(k).scale(&RingScalar::omega());
    hat == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;

    fn analyzer() -> Analyzer {
        Analyzer::new(Budget::default())
    }

    #[test]
    fn s_gate_is_level_two() {
        let a = analyzer();
        assert!(!a.level_at_most(&gates::s(), 1).unwrap());
        assert!(a.level_at_most(&gates::s(), 2).unwrap());
        assert_eq!(a.min_level(&gates::s(), 4).unwrap(), Some(2));
    }

    #[test]
    fn x_is_level_one() {
        let a = analyzer();
        assert_eq!(a.min_level(&gates::x(), 4).unwrap(), Some(1));
    }

    #[test]
    fn toffoli_is_level_three() {
        let a = analyzer();
        assert_eq!(a.min_level(&gates::ccx(), 4).unwrap(), Some(3));
    }

    #[test]
    fn hat_of_x_is_clifford() {
        let a = analyzer();
        let hx = gates::x().hat().unwrap();
        assert_eq!(a.min_level(&hx, 4).unwrap(), Some(2));
    }

    #[test]
    fn hat_of_hadamard_reaches_no_level() {
        let a = analyzer();
        let hh = gates::h().hat().unwrap();
        for k in 2..=4 {
            assert!(
                !a.level_at_most(&hh, k).unwrap(),
                "hat(H) must miss level {k}"
            );
        }
    }

    #[test]
    fn level_is_global_phase_insensitive() {
        let a = analyzer();
        for zeta in [
            -&RingScalar::one(),
            RingScalar::i(),
            -&RingScalar::i(),
            RingScalar::omega(),
            RingScalar::omega().conj(),
        ] {
            for (u, lvl) in [(gates::x(), 1u8), (gates::s(), 2), (gates::ccx(), 3)] {
                let scaled = u.scale(&zeta);
                assert_eq!(a.min_level(&scaled, 4).unwrap(), Some(lvl));
            }
        }
    }

    #[test]
    fn budget_rejects_oversized_inputs() {
        let a = Analyzer::new(Budget {
            max_qubits: 1,
            ..Budget::default()
        });
        let err = a.level_at_most(&gates::cz(), 2).unwrap_err();
        assert!(matches!(err, HierarchyError::BudgetExceeded(_)));
        let a = Analyzer::new(Budget {
            max_level: 2,
            ..Budget::default()
        });
        let err = a.level_at_most(&gates::h(), 3).unwrap_err();
        assert!(matches!(err, HierarchyError::BudgetExceeded(_)));
    }

    #[test]
    fn work_limit_is_enforced() {
        let a = Analyzer::new(Budget {
            max_work: 10,
            ..Budget::default()
        });
        let err = a.level_at_most(&gates::cz().hat().unwrap(), 3).unwrap_err();
        assert!(matches!(err, HierarchyError::BudgetExceeded(_)));
    }

    #[test]
    fn obstruction_for_hadamard_is_x_z() {
        let a = analyzer();
        let (e, e2) = a.counter_obstruction(&gates::h()).unwrap().unwrap();
        assert_eq!(e, PauliOp::x_on(1, 1));
        assert_eq!(e2, PauliOp::z_on(1, 1));
    }

    #[test]
    fn cz_has_no_obstruction() {
        let a = analyzer();
        assert_eq!(a.counter_obstruction(&gates::cz()).unwrap(), None);
    }

    #[test]
    fn obstruction_requires_hermitian() {
        let a = analyzer();
        assert_eq!(
            a.counter_obstruction(&gates::s()).unwrap_err(),
            HierarchyError::NotHermitian
        );
    }

    #[test]
    fn verdict_examples() {
        let a = analyzer();
        let r = a.climb_verdict(&gates::cz(), "CZ").unwrap();
        assert_eq!(r.verdict, Verdict::Climbs { trivial: false });
        assert_eq!(r.clifford.as_ref().unwrap().residue_dim, 2);

        let r = a.climb_verdict(&gates::h(), "H").unwrap();
        assert_eq!(r.verdict, Verdict::BlockedNotHyperbolic);
        assert!(matches!(r.evidence, Evidence::ObstructionPair { .. }));

        let r = a.climb_verdict(&gates::x(), "X").unwrap();
        assert_eq!(r.verdict, Verdict::Climbs { trivial: true });
    }

    #[test]
    fn verdict_for_toffoli_is_degraded() {
        let a = analyzer();
        let r = a.climb_verdict(&gates::ccx(), "CCX").unwrap();
        assert!(r.clifford.is_none());
    }

    #[test]
    fn controlled_x_rules_pass() {
        verify_controlled_x_rules(1).unwrap();
        verify_controlled_x_rules(2).unwrap();
    }

    #[test]
    fn hat_controlled_x_closed_form() {
        assert!(hat_controlled_x_identity(1));
        assert!(hat_controlled_x_identity(2));
    }

    #[test]
    fn lift_rejects_order_six() {
        let a = analyzer();
        let hs = gates::h().mul(&gates::s());
        let err = a.lift_controlled(&hs, "HS").unwrap_err();
        assert!(matches!(err, HierarchyError::OrderNotTwoOrFour(_)));
    }

    #[test]
    fn lift_swap_reaches_level_four() {
        let a = analyzer();
        let r = a.lift_controlled(&gates::swap(), "SWAP").unwrap();
        assert_eq!(r.min_level, Some(3));
        assert_eq!(r.hat_level, Some(4));
    }

    #[test]
    fn lift_shared_control_toffoli_pair() {
        // T₁₂₃·T₁₂₄ = C(C(X₃X₄)): the inner controlled X-pair climbs
        // (residue dimension 2), so the controlled version lifts to four.
        let a = analyzer();
        let xx = gates::x().tensor(&gates::x());
        let c_inner = xx.controlled(1);
        let inner = a.climb_verdict(&c_inner, "C(XX)").unwrap();
        assert_eq!(inner.verdict, Verdict::Climbs { trivial: false });
        assert_eq!(inner.clifford.unwrap().residue_dim, 2);
        let r = a.lift_controlled(&c_inner, "C(XX)").unwrap();
        assert_eq!(r.min_level, Some(3));
        assert_eq!(r.hat_level, Some(4));
        // And the controlled tower really is the Toffoli pair.
        let pair = gates::ccx()
            .embed(4, &[1, 2, 3])
            .mul(&gates::ccx().embed(4, &[1, 2, 4]));
        assert_eq!(c_inner.controlled(1), pair);
    }

    #[test]
    fn analyze_fills_levels() {
        let a = analyzer();
        let r = a.analyze(&gates::swap(), "SWAP", true, 4).unwrap();
        assert_eq!(r.min_level, Some(2));
        assert_eq!(r.hat_level, Some(3));
        assert_eq!(r.verdict, Verdict::Climbs { trivial: false });
    }

    #[test]
    fn climbing_verdicts_have_hat_one_above() {
        let a = analyzer();
        for u in [gates::cz(), gates::swap(), gates::cx()] {
            let r = a.analyze(&u, "gate", true, 4).unwrap();
            assert_eq!(r.verdict, Verdict::Climbs { trivial: false });
            assert_eq!(r.hat_level, r.min_level.map(|k| k + 1));
        }
    }

    #[test]
    fn level_membership_is_monotone() {
        let a = analyzer();
        for u in [
            gates::x(),
            gates::s(),
            gates::ccx(),
            gates::cx().hat().unwrap(),
        ] {
            let mut seen = false;
            for k in 1..=4u8 {
                let now = a.level_at_most(&u, k).unwrap();
                assert!(!seen || now, "membership must be monotone in k");
                seen = seen || now;
            }
        }
    }

    #[test]
    fn anticommuting_sum_gate_has_obstruction() {
        // (X₁ + Z₁)/√2 at n = 2 satisfies the obstruction conditions.
        let a = analyzer();
        let x1 = ExactUnitary::from_pauli(&PauliOp::x_on(2, 1));
        let z1 = ExactUnitary::from_pauli(&PauliOp::z_on(2, 1));
        let sum = crate::unitary::matrix_sum(&x1, &z1);
        let dim = sum.dim();
        let rows: Vec<Vec<RingScalar>> = (0..dim)
            .map(|i| (0..dim).map(|j| sum.get(i, j).div_sqrt2()).collect())
            .collect();
        let c = ExactUnitary::from_rows(2, rows).unwrap();
        let pair = a.counter_obstruction(&c).unwrap();
        assert!(pair.is_some());
        let (e, e2) = pair.unwrap();
        assert!(e.vector().inner(&e2.vector()));
    }

    #[test]
    fn cnot_product_verdict_is_residue_blocked() {
        let a = analyzer();
        let c = gates::cx()
            .embed(4, &[1, 3])
            .mul(&gates::cx().embed(4, &[2, 4]));
        let r = a.climb_verdict(&c, "CX13·CX24").unwrap();
        assert_eq!(r.verdict, Verdict::BlockedResidueGt2 { dim: 4 });
    }

    #[test]
    fn controlled_x_rule_check_discriminates_wrong_signs() {
        // Exact equality separates the true Z-rule gate S† from S.
        let c = gates::cx();
        let chat = c.hat().unwrap();
        let lhs = chat.conjugate(&gates::z().embed(2, &[2]));
        let with_sdg = gates::sdg().tensor(&gates::z()).mul(&c);
        let with_s = gates::s().tensor(&gates::z()).mul(&c);
        assert_eq!(lhs, with_sdg);
        assert_ne!(lhs, with_s);
    }
}
