//! Parallel vs sequential sweep benchmarks.
//!
//! The same class sweeps run under both execution modes (the budget's
//! `parallel` flag picks rayon or plain loops at runtime), so one `cargo
//! bench` run reports the speedup directly. Building with
//! `--no-default-features` leaves only the sequential path.

use clifford_climb::gates;
use clifford_climb::hierarchy::{Analyzer, Budget};
use criterion::{criterion_group, criterion_main, Criterion};

fn budgets() -> Vec<(&'static str, Budget)> {
    let mut out = vec![("seq", Budget::default().sequential())];
    if clifford_climb::exec::parallel_available() {
        out.push(("par", Budget::default()));
    }
    out
}

fn bench_level4_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("level4_hat_cswap");
    let hat = gates::cswap().hat().unwrap();
    for (name, budget) in budgets() {
        group.bench_function(name, |b| {
            b.iter(|| {
                // Fresh analyzer per iteration: an empty memo keeps the work honest.
                let analyzer = Analyzer::new(budget.clone());
                assert!(analyzer.level_at_most(&hat, 4).unwrap());
            })
        });
    }
    group.finish();
}

fn bench_obstruction_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("counter_obstruction_n4");
    // CZ-product gate: the sweep scans all 255 nonzero classes (no witness).
    let gate = gates::cz()
        .embed(4, &[1, 4])
        .mul(&gates::cz().embed(4, &[2, 3]));
    for (name, budget) in budgets() {
        group.bench_function(name, |b| {
            b.iter(|| {
                let analyzer = Analyzer::new(budget.clone());
                assert!(analyzer.counter_obstruction(&gate).unwrap().is_none());
            })
        });
    }
    group.finish();
}

fn bench_level3_toffoli(c: &mut Criterion) {
    let mut group = c.benchmark_group("level3_toffoli");
    let tof = gates::ccx();
    for (name, budget) in budgets() {
        group.bench_function(name, |b| {
            b.iter(|| {
                let analyzer = Analyzer::new(budget.clone());
                assert!(analyzer.level_at_most(&tof, 3).unwrap());
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_level4_sweep,
    bench_obstruction_sweep,
    bench_level3_toffoli
);
criterion_main!(benches);
