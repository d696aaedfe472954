//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 budget exhausted,
//! 3 verification failure.

use clap::{Parser, Subcommand};
use clifford_climb::circuit::{self, CircuitError};
use clifford_climb::clifford::{
    climber_count, climber_gate, enumerate_climber_family, pauli_expand, symplectic_of,
    ClimberFamily,
};
use clifford_climb::hierarchy::{Analyzer, Budget, HierarchyError, Verdict};
use clifford_climb::pauli::PauliOp;
use clifford_climb::unitary::ExactUnitary;
use clifford_climb::verify::{run_suite, Suite};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "clifford-climb",
    version,
    about = "Exact Clifford-hierarchy climb analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a circuit file: hierarchy level, symplectic data, climb verdict.
    Analyze {
        file: PathBuf,
        /// Analyze the square root (I + iU)/√2 of the circuit's unitary.
        #[arg(long)]
        hat: bool,
        /// Highest level to search.
        #[arg(long, default_value_t = 4)]
        max_level: u8,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: Suite2,
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a climber family and check its size against the formula.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(short)]
        n: usize,
        /// Also run the climb verdict on every member.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pauli expansion of a circuit's unitary with exact coefficients.
    Expand {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Symplectic data and transvection decomposition of a Clifford circuit.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Survey square roots of all Hermitian diagonal/permutation Cliffords.
    Survey {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Suite2 {
    Paper,
    Counting,
    Symplectic,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Family {
    Diagonal,
    Permutation,
}

impl From<Family> for ClimberFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Diagonal => ClimberFamily::Diagonal,
            Family::Permutation => ClimberFamily::Permutation,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::from_env();
    match run(cli, budget) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Input(String),
    Budget(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) | CliError::Input(m) | CliError::Budget(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Input(_) => 1,
            CliError::Budget(_) => 2,
        }
    }
}

impl From<CircuitError> for CliError {
    fn from(e: CircuitError) -> Self {
        match e {
            CircuitError::Budget(m) => CliError::Budget(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<HierarchyError> for CliError {
    fn from(e: HierarchyError) -> Self {
        match e {
            HierarchyError::BudgetExceeded(m) => CliError::Budget(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn load_circuit(file: &PathBuf, budget: &Budget) -> Result<(ExactUnitary, String), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", file.display())))?;
    let ast = circuit::parse_circuit(&text)?;
    let u = circuit::evaluate(&ast, budget)?;
    let desc = format!("{}", file.display());
    Ok((u, desc))
}

fn run(cli: Cli, budget: Budget) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze {
            file,
            hat,
            max_level,
            json,
        } => {
            let (u, desc) = load_circuit(&file, &budget)?;
            let analyzer = Analyzer::new(budget);
            let report = analyzer.analyze(&u, &desc, hat, max_level)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print_report(&report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, json } => {
            let suite = match suite {
                Suite2::Paper => Suite::Paper,
                Suite2::Counting => Suite::Counting,
                Suite2::Symplectic => Suite::Symplectic,
            };
            if n > budget.max_qubits {
                return Err(CliError::Budget(format!(
                    "-n {n} exceeds qubit budget {}",
                    budget.max_qubits
                )));
            }
            let results = run_suite(suite, n, &budget);
            let all_passed = results.iter().all(|r| r.passed);
            if json {
                println!("{}", serde_json::to_string_pretty(&results).unwrap());
            } else {
                for r in &results {
                    println!(
                        "{}: {} ({})",
                        r.tag,
                        if r.passed { "pass" } else { "FAIL" },
                        r.detail
                    );
                }
                println!(
                    "{}/{} checks passed",
                    results.iter().filter(|r| r.passed).count(),
                    results.len()
                );
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Enumerate {
            family,
            n,
            verify,
            json,
        } => {
            let family: ClimberFamily = family.into();
            if n > budget.max_qubits {
                return Err(CliError::Budget(format!(
                    "-n {n} exceeds qubit budget {}",
                    budget.max_qubits
                )));
            }
            if n < 2 {
                return Err(CliError::Input("enumeration needs n >= 2".into()));
            }
            let members = enumerate_climber_family(family, n);
            let formula = climber_count(family, n);
            #[derive(Serialize)]
            struct Entry {
                matrix: Vec<String>,
                residue_dim: Option<usize>,
                climbs: Option<bool>,
            }
            let analyzer = Analyzer::new(budget.clone());
            let mut entries = Vec::new();
            let mut verify_ok = true;
            for m in &members {
                let (mut residue_dim, mut climbs) = (None, None);
                if verify {
                    let gate =
                        climber_gate(family, m).map_err(|e| CliError::Input(e.to_string()))?;
                    let report = analyzer.climb_verdict(&gate, "family member")?;
                    residue_dim = report.clifford.as_ref().map(|c| c.residue_dim);
                    let is_climb = report.verdict == Verdict::Climbs { trivial: false };
                    climbs = Some(is_climb);
                    if !is_climb || residue_dim != Some(2) {
                        verify_ok = false;
                    }
                }
                entries.push(Entry {
                    matrix: m.bit_rows(),
                    residue_dim,
                    climbs,
                });
            }
            #[derive(Serialize)]
            struct Output {
                family: ClimberFamily,
                n: usize,
                count: usize,
                formula: u64,
                members: Vec<Entry>,
            }
            let output = Output {
                family,
                n,
                count: members.len(),
                formula,
                members: entries,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&output).unwrap());
            } else {
                println!("family: {family:?}  n: {n}");
                println!("count: {} (formula: {formula})", output.count);
                for e in &output.members {
                    let extra = match (e.residue_dim, e.climbs) {
                        (Some(d), Some(c)) => format!("  residue_dim={d} climbs={c}"),
                        _ => String::new(),
                    };
                    println!("  [{}]{extra}", e.matrix.join(" "));
                }
            }
            let count_ok = members.len() as u64 == formula;
            Ok(if count_ok && verify_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Expand { file, json } => {
            let (u, _) = load_circuit(&file, &budget)?;
            let expansion = pauli_expand(&u);
            if json {
                println!("{}", serde_json::to_string_pretty(&expansion).unwrap());
            } else {
                for (p, c) in &expansion.terms {
                    println!("{c}  ·  {p}");
                }
                println!(
                    "{} terms; support subgroup: {}; rank: {:?}",
                    expansion.terms.len(),
                    expansion.support_is_subgroup,
                    expansion.subgroup_rank
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file, json } => {
            let (u, _) = load_circuit(&file, &budget)?;
            let rep = symplectic_of(&u).map_err(|e| CliError::Input(e.to_string()))?;
            let factorization = rep.f().transvection_factorization();
            let involution = rep.f().is_involution();
            let involution_decomposition = if involution {
                rep.f().decompose_involution().ok()
            } else {
                None
            };
            // The circuit equals ζ·E times the canonical transvection product.
            let canonical = clifford_climb::clifford::clifford_from_symplectic(rep.f());
            let factor = clifford_climb::clifford::pauli_phase_quotient(&u, &canonical)
                .expect("same symplectic matrix by construction");
            #[derive(Serialize)]
            struct Output {
                f: Vec<String>,
                images: Vec<String>,
                hyperbolic: bool,
                residue_dim: usize,
                transvections: Vec<String>,
                involution_transvections: Option<Vec<String>>,
                pauli_factor: String,
                phase_factor: clifford_climb::ring::RingScalar,
            }
            let as_pauli = |v: &clifford_climb::pauli::SymplecticVector| {
                PauliOp::hermitian_rep(*v).to_string()
            };
            let output = Output {
                f: rep.f().matrix().bit_rows(),
                images: rep.images().iter().map(|p| p.to_string()).collect(),
                hyperbolic: rep.f().is_hyperbolic(),
                residue_dim: rep.residue_dim(),
                transvections: factorization.iter().map(&as_pauli).collect(),
                involution_transvections: involution_decomposition
                    .map(|vs| vs.iter().map(&as_pauli).collect()),
                pauli_factor: factor.0.to_string(),
                phase_factor: factor.1,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&output).unwrap());
            } else {
                println!("{}", rep.f());
                println!("images: {}", output.images.join(", "));
                println!(
                    "hyperbolic: {}  residue dim: {}",
                    output.hyperbolic, output.residue_dim
                );
                println!("transvections: {}", output.transvections.join(" · "));
                if let Some(iv) = &output.involution_transvections {
                    println!("involution decomposition: {}", iv.join(" · "));
                }
                println!(
                    "circuit = {} · {} · (transvection product)",
                    output.phase_factor, output.pauli_factor
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Survey { n, json } => {
            if n > budget.max_qubits {
                return Err(CliError::Budget(format!(
                    "-n {n} exceeds qubit budget {}",
                    budget.max_qubits
                )));
            }
            if !(2..=4).contains(&n) {
                return Err(CliError::Input("survey supports 2 <= n <= 4".into()));
            }
            #[derive(Serialize)]
            struct Row {
                family: String,
                residue_dim: usize,
                hyperbolic: bool,
                verdict: Verdict,
                hat_level: Option<u8>,
                budget_exhausted: bool,
            }
            let mut rows = Vec::new();
            let mut gates_list: Vec<(String, ExactUnitary)> = Vec::new();
            // All Hermitian diagonal Cliffords (symmetric zero-diagonal A).
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let mut a = clifford_climb::gf2::BinMatrix::zero(n, n);
                for (bit, &(i, j)) in pairs.iter().enumerate() {
                    if (mask >> bit) & 1 == 1 {
                        a.set(i, j, true);
                        a.set(j, i, true);
                    }
                }
                let g = clifford_climb::clifford::diagonal_clifford(&a)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                gates_list.push(("diagonal".into(), g));
            }
            // All Hermitian permutation Cliffords (involutive B).
            for code in 0u64..(1 << (n * n)) {
                let rowsv: Vec<u64> = (0..n).map(|i| (code >> (i * n)) & ((1 << n) - 1)).collect();
                let b = clifford_climb::gf2::BinMatrix::from_rows(rowsv, n);
                if b.inverse().is_err() || b.mul(&b) != clifford_climb::gf2::BinMatrix::identity(n)
                {
                    continue;
                }
                let g = clifford_climb::clifford::permutation_clifford(&b)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                gates_list.push(("permutation".into(), g));
            }
            for (family, g) in &gates_list {
                // One analyzer per gate: the work budget bounds each analysis.
                let analyzer = Analyzer::new(budget.clone());
                let report = analyzer.climb_verdict(g, family)?;
                let hat = g.hat().expect("survey gates are Hermitian");
                let (hat_level, budget_exhausted) = match analyzer.min_level(&hat, 4) {
                    Ok(level) => (level, false),
                    Err(HierarchyError::BudgetExceeded(_)) => (None, true),
                    Err(e) => return Err(e.into()),
                };
                let summary = report.clifford.as_ref().expect("survey gates are Clifford");
                rows.push(Row {
                    family: family.clone(),
                    residue_dim: summary.residue_dim,
                    hyperbolic: summary.hyperbolic,
                    verdict: report.verdict,
                    hat_level,
                    budget_exhausted,
                });
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                let mut by_key: std::collections::BTreeMap<String, usize> = Default::default();
                for r in &rows {
                    let key = format!(
                        "{} r={} hyperbolic={} hat_level={:?}{}",
                        r.family,
                        r.residue_dim,
                        r.hyperbolic,
                        r.hat_level,
                        if r.budget_exhausted {
                            " (budget exhausted)"
                        } else {
                            ""
                        }
                    );
                    *by_key.entry(key).or_default() += 1;
                }
                println!("surveyed {} Hermitian Clifford gates at n={n}", rows.len());
                for (key, count) in by_key {
                    println!("  {count:4}  {key}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_report(report: &clifford_climb::hierarchy::ClimbReport) {
    println!("input:     {}", report.input);
    println!("qubits:    {}", report.n);
    println!("hermitian: {}", report.hermitian);
    match report.min_level {
        Some(k) => println!("level:     {k}"),
        None => println!("level:     none found within budget"),
    }
    if let Some(c) = &report.clifford {
        println!("symplectic F (rows): {}", c.f.join(" "));
        println!(
            "hyperbolic: {}  residue dim: {}",
            c.hyperbolic, c.residue_dim
        );
    }
    println!("verdict:   {:?}", report.verdict);
    match &report.evidence {
        clifford_climb::hierarchy::Evidence::ResidueBasis { basis } => {
            println!("evidence:  residue basis {}", basis.join(", "));
        }
        clifford_climb::hierarchy::Evidence::ObstructionPair { e, e_prime } => {
            println!("evidence:  obstruction pair ({e}, {e_prime})");
        }
        clifford_climb::hierarchy::Evidence::None => {}
    }
    if let Some(k) = report.hat_level {
        println!("hat level: {k}");
    }
    println!(
        "work:      {} / {} units{}",
        report.budget.work_used,
        report.budget.work_limit,
        if report.budget.parallel {
            " (parallel)"
        } else {
            ""
        }
    );
}
