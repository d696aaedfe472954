//! A small line-oriented circuit description language.
//!
//! ```text
//! # comments run to end of line
//! qubits 4
//! CZ(1,4)
//! CZ(2,3)
//! ```
//!
//! Statement order is application order: the circuit G₁; G₂; …; G_m denotes
//! the unitary G_m···G₁ (G₁ applied to states first). Qubit indices are
//! 1-based; a bare single-qubit gate name is shorthand for qubit 1.

use crate::gates;
use crate::hierarchy::Budget;
use crate::unitary::ExactUnitary;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("budget exceeded: {0}")]
    Budget(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    R,
    Cx,
    Cz,
    Swap,
    Ccx,
    Ccz,
    Cswap,
    Cccx,
}

impl GateKind {
    pub fn from_name(name: &str) -> Option<GateKind> {
        Some(match name {
            "X" => GateKind::X,
            "Y" => GateKind::Y,
            "Z" => GateKind::Z,
            "H" => GateKind::H,
            "S" => GateKind::S,
            "SDG" => GateKind::Sdg,
            "R" => GateKind::R,
            "CX" => GateKind::Cx,
            "CZ" => GateKind::Cz,
            "SWAP" => GateKind::Swap,
            "CCX" => GateKind::Ccx,
            "CCZ" => GateKind::Ccz,
            "CSWAP" => GateKind::Cswap,
            "CCCX" => GateKind::Cccx,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::Sdg => "SDG",
            GateKind::R => "R",
            GateKind::Cx => "CX",
            GateKind::Cz => "CZ",
            GateKind::Swap => "SWAP",
            GateKind::Ccx => "CCX",
            GateKind::Ccz => "CCZ",
            GateKind::Cswap => "CSWAP",
            GateKind::Cccx => "CCCX",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            GateKind::X
            | GateKind::Y
            | GateKind::Z
            | GateKind::H
            | GateKind::S
            | GateKind::Sdg
            | GateKind::R => 1,
            GateKind::Cx | GateKind::Cz | GateKind::Swap => 2,
            GateKind::Ccx | GateKind::Ccz | GateKind::Cswap => 3,
            GateKind::Cccx => 4,
        }
    }

    pub fn matrix(&self) -> ExactUnitary {
        match self {
            GateKind::X => gates::x(),
            GateKind::Y => gates::y(),
            GateKind::Z => gates::z(),
            GateKind::H => gates::h(),
            GateKind::S => gates::s(),
            GateKind::Sdg => gates::sdg(),
            GateKind::R => gates::r(),
            GateKind::Cx => gates::cx(),
            GateKind::Cz => gates::cz(),
            GateKind::Swap => gates::swap(),
            GateKind::Ccx => gates::ccx(),
            GateKind::Ccz => gates::ccz(),
            GateKind::Cswap => gates::cswap(),
            GateKind::Cccx => gates::cccx(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateApp {
    pub gate: GateKind,
    pub qubits: Vec<usize>,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitAst {
    pub n: usize,
    pub ops: Vec<GateApp>,
}

impl fmt::Display for CircuitAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

/// Canonical printer; `parse_circuit ∘ render` is the identity on ASTs
/// (up to source spans).
pub fn render(ast: &CircuitAst) -> String {
    let mut out = format!("qubits {}\n", ast.n);
    for op in &ast.ops {
        let args: Vec<String> = op.qubits.iter().map(|q| q.to_string()).collect();
        out.push_str(&format!("{}({})\n", op.gate.name(), args.join(",")));
    }
    out
}

pub fn parse_circuit(text: &str) -> Result<CircuitAst, CircuitError> {
    let err = |line: usize, col: usize, msg: String| CircuitError::Parse { line, col, msg };
    let mut n: Option<usize> = None;
    let mut ops = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let stmt = content.trim();
        if stmt.is_empty() {
            continue;
        }
        let col = raw.find(stmt.chars().next().unwrap()).map_or(1, |p| p + 1);
        if n.is_none() {
            let Some(rest) = stmt.strip_prefix("qubits") else {
                return Err(err(line_no, col, "expected `qubits N` header".into()));
            };
            let count: usize = rest.trim().parse().map_err(|_| {
                err(
                    line_no,
                    col,
                    format!("invalid qubit count `{}`", rest.trim()),
                )
            })?;
            if count == 0 {
                return Err(err(line_no, col, "qubit count must be at least 1".into()));
            }
            n = Some(count);
            continue;
        }
        let n = n.unwrap();
        let (name, args): (&str, Vec<usize>) = match stmt.find('(') {
            Some(open) => {
                let name = stmt[..open].trim();
                let Some(close) = stmt.rfind(')') else {
                    return Err(err(
                        line_no,
                        col + open,
                        "missing closing parenthesis".into(),
                    ));
                };
                if close != stmt.len() - 1 {
                    return Err(err(line_no, col + close, "trailing input after `)`".into()));
                }
                let inner = &stmt[open + 1..close];
                let mut qubits = Vec::new();
                for part in inner.split(',') {
                    let part = part.trim();
                    let q: usize = part.parse().map_err(|_| {
                        err(line_no, col + open, format!("invalid qubit index `{part}`"))
                    })?;
                    qubits.push(q);
                }
                (name, qubits)
            }
            None => (stmt, vec![1]),
        };
        let Some(gate) = GateKind::from_name(name) else {
            return Err(err(line_no, col, format!("unknown gate `{name}`")));
        };
        if args.len() != gate.arity() {
            return Err(err(
                line_no,
                col,
                format!(
                    "{} takes {} qubit(s), got {}",
                    gate.name(),
                    gate.arity(),
                    args.len()
                ),
            ));
        }
        for &q in &args {
            if q < 1 || q > n {
                return Err(err(
                    line_no,
                    col,
                    format!("qubit index {q} out of range 1..={n}"),
                ));
            }
        }
        for (i, &q) in args.iter().enumerate() {
            if args[..i].contains(&q) {
                return Err(err(
                    line_no,
                    col,
                    format!("duplicate qubit {q} in one gate application"),
                ));
            }
        }
        ops.push(GateApp {
            gate,
            qubits: args,
            line: line_no,
            col,
        });
    }
    let Some(n) = n else {
        return Err(err(
            1,
            1,
            "empty circuit: expected `qubits N` header".into(),
        ));
    };
    Ok(CircuitAst { n, ops })
}

/// The exact unitary of the circuit: G_m···G₁ with G₁ the first statement.
pub fn evaluate(ast: &CircuitAst, budget: &Budget) -> Result<ExactUnitary, CircuitError> {
    if ast.n > budget.max_qubits {
        return Err(CircuitError::Budget(format!(
            "{} qubits exceeds budget of {}",
            ast.n, budget.max_qubits
        )));
    }
    let mut u = ExactUnitary::identity(ast.n);
    for op in &ast.ops {
        let g = op.gate.matrix().embed(ast.n, &op.qubits);
        u = g.mul(&u);
    }
    Ok(u)
}
