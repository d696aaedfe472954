//! The standard gate library with exact entries.

use crate::ring::RingScalar;
use crate::unitary::ExactUnitary;

fn one() -> RingScalar {
    RingScalar::one()
}

fn zero() -> RingScalar {
    RingScalar::zero()
}

fn build(n: usize, rows: Vec<Vec<RingScalar>>) -> ExactUnitary {
    ExactUnitary::from_rows(n, rows).expect("library gate must be unitary")
}

pub fn x() -> ExactUnitary {
    build(1, vec![vec![zero(), one()], vec![one(), zero()]])
}

pub fn y() -> ExactUnitary {
    build(
        1,
        vec![
            vec![zero(), -&RingScalar::i()],
            vec![RingScalar::i(), zero()],
        ],
    )
}

pub fn z() -> ExactUnitary {
    build(1, vec![vec![one(), zero()], vec![zero(), -&one()]])
}

pub fn h() -> ExactUnitary {
    let v = RingScalar::inv_sqrt2();
    build(1, vec![vec![v.clone(), v.clone()], vec![v.clone(), -&v]])
}

pub fn s() -> ExactUnitary {
    build(1, vec![vec![one(), zero()], vec![zero(), RingScalar::i()]])
}

pub fn sdg() -> ExactUnitary {
    build(
        1,
        vec![vec![one(), zero()], vec![zero(), -&RingScalar::i()]],
    )
}

/// R = H·S†·H = ½[[1−i, 1+i], [1+i, 1−i]].
pub fn r() -> ExactUnitary {
    let a = RingScalar::new(1, 0, -1, 0, 2); // (1−i)/2
    let b = RingScalar::new(1, 0, 1, 0, 2); // (1+i)/2
    build(1, vec![vec![a.clone(), b.clone()], vec![b, a]])
}

pub fn cx() -> ExactUnitary {
    x().controlled(1)
}

pub fn cz() -> ExactUnitary {
    z().controlled(1)
}

pub fn swap() -> ExactUnitary {
    let (o, l) = (zero(), one());
    build(
        2,
        vec![
            vec![l.clone(), o.clone(), o.clone(), o.clone()],
            vec![o.clone(), o.clone(), l.clone(), o.clone()],
            vec![o.clone(), l.clone(), o.clone(), o.clone()],
            vec![o.clone(), o.clone(), o.clone(), l.clone()],
        ],
    )
}

pub fn ccx() -> ExactUnitary {
    x().controlled(2)
}

pub fn ccz() -> ExactUnitary {
    z().controlled(2)
}

pub fn cswap() -> ExactUnitary {
    swap().controlled(1)
}

pub fn cccx() -> ExactUnitary {
    x().controlled(3)
}
