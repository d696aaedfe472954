//! Exact scalars of the form (a + b·ω + c·ω² + d·ω³)/√2^k with ω = exp(iπ/4).
//!
//! ω is a primitive eighth root of unity, so ω⁴ = −1, ω² = i and ω − ω³ = √2.
//! Every matrix entry this crate ever produces (Pauli, Clifford, controlled
//! gates, square roots (I + iU)/√2) lives in this ring, so all comparisons are
//! exact and no floating point appears anywhere.
//!
//! Values are kept in a canonical form: either `k == 0`, or the numerator is
//! not divisible by √2 in Z[ω]. Equality of canonical representations then
//! coincides with equality of the represented complex numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Z[ω, 1/√2], stored as integer coefficients of
/// {1, ω, ω², ω³} over a common denominator √2^k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingScalar {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    k: u32,
}

impl RingScalar {
    /// Builds a scalar from raw coefficients and normalizes it.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        k: u32,
    ) -> Self {
        let mut s = RingScalar {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            k,
        };
        s.normalize();
        s
    }

    pub fn zero() -> Self {
        Self::from_coeffs_k0(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_coeffs_k0(1, 0, 0, 0)
    }

    /// The imaginary unit, ω².
    pub fn i() -> Self {
        Self::from_coeffs_k0(0, 0, 1, 0)
    }

    pub fn omega() -> Self {
        Self::from_coeffs_k0(0, 1, 0, 0)
    }

    /// 1/√2, i.e. numerator 1 with denominator exponent 1.
    pub fn inv_sqrt2() -> Self {
        RingScalar {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::zero(),
            k: 1,
        }
    }

    /// 1/2 = 1/√2².
    pub fn half() -> Self {
        RingScalar {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::zero(),
            k: 2,
        }
    }

    /// √2 = ω − ω³.
    pub fn sqrt2() -> Self {
        Self::from_coeffs_k0(0, 1, 0, -1)
    }

    /// i^t for a phase exponent t (mod 4).
    pub fn i_pow(t: u8) -> Self {
        match t % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -&Self::one(),
            _ => -&Self::i(),
        }
    }

    fn from_coeffs_k0(a: i64, b: i64, c: i64, d: i64) -> Self {
        RingScalar {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            k: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the represented number is real (c = 0 and d = −b after
    /// normalization, since the value is a + c·i + (b−d)/√2 + i(b+d)/√2).
    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d == -&self.b
    }

    /// Multiplication of the numerator by √2 = ω − ω³:
    /// (a, b, c, d) ↦ (b − d, a + c, b + d, c − a).
    fn num_mul_sqrt2(
        a: &BigInt,
        b: &BigInt,
        c: &BigInt,
        d: &BigInt,
    ) -> (BigInt, BigInt, BigInt, BigInt) {
        (b - d, a + c, b + d, c - a)
    }

    /// Exact division of the numerator by √2, when possible. The inverse of
    /// `num_mul_sqrt2`: a' = (b−d)/2, b' = (a+c)/2, c' = (b+d)/2, d' = (c−a)/2,
    /// defined exactly when a ≡ c and b ≡ d (mod 2).
    fn num_div_sqrt2(
        a: &BigInt,
        b: &BigInt,
        c: &BigInt,
        d: &BigInt,
    ) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
        let two = BigInt::from(2);
        if ((a - c) % 2u8).is_zero() && ((b - d) % 2u8).is_zero() {
            Some((
                (b - d) / &two,
                (a + c) / &two,
                (b + d) / &two,
                (c - a) / &two,
            ))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            match Self::num_div_sqrt2(&self.a, &self.b, &self.c, &self.d) {
                Some((a, b, c, d)) => {
                    self.a = a;
                    self.b = b;
                    self.c = c;
                    self.d = d;
                    self.k -= 1;
                }
                None => break,
            }
        }
    }

    /// Complex conjugate: ω ↦ ω⁷ = −ω³, so (a, b, c, d) ↦ (a, −d, −c, −b).
    pub fn conj(&self) -> Self {
        RingScalar {
            a: self.a.clone(),
            b: -&self.d,
            c: -&self.c,
            d: -&self.b,
            k: self.k,
        }
    }

    /// Multiplication by i = ω² without a full product:
    /// (a, b, c, d) ↦ (−c, −d, a, b).
    pub fn mul_i(&self) -> Self {
        RingScalar {
            a: -&self.c,
            b: -&self.d,
            c: self.a.clone(),
            d: self.b.clone(),
            k: self.k,
        }
    }

    /// Multiplication by ω: (a, b, c, d) ↦ (−d, a, b, c).
    pub fn mul_omega(&self) -> Self {
        RingScalar {
            a: -&self.d,
            b: self.a.clone(),
            c: self.b.clone(),
            d: self.c.clone(),
            k: self.k,
        }
    }

    /// True for the eight unit-circle elements ±ω^j, i.e. |x|² = 1.
    pub fn is_unit_phase(&self) -> bool {
        self.abs_sq().is_one()
    }

    /// Exact division by √2 (always representable: bump the denominator).
    pub fn div_sqrt2(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut s = self.clone();
        s.k += 1;
        s.normalize();
        s
    }

    /// |x|² = x·conj(x), a nonnegative real element of the ring.
    pub fn abs_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Raw canonical data (a, b, c, d, k); used by serialization and hashing.
    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt, u32) {
        (&self.a, &self.b, &self.c, &self.d, self.k)
    }

    /// Canonical byte encoding, used for matrix fingerprints.
    pub fn encode_into(&self, out: &mut Vec<u8>) {
        for coeff in [&self.a, &self.b, &self.c, &self.d] {
            let bytes = coeff.to_signed_bytes_le();
            out.push(bytes.len() as u8);
            out.extend_from_slice(&bytes);
        }
        out.extend_from_slice(&self.k.to_le_bytes());
    }
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        // Align denominators by multiplying the smaller-k numerator by √2.
        let (mut lo, hi) = if self.k <= rhs.k {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        while lo.k < hi.k {
            let (a, b, c, d) = RingScalar::num_mul_sqrt2(&lo.a, &lo.b, &lo.c, &lo.d);
            lo.a = a;
            lo.b = b;
            lo.c = c;
            lo.d = d;
            lo.k += 1;
        }
        let mut s = RingScalar {
            a: &lo.a + &hi.a,
            b: &lo.b + &hi.b,
            c: &lo.c + &hi.c,
            d: &lo.d + &hi.d,
            k: hi.k,
        };
        s.normalize();
        s
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        self + &(-rhs)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
            k: self.k,
        }
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        if self.is_zero() || rhs.is_zero() {
            return RingScalar::zero();
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        // Convolution of coefficients reduced by ω⁴ = −1.
        let mut s = RingScalar {
            a: a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2,
            b: a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            c: a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2,
            d: a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
            k: self.k + rhs.k,
        };
        s.normalize();
        s
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RingScalar {
            type Output = RingScalar;
            fn $method(self, rhs: RingScalar) -> RingScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingScalar> for RingScalar {
            type Output = RingScalar;
            fn $method(self, rhs: &RingScalar) -> RingScalar {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        -&self
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}·w + {}·w^2 + {}·w^3)/sqrt2^{}",
            self.a, self.b, self.c, self.d, self.k
        )
    }
}

impl Serialize for RingScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        fn num<S: Serializer>(seq: &mut S::SerializeSeq, v: &BigInt) -> Result<(), S::Error> {
            use serde::ser::SerializeSeq as _;
            match i64::try_from(v.clone()) {
                Ok(small) => seq.serialize_element(&small),
                Err(_) => seq.serialize_element(&v.to_string()),
            }
        }
        let mut seq = serializer.serialize_seq(Some(5))?;
        num::<S>(&mut seq, &self.a)?;
        num::<S>(&mut seq, &self.b)?;
        num::<S>(&mut seq, &self.c)?;
        num::<S>(&mut seq, &self.d)?;
        seq.serialize_element(&self.k)?;
        seq.end()
    }
}

// The sign of the real part is not meaningful in general; this is only used
// to order test output deterministically.
impl RingScalar {
    /// The value written in the basis {1, √2, i, i√2} as half-integers is
    /// (a, (b−d)/2·2, c, (b+d)/2·2); returns those four integers doubled to
    /// stay integral: (2a, b−d, 2c, b+d) along with k.
    pub fn real_imag_parts(&self) -> (BigInt, BigInt, BigInt, BigInt, u32) {
        (
            &self.a * 2,
            &self.b - &self.d,
            &self.c * 2,
            &self.b + &self.d,
            self.k,
        )
    }
}
