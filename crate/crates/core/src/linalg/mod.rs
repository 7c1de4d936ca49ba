//! Exact scalars and free-module arithmetic.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms.
//! [`LinComb`] is a finitely supported combination over an ordered basis;
//! tensors are combinations over tuples of basis elements.

mod echelon;
mod lincomb;

pub use echelon::{row_space_membership, RowEchelon};
pub use lincomb::{BasisDisplay, LinComb, Tensor, Tensor3, Tensor4};

use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always normalized with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `1 / n!`
pub fn inv_factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rational::new(BigInt::one(), f)
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Parses `p/q` or `p` (optionally signed).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    if let Some((n, d)) = t.split_once('/') {
        let num = BigInt::from_str(n.trim()).map_err(|_| Error::parse(0, "bad numerator"))?;
        let den = BigInt::from_str(d.trim())
            .map_err(|_| Error::parse(n.len() + 1, "bad denominator"))?;
        if den.is_zero() {
            return Err(Error::parse(n.len() + 1, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    } else {
        let num = BigInt::from_str(t).map_err(|_| Error::parse(0, "bad integer"))?;
        Ok(Rational::from_integer(num))
    }
}

/// Exact `base^exp` for a rational base.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
