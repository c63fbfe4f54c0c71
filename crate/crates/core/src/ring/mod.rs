//! Exact coefficient rings.
//!
//! Every ring here is exact: rationals are kept in lowest terms, polynomials
//! are dense by ascending degree with no trailing zeros, rational functions
//! are reduced with a monic denominator. Nothing in the crate touches
//! floating point.

mod dual;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

pub use dual::Dual;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Exact rational numbers in lowest terms.
pub type Rational = BigRational;

/// A commutative ring with exact equality.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coefficient + Div<Output = Self> {}

/// Coefficients that depend on the degeneration parameter `t` and can be
/// evaluated at a rational point.
pub trait Specialize: Coefficient {
    fn is_regular_at(&self, c: &Rational) -> bool;

    /// Substitutes `t = c`. `None` when the coefficient has a pole there.
    fn eval_at(&self, c: &Rational) -> Option<Rational>;
}

/// Shorthand for the rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

impl Coefficient for Rational {
    fn zero() -> Self {
        <Rational as num_traits::Zero>::zero()
    }

    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }

    fn is_zero(&self) -> bool {
        <Rational as num_traits::Zero>::is_zero(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Field for Rational {}

impl Specialize for Rational {
    fn is_regular_at(&self, _: &Rational) -> bool {
        true
    }

    fn eval_at(&self, _: &Rational) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Returns `Some(n)` when `r` is an integer fitting in `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7, 1));
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
