use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Coefficient, Field, Poly, Rational, Specialize};

/// Rational function `num/den` in `t` over the rationals.
///
/// Always reduced: `gcd(num, den) = 1` and `den` is monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den`. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn t() -> Self {
        RatFunc::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Regular at `t = 0`, i.e. an element of the local ring at `(t)`.
    pub fn is_regular_at_zero(&self) -> bool {
        self.is_regular_at(&Rational::zero())
    }

    /// `f(t + c)`.
    pub fn shift(&self, c: &Rational) -> RatFunc {
        RatFunc::new(self.num.shift(c), self.den.shift(c))
    }

    pub fn inverse(&self) -> Option<RatFunc> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl Coefficient for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(r))
    }
}

impl Field for RatFunc {}

impl Specialize for RatFunc {
    fn is_regular_at(&self, c: &Rational) -> bool {
        !self.den.eval(c).is_zero()
    }

    fn eval_at(&self, c: &Rational) -> Option<Rational> {
        let d = self.den.eval(c);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(c) / d)
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(self.num + rhs.num, self.den);
        }
        RatFunc::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num * rhs.num);
        }
        RatFunc::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: RatFunc) -> RatFunc {
        let inv = rhs.inverse().expect("division by zero rational function");
        self * inv
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
