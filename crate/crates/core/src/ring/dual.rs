use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coefficient, Rational};

/// Dual number `re + eps·ε` with `ε² = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dual {
    pub re: Rational,
    pub eps: Rational,
}

impl Dual {
    pub fn new(re: Rational, eps: Rational) -> Self {
        Dual { re, eps }
    }

    /// The infinitesimal `ε`.
    pub fn epsilon() -> Self {
        Dual { re: Rational::zero(), eps: Rational::one() }
    }
}

impl Coefficient for Dual {
    fn zero() -> Self {
        Dual { re: Rational::zero(), eps: Rational::zero() }
    }

    fn one() -> Self {
        Dual { re: Rational::one(), eps: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    fn from_rational(r: Rational) -> Self {
        Dual { re: r, eps: Rational::zero() }
    }
}

impl Add for Dual {
    type Output = Dual;

    fn add(self, rhs: Dual) -> Dual {
        Dual { re: self.re + rhs.re, eps: self.eps + rhs.eps }
    }
}

impl Sub for Dual {
    type Output = Dual;

    fn sub(self, rhs: Dual) -> Dual {
        Dual { re: self.re - rhs.re, eps: self.eps - rhs.eps }
    }
}

impl Neg for Dual {
    type Output = Dual;

    fn neg(self) -> Dual {
        Dual { re: -self.re, eps: -self.eps }
    }
}

impl Mul for Dual {
    type Output = Dual;

    fn mul(self, rhs: Dual) -> Dual {
        let eps = self.re.clone() * rhs.eps + self.eps * rhs.re.clone();
        Dual { re: self.re * rhs.re, eps }
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn epsilon_squares_to_zero() {
        let e = Dual::epsilon();
        assert!((e.clone() * e).is_zero());
        let x = Dual::new(rat(2, 1), rat(3, 1));
        let y = Dual::new(rat(5, 1), rat(-1, 1));
        assert_eq!(x * y, Dual::new(rat(10, 1), rat(13, 1)));
    }
}
