use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coefficient, Rational, Specialize};

/// Polynomial in `t` over the rationals, dense by ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, c: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * c.clone() + a.clone();
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = rem[shift + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (k, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = rem[shift + k].clone() - c.clone() * b.clone();
            }
            quot[shift] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => {
                let inv = Rational::one() / l.clone();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(t + c)`, by Horner's rule.
    pub fn shift(&self, c: &Rational) -> Poly {
        let lin = Poly::new(vec![c.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, a| acc * lin.clone() + Poly::constant(a.clone()))
    }
}

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Poly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(r: Rational) -> Self {
        Poly::constant(r)
    }
}

impl Specialize for Poly {
    fn is_regular_at(&self, _: &Rational) -> bool {
        true
    }

    fn eval_at(&self, c: &Rational) -> Option<Rational> {
        Some(self.eval(c))
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Poly::new(long)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a}*t")?,
                _ if a.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn shift() {
        // (t + 1)^2 = t^2 + 2t + 1
        assert_eq!(p(&[0, 0, 1]).shift(&rat(1, 1)), p(&[1, 2, 1]));
        assert_eq!(p(&[3, 1]).shift(&rat(-3, 1)), p(&[0, 1]));
    }

    #[test]
    fn arithmetic_and_trimming() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
        assert!((p(&[0, 3]) - p(&[0, 3])).is_zero());
        assert_eq!(p(&[1, 2, 3]).eval(&rat(2, 1)), rat(17, 1));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let g = Poly::gcd(&p(&[-2, 0, 2]), &p(&[3, 3]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, 2]).to_string(), "2*t^2 + 1");
        assert_eq!(Poly::t().to_string(), "t");
    }
}
