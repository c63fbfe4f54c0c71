use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::Blade;
use crate::error::{Error, Result};
use crate::ring::{Coefficient, Rational, Specialize};

/// Sparse element of a Clifford algebra in the canonical blade basis.
///
/// Zero coefficients are never stored, so two multivectors are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector<C> {
    terms: BTreeMap<Blade, C>,
}

impl<C: Coefficient> Multivector<C> {
    pub fn zero() -> Self {
        Multivector { terms: BTreeMap::new() }
    }

    pub fn scalar(c: C) -> Self {
        Multivector::term(Blade::SCALAR, c)
    }

    pub fn one() -> Self {
        Multivector::scalar(C::one())
    }

    pub fn term(blade: Blade, c: C) -> Self {
        let mut mv = Multivector::zero();
        mv.add_term(blade, c);
        mv
    }

    /// The blade with coefficient one.
    pub fn blade(blade: Blade) -> Self {
        Multivector::term(blade, C::one())
    }

    /// The generator `e_i` (1-based).
    pub fn generator(i: usize) -> Self {
        Multivector::blade(Blade::generator(i))
    }

    /// `Σ coeffs[i-1]·e_i`, a degree-one element.
    pub fn vector(coeffs: &[C]) -> Self {
        let mut mv = Multivector::zero();
        for (i, c) in coeffs.iter().enumerate() {
            mv.add_term(Blade::generator(i + 1), c.clone());
        }
        mv
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Blade, C)>) -> Self {
        let mut mv = Multivector::zero();
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    /// Adds `c·blade`, dropping the entry if it cancels.
    pub fn add_term(&mut self, blade: Blade, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&blade);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    pub fn scalar_part(&self) -> C {
        self.coeff(Blade::SCALAR)
    }

    /// True when the element is a multiple of `e_0` (including zero).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| b.is_scalar())
    }

    pub fn scale(&self, c: &C) -> Self {
        Multivector::from_terms(self.terms.iter().map(|(b, x)| (*b, x.clone() * c.clone())))
    }

    /// Maximum blade cardinality; 0 for the zero element.
    pub fn filtration_degree(&self) -> usize {
        self.terms.keys().map(|b| b.grade()).max().unwrap_or(0)
    }

    /// Largest generator index used, 0 for scalars.
    pub fn max_index(&self) -> usize {
        self.terms.keys().filter_map(|b| b.top()).max().unwrap_or(0)
    }

    /// Every term has even cardinality. Zero counts as even.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }

    /// Every term has odd cardinality. Zero counts as odd.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| !b.is_even())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_even() || self.is_odd()
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.is_even())
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| !b.is_even())
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// Grade involution: each blade of cardinality `k` scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.is_even() { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping the terms that vanish.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Multivector<D> {
        Multivector::from_terms(self.terms.iter().map(|(b, c)| (*b, f(c))))
    }
}

impl<C: Specialize> Multivector<C> {
    /// Substitutes `t = c` in every coefficient.
    pub fn specialize(&self, c: &Rational) -> Result<Multivector<Rational>> {
        let mut out = Multivector::zero();
        for (b, x) in &self.terms {
            let v = x.eval_at(c).ok_or_else(|| Error::Pole { blade: b.to_string(), at: c.to_string() })?;
            out.add_term(*b, v);
        }
        Ok(out)
    }
}

impl<C: Coefficient> Default for Multivector<C> {
    fn default() -> Self {
        Multivector::zero()
    }
}

impl<C: Coefficient> Add for Multivector<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<C: Coefficient> Add for &Multivector<C> {
    type Output = Multivector<C>;

    fn add(self, rhs: Self) -> Multivector<C> {
        self.clone() + rhs.clone()
    }
}

impl<C: Coefficient> Neg for Multivector<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Multivector { terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect() }
    }
}

impl<C: Coefficient> Sub for Multivector<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Sub for &Multivector<C> {
    type Output = Multivector<C>;

    fn sub(self, rhs: Self) -> Multivector<C> {
        self.clone() - rhs.clone()
    }
}

impl<C: Coefficient> fmt::Display for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c})·{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coefficient> fmt::Debug for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Poly, RatFunc};

    fn b(ix: &[usize]) -> Blade {
        Blade::from_indices(ix).unwrap()
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = Multivector::term(b(&[1]), rat(2, 1));
        let y = Multivector::term(b(&[1]), rat(-2, 1));
        assert!((x + y).is_zero());
    }

    #[test]
    fn grade_involution_examples() {
        let e1: Multivector<Rational> = Multivector::generator(1);
        assert_eq!(e1.grade_involution(), -e1.clone());
        let e12: Multivector<Rational> = Multivector::blade(b(&[1, 2]));
        assert_eq!(e12.grade_involution(), e12);
        let x = Multivector::scalar(rat(5, 1)) + Multivector::blade(b(&[1, 2, 3]));
        let expected = Multivector::scalar(rat(5, 1)) - Multivector::blade(b(&[1, 2, 3]));
        assert_eq!(x.grade_involution(), expected);
    }

    #[test]
    fn even_part_and_degree() {
        let x: Multivector<Rational> = Multivector::generator(1) + Multivector::blade(b(&[1, 2]));
        assert_eq!(x.even_part(), Multivector::blade(b(&[1, 2])));
        assert_eq!(Multivector::<Rational>::one().filtration_degree(), 0);
        assert_eq!(Multivector::<Rational>::zero().filtration_degree(), 0);
        assert_eq!(x.filtration_degree(), 2);
        assert!(!x.is_homogeneous());
    }

    #[test]
    fn specialization_examples() {
        let t = RatFunc::t();
        let x = Multivector::term(b(&[1]), t.clone());
        assert!(x.specialize(&rat(0, 1)).unwrap().is_zero());

        let y = Multivector::scalar(RatFunc::one() + t.clone());
        assert_eq!(y.specialize(&rat(1, 1)).unwrap(), Multivector::scalar(rat(2, 1)));

        let pole = RatFunc::new(Poly::one(), Poly::one() - Poly::t());
        let z = Multivector::term(b(&[1, 2]), pole);
        match z.specialize(&rat(1, 1)) {
            Err(Error::Pole { blade, .. }) => assert_eq!(blade, "e12"),
            other => panic!("expected a pole, got {other:?}"),
        }
    }
}
