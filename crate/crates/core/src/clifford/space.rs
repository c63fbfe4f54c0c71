use super::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Coefficient, Field, Rational, Specialize};

/// A free module of rank `m` with a quadratic form `q(x) = xᵀQx`.
///
/// The symmetric matrix `Q` is the stored datum. The polar form is
/// `b_q(x, y) = q(x + y) − q(x) − q(y) = 2xᵀQy`, so `b_q(e_i, e_i) = 2q(e_i)`.
/// `Q` may be degenerate, including zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticSpace<C> {
    gram: Vec<Vec<C>>,
    polar: Vec<Vec<C>>,
}

impl<C: Coefficient> QuadraticSpace<C> {
    /// Builds the space from the symmetric matrix `Q`.
    pub fn new(gram: Vec<Vec<C>>) -> Result<Self> {
        let m = gram.len();
        if m == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        if let Some(row) = gram.iter().position(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(format!("row {row} of Q has length {} (expected {m})", gram[row].len())));
        }
        for i in 0..m {
            for j in i + 1..m {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let two = C::from_int(2);
        let polar = gram.iter().map(|r| r.iter().map(|x| two.clone() * x.clone()).collect()).collect();
        Ok(QuadraticSpace { gram, polar })
    }

    pub fn diagonal(entries: Vec<C>) -> Self {
        let m = entries.len();
        let mut gram = vec![vec![C::zero(); m]; m];
        for (i, e) in entries.into_iter().enumerate() {
            gram[i][i] = e;
        }
        QuadraticSpace::new(gram).expect("diagonal matrices are symmetric")
    }

    /// `Q = 0`: the exterior algebra.
    pub fn zero(m: usize) -> Self {
        QuadraticSpace::diagonal(vec![C::zero(); m])
    }

    pub fn identity(m: usize) -> Self {
        QuadraticSpace::diagonal(vec![C::one(); m])
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// The matrix `Q` (0-based rows).
    pub fn gram(&self) -> &[Vec<C>] {
        &self.gram
    }

    /// The matrix `2Q` of the polar form `b_q`.
    pub fn polar(&self) -> &[Vec<C>] {
        &self.polar
    }

    /// `q(e_i)`, 1-based.
    pub fn q(&self, i: usize) -> C {
        self.gram[i - 1][i - 1].clone()
    }

    /// `b_q(e_i, e_j)`, 1-based.
    pub fn b(&self, i: usize, j: usize) -> C {
        self.polar[i - 1][j - 1].clone()
    }

    /// `q(x)` for a coordinate vector.
    pub fn eval(&self, x: &[C]) -> C {
        let mut acc = C::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, xj) in x.iter().enumerate() {
                let g = &self.gram[i][j];
                if !g.is_zero() {
                    acc = acc + xi.clone() * g.clone() * xj.clone();
                }
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QuadraticSpace<D> {
        let gram = self.gram.iter().map(|r| r.iter().map(&f).collect()).collect();
        QuadraticSpace::new(gram).expect("entrywise image of a symmetric matrix is symmetric")
    }

    /// Number of canonical blades, `2^m`.
    pub fn algebra_dim(&self) -> usize {
        1 << self.dim()
    }

    fn check(&self, x: &Multivector<C>) -> Result<()> {
        let top = x.max_index();
        if top > self.dim() {
            return Err(Error::IndexOutOfRange { index: top, m: self.dim() });
        }
        Ok(())
    }

    /// `e_A · e_i` in canonical form, accumulated into `out` with factor `coef`.
    ///
    /// Only the defining relations are used: `e_i² = q(e_i)` and, for
    /// `j > i`, `e_j e_i = b_q(e_j, e_i) − e_i e_j`.
    fn blade_times_generator(&self, a: Blade, i: usize, coef: C, out: &mut Multivector<C>) {
        match a.top() {
            None => out.add_term(Blade::generator(i), coef),
            Some(top) if top < i => out.add_term(a.with(i), coef),
            Some(top) if top == i => {
                let q = &self.gram[i - 1][i - 1];
                if !q.is_zero() {
                    out.add_term(a.without(i), coef * q.clone());
                }
            }
            Some(top) => {
                // e_rest·e_top·e_i = b(top, i)·e_rest − (e_rest·e_i)·e_top
                let rest = a.without(top);
                let b = &self.polar[top - 1][i - 1];
                if !b.is_zero() {
                    out.add_term(rest, coef.clone() * b.clone());
                }
                let mut inner = Multivector::zero();
                self.blade_times_generator(rest, i, -coef, &mut inner);
                for (blade, c) in inner.terms() {
                    out.add_term(blade.with(top), c.clone());
                }
            }
        }
    }

    fn times_generator(&self, x: &Multivector<C>, i: usize) -> Multivector<C> {
        let mut out = Multivector::zero();
        for (a, c) in x.terms() {
            self.blade_times_generator(*a, i, c.clone(), &mut out);
        }
        out
    }

    /// Product of the generators `e_{w1} e_{w2} ⋯` (1-based word).
    pub fn word(&self, word: &[usize]) -> Result<Multivector<C>> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > self.dim()) {
            return Err(Error::IndexOutOfRange { index: bad, m: self.dim() });
        }
        Ok(word.iter().fold(Multivector::one(), |acc, &i| self.times_generator(&acc, i)))
    }

    /// The Clifford product `x·y`.
    pub fn product(&self, x: &Multivector<C>, y: &Multivector<C>) -> Result<Multivector<C>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.product_unchecked(x, y))
    }

    pub(crate) fn product_unchecked(&self, x: &Multivector<C>, y: &Multivector<C>) -> Multivector<C> {
        let mut out = Multivector::zero();
        for (blade, yc) in y.terms() {
            let mut w = x.clone();
            for i in blade.indices() {
                w = self.times_generator(&w, i);
            }
            for (b, c) in w.terms() {
                out.add_term(*b, c.clone() * yc.clone());
            }
        }
        out
    }

    /// Product of several factors, left to right.
    pub fn product_all(&self, factors: &[&Multivector<C>]) -> Result<Multivector<C>> {
        let mut acc = Multivector::one();
        for f in factors {
            acc = self.product(&acc, f)?;
        }
        Ok(acc)
    }

    /// `xy − yx`.
    pub fn commutator(&self, x: &Multivector<C>, y: &Multivector<C>) -> Result<Multivector<C>> {
        Ok(self.product(x, y)? - self.product(y, x)?)
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, x: &Multivector<C>, y: &Multivector<C>) -> Result<Multivector<C>> {
        Ok(self.product(x, y)? + self.product(y, x)?)
    }

    /// Principal anti-automorphism τ: reverses each blade's generator word and
    /// re-canonicalizes.
    pub fn reverse(&self, x: &Multivector<C>) -> Result<Multivector<C>> {
        self.check(x)?;
        let mut out = Multivector::zero();
        for (blade, c) in x.terms() {
            let mut w = Multivector::one();
            for i in blade.indices().into_iter().rev() {
                w = self.times_generator(&w, i);
            }
            for (b, wc) in w.terms() {
                out.add_term(*b, wc.clone() * c.clone());
            }
        }
        Ok(out)
    }
}

impl<F: Field> QuadraticSpace<F> {
    /// Rank of `2Q`.
    pub fn degeneracy_rank(&self) -> usize {
        Matrix::from_rows(self.polar.clone()).rank()
    }

    /// `det(2Q)`.
    pub fn polar_det(&self) -> F {
        Matrix::from_rows(self.polar.clone()).det()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.polar_det().is_zero()
    }
}

impl<C: Specialize> QuadraticSpace<C> {
    pub fn is_regular_at(&self, c: &Rational) -> bool {
        self.gram.iter().flatten().all(|x| x.is_regular_at(c))
    }

    /// Substitutes `t = c` entrywise.
    pub fn specialize(&self, c: &Rational) -> Result<QuadraticSpace<Rational>> {
        let mut gram = Vec::with_capacity(self.dim());
        for (i, row) in self.gram.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, x) in row.iter().enumerate() {
                let v = x.eval_at(c).ok_or_else(|| Error::Pole {
                    blade: format!("Q[{}][{}]", i + 1, j + 1),
                    at: c.to_string(),
                })?;
                out.push(v);
            }
            gram.push(out);
        }
        QuadraticSpace::new(gram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, RatFunc};

    type Mv = Multivector<Rational>;

    fn blade(ix: &[usize]) -> Mv {
        Multivector::blade(Blade::from_indices(ix).unwrap())
    }

    /// `q(e_1) = q(e_2) = 0`, `b_q(e_1, e_2) = 1`.
    fn hyperbolic_plane() -> QuadraticSpace<Rational> {
        QuadraticSpace::new(vec![vec![rat(0, 1), rat(1, 2)], vec![rat(1, 2), rat(0, 1)]]).unwrap()
    }

    #[test]
    fn generator_squares_to_form_value() {
        let v = QuadraticSpace::diagonal(vec![rat(3, 1)]);
        let e1 = blade(&[1]);
        assert_eq!(v.product(&e1, &e1).unwrap(), Multivector::scalar(rat(3, 1)));
    }

    #[test]
    fn exterior_case_anticommutes() {
        let v = QuadraticSpace::<Rational>::zero(2);
        let (e1, e2) = (blade(&[1]), blade(&[2]));
        assert_eq!(v.product(&e1, &e2).unwrap(), blade(&[1, 2]));
        assert_eq!(v.product(&e2, &e1).unwrap(), -blade(&[1, 2]));
    }

    #[test]
    fn hyperbolic_bivector_is_idempotent() {
        // Oracle: e2·e1 = e0 − e1·e2, hence
        // (e1e2)(e1e2) = e1(e0 − e1e2)e2 = e1e2 − e1e1e2e2 = e1e2.
        let v = hyperbolic_plane();
        let e12 = blade(&[1, 2]);
        assert_eq!(v.product(&e12, &e12).unwrap(), e12);
    }

    #[test]
    fn reverse_examples() {
        let v = hyperbolic_plane();
        assert_eq!(v.reverse(&blade(&[1])).unwrap(), blade(&[1]));
        assert_eq!(v.reverse(&Mv::one()).unwrap(), Mv::one());
        assert_eq!(v.reverse(&blade(&[1, 2])).unwrap(), Mv::one() - blade(&[1, 2]));
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let v = QuadraticSpace::<Rational>::identity(2);
        let e3 = blade(&[3]);
        assert_eq!(v.product(&e3, &Mv::one()), Err(Error::IndexOutOfRange { index: 3, m: 2 }));
        assert!(v.reverse(&e3).is_err());
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let err = QuadraticSpace::new(vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]]);
        assert_eq!(err, Err(Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn polar_form_and_rank() {
        let v = QuadraticSpace::diagonal(vec![rat(1, 1), rat(0, 1), rat(2, 1)]);
        assert_eq!(v.b(3, 3), rat(4, 1));
        assert_eq!(v.degeneracy_rank(), 2);
        assert_eq!(v.eval(&[rat(1, 1), rat(5, 1), rat(1, 1)]), rat(3, 1));
        let h = hyperbolic_plane();
        assert_eq!(h.b(1, 2), rat(1, 1));
        assert_eq!(h.polar_det(), rat(-1, 1));
    }

    #[test]
    fn specialize_space() {
        let t = RatFunc::t();
        let v = QuadraticSpace::diagonal(vec![RatFunc::one(), t.clone()]);
        let v0 = v.specialize(&rat(0, 1)).unwrap();
        assert_eq!(v0, QuadraticSpace::diagonal(vec![rat(1, 1), rat(0, 1)]));
        let w = QuadraticSpace::diagonal(vec![t.inverse().unwrap()]);
        assert!(w.specialize(&rat(0, 1)).is_err());
    }
}
