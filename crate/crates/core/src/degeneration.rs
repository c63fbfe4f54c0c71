//! One-parameter families `Q(t)` of forms, the induced families of even
//! Clifford algebras, and certificates that the special fibre at `t = 0` is a
//! degeneration of a matrix algebra.

use crate::clifford::QuadraticSpace;
use crate::error::{Error, Result};
use crate::lie::theta_tensor;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::ring::{Coefficient, RatFunc, Rational, Specialize};
use crate::tensor::AlgebraTensor;

/// A symmetric form with rational-function entries in `t`.
pub type QuadraticFamily = QuadraticSpace<RatFunc>;

/// Multiplication tensor of `Cl^+_{q_t}` over `ℚ(t)`; every entry must be
/// regular at `t = 0`.
pub fn family_tensor(family: &QuadraticFamily) -> Result<AlgebraTensor<RatFunc>> {
    let zero = Rational::zero();
    for (i, row) in family.gram().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_regular_at(&zero) {
                return Err(Error::Pole { blade: format!("Q[{}][{}]", i + 1, j + 1), at: "0".into() });
            }
        }
    }
    theta_tensor(family)
}

/// The Jacobson radical of a finite-dimensional unital algebra over `ℚ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadicalReport {
    pub dim: usize,
    /// Coordinate vectors spanning the radical.
    pub basis: Vec<Vec<Rational>>,
    /// The span is closed under left and right multiplication by the algebra.
    pub is_ideal: bool,
    /// Least `k` with `R^k = 0`, if it exists.
    pub nilpotency_index: Option<usize>,
}

impl RadicalReport {
    pub fn verified(&self) -> bool {
        self.is_ideal && self.nilpotency_index.is_some()
    }
}

/// The symmetric trace form `(x_i, x_j) ↦ Tr(L_{x_i} L_{x_j})`.
pub fn trace_form(t: &AlgebraTensor<Rational>) -> Matrix<Rational> {
    let d = t.dim();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            // Tr(L_i L_j) = Σ_{l,k} c_{il}^k c_{jk}^l
            let mut s = Rational::zero();
            for l in 0..d {
                for (k, c) in t.basis_product(i, l) {
                    let other = t.coeff(j, *k, l);
                    if !other.is_zero() {
                        s += c.clone() * other;
                    }
                }
            }
            g[(i, j)] = s.clone();
            g[(j, i)] = s;
        }
    }
    g
}

/// Radical as the kernel of the trace form (valid in characteristic 0), with
/// the ideal and nilpotency properties checked on the result.
pub fn jacobson_radical(t: &AlgebraTensor<Rational>) -> Result<RadicalReport> {
    t.check_unital()?;
    let d = t.dim();
    let g = trace_form(t);
    let basis = kernel(&g.to_rows(), d);
    let mut span = Subspace::new(d);
    for v in &basis {
        span.insert(v);
    }
    let is_ideal = basis.iter().all(|r| {
        (0..d).all(|i| {
            let e = t.basis_vector(i);
            span.contains(&t.mul(r, &e)) && span.contains(&t.mul(&e, r))
        })
    });
    Ok(RadicalReport { dim: basis.len(), nilpotency_index: nilpotency_index(t, &basis), basis, is_ideal })
}

/// Least `k` with `R^k = 0`, by iterating `R^{k+1} = R^k · R`.
fn nilpotency_index(t: &AlgebraTensor<Rational>, r: &[Vec<Rational>]) -> Option<usize> {
    let d = t.dim();
    let mut power: Vec<Vec<Rational>> = r.to_vec();
    let mut k = 1;
    loop {
        if power.is_empty() {
            return Some(k);
        }
        if k > d + 1 {
            return None;
        }
        let mut next = Subspace::new(d);
        for a in &power {
            for b in r {
                next.insert(&t.mul(a, b));
            }
        }
        if next.dim() >= power.len() && !power.is_empty() {
            return None;
        }
        power = next.basis().to_vec();
        k += 1;
    }
}

/// Dimension of the centre.
pub fn center_dim(t: &AlgebraTensor<Rational>) -> usize {
    let d = t.dim();
    // x is central iff x·e_i − e_i·x = 0 for every basis element e_i.
    let mut rows = Vec::new();
    for i in 0..d {
        let e = t.basis_vector(i);
        let mut block = vec![vec![Rational::zero(); d]; d];
        for j in 0..d {
            let x = t.basis_vector(j);
            let c = t.mul(&x, &e);
            let c2 = t.mul(&e, &x);
            for k in 0..d {
                block[k][j] = c[k].clone() - c2[k].clone();
            }
        }
        rows.extend(block);
    }
    kernel(&rows, d).len()
}

/// Data showing that the family specializes a matrix algebra at `t = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecializationWitness {
    /// `det(2Q(t))`, nonzero.
    pub det: RatFunc,
    pub fiber_dim: usize,
    pub special_fiber: AlgebraTensor<Rational>,
    pub radical: RadicalReport,
    /// A rational point where the fibre is central simple, certifying the
    /// same over `ℚ(t)` (trace-form rank can only drop under specialization).
    pub generic_point: Rational,
    pub generic_radical_dim: usize,
    pub generic_center_dim: usize,
}

/// Builds and self-checks a [`SpecializationWitness`] for odd `m`.
pub fn certify_specialization(family: &QuadraticFamily) -> Result<SpecializationWitness> {
    let m = family.dim();
    if m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("specialization certificate needs odd m, got m = {m}")));
    }
    let polar = Matrix::from_rows(family.polar().to_vec());
    let det = polar.det();
    if det.is_zero() {
        return Err(Error::Precondition("det 2Q(t) vanishes identically: the generic fibre is degenerate".into()));
    }
    let tensor = family_tensor(family)?;
    let zero = Rational::zero();
    let special_fiber = tensor.specialize(&zero)?;
    if special_fiber != theta_tensor(&family.specialize(&zero)?)? {
        return Err(Error::Inconsistent("specialization does not commute with the tensor construction".into()));
    }
    let radical = jacobson_radical(&special_fiber)?;
    if !radical.verified() {
        return Err(Error::Inconsistent("trace-form kernel is not a nil ideal".into()));
    }

    let generic_point = (1..)
        .map(Rational::from_int)
        .find(|c| family.is_regular_at(c) && det.eval_at(c).is_some_and(|v| !v.is_zero()))
        .expect("a nonzero rational function has finitely many zeros and poles");
    let generic = tensor.specialize(&generic_point)?;
    let generic_radical_dim = jacobson_radical(&generic)?.dim;
    let generic_center_dim = center_dim(&generic);
    if generic_radical_dim != 0 || generic_center_dim != 1 {
        return Err(Error::Inconsistent(format!(
            "fibre at t = {generic_point} has radical {generic_radical_dim} and centre {generic_center_dim}"
        )));
    }
    Ok(SpecializationWitness {
        det,
        fiber_dim: special_fiber.dim(),
        special_fiber,
        radical,
        generic_point,
        generic_radical_dim,
        generic_center_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Poly};

    fn diag(entries: &[i64]) -> QuadraticSpace<Rational> {
        QuadraticSpace::diagonal(entries.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn radicals_of_small_algebras() {
        assert_eq!(jacobson_radical(&theta_tensor(&diag(&[1, 1, 1])).unwrap()).unwrap().dim, 0);
        assert_eq!(jacobson_radical(&AlgebraTensor::full_matrix_algebra_unital(2)).unwrap().dim, 0);
        let r = jacobson_radical(&theta_tensor(&diag(&[1, 1, 0])).unwrap()).unwrap();
        assert_eq!(r.dim, 2);
        assert!(r.verified());
        assert_eq!(r.nilpotency_index, Some(2));
    }

    #[test]
    fn non_unital_rejected() {
        let t = AlgebraTensor::from_entries(2, 0, [(0, 0, 0, rat(1, 1))]).unwrap();
        assert!(matches!(jacobson_radical(&t), Err(Error::NonUnital(_))));
    }

    #[test]
    fn family_tensor_is_polynomial() {
        let one = RatFunc::one();
        let f = QuadraticSpace::diagonal(vec![one.clone(), one, RatFunc::t()]);
        let t = family_tensor(&f).unwrap();
        assert!(t.entries().all(|(_, _, _, c)| c.is_polynomial() && c.num().degree().unwrap_or(0) <= 1));
    }

    #[test]
    fn commutes_with_specialization() {
        let f = QuadraticSpace::diagonal(vec![RatFunc::one(), RatFunc::t(), RatFunc::from_int(2)]);
        let c = rat(5, 1);
        assert_eq!(family_tensor(&f).unwrap().specialize(&c).unwrap(), theta_tensor(&f.specialize(&c).unwrap()).unwrap());
    }

    #[test]
    fn certificates() {
        let t = RatFunc::t();
        let one = RatFunc::one();
        let w = certify_specialization(&QuadraticSpace::diagonal(vec![one.clone(), one.clone(), t.clone()])).unwrap();
        assert_eq!(w.det, RatFunc::from_poly(Poly::t().scale(&rat(8, 1))));
        assert_eq!(w.radical.dim, 2);
        let w = certify_specialization(&QuadraticSpace::diagonal(vec![one.clone(); 3])).unwrap();
        assert_eq!(w.radical.dim, 0);
        let w = certify_specialization(&QuadraticSpace::diagonal(vec![t.clone(); 3])).unwrap();
        assert_eq!(w.radical.dim, 3);
        let degenerate = QuadraticSpace::diagonal(vec![one.clone(), one, RatFunc::zero()]);
        assert!(matches!(certify_specialization(&degenerate), Err(Error::Precondition(_))));
    }
}
