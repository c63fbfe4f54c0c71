//! Seeded generators of small exact test data.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Multivector, QuadraticSpace};
use crate::linalg::Matrix;
use crate::ring::{rat, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

/// Symmetric Gram matrix with independent small rational entries.
pub fn symmetric_form(rng: &mut impl Rng, m: usize) -> QuadraticSpace<Rational> {
    let mut g = vec![vec![rat(0, 1); m]; m];
    for i in 0..m {
        for j in i..m {
            let x = rational(rng);
            g[i][j] = x.clone();
            g[j][i] = x;
        }
    }
    QuadraticSpace::new(g).expect("symmetric by construction")
}

/// Unit lower-triangular times unit upper-triangular, with its inverse.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = rat(rng.gen_range(-2..=2), 1);
            upper[(j, i)] = rat(rng.gen_range(-2..=2), 1);
        }
    }
    let p = &lower * &upper;
    let inv = p.inverse().expect("unit triangular factors are invertible");
    (p, inv)
}

/// `Pᵀ D P` with `D` diagonal having exactly `corank` zero entries, so the
/// polar form has rank `m − corank`.
pub fn form_of_corank(rng: &mut impl Rng, m: usize, corank: usize) -> QuadraticSpace<Rational> {
    assert!(corank <= m);
    let d: Vec<Rational> = (0..m).map(|i| if i < corank { rat(0, 1) } else { nonzero_rational(rng) }).collect();
    let (p, _) = invertible_matrix(rng, m);
    let g = &(&p.transpose() * &Matrix::diagonal(&d)) * &p;
    QuadraticSpace::new(g.to_rows()).expect("congruent to a diagonal form")
}

/// Random element of `𝕄 ⊂ Cl_q`.
pub fn vector(rng: &mut impl Rng, m: usize) -> Multivector<Rational> {
    let c: Vec<Rational> = (0..m).map(|_| rational(rng)).collect();
    Multivector::vector(&c)
}

pub fn matrix(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| rational(rng)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corank_is_exact() {
        let mut r = rng(3);
        for m in 1..=5 {
            for k in 0..=m {
                assert_eq!(form_of_corank(&mut r, m, k).degeneracy_rank(), m - k);
            }
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let a = symmetric_form(&mut rng(9), 4);
        let b = symmetric_form(&mut rng(9), 4);
        assert_eq!(a, b);
    }
}
