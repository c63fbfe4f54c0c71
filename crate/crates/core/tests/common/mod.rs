#![allow(dead_code)]

use cliffdeg::clifford::{Blade, Multivector, QuadraticSpace};
use cliffdeg::linalg::Matrix;
use cliffdeg::ring::{rat, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

pub fn form(m: usize) -> impl Strategy<Value = QuadraticSpace<Rational>> {
    proptest::collection::vec(rational(), m * (m + 1) / 2).prop_map(move |upper| {
        let mut g = vec![vec![rat(0, 1); m]; m];
        let mut it = upper.into_iter();
        for i in 0..m {
            for j in i..m {
                let x = it.next().unwrap();
                g[i][j] = x.clone();
                g[j][i] = x;
            }
        }
        QuadraticSpace::new(g).unwrap()
    })
}

pub fn form_up_to(max_m: usize) -> impl Strategy<Value = QuadraticSpace<Rational>> {
    (1..=max_m).prop_flat_map(form)
}

pub fn multivector(m: usize, max_terms: usize) -> impl Strategy<Value = Multivector<Rational>> {
    proptest::collection::vec((0u64..(1u64 << m), rational()), 0..=max_terms)
        .prop_map(|terms| Multivector::from_terms(terms.into_iter().map(|(b, c)| (Blade::from_bits(b), c))))
}

pub fn vector(m: usize) -> impl Strategy<Value = Multivector<Rational>> {
    proptest::collection::vec(rational(), m).prop_map(|c| Multivector::vector(&c))
}

pub fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(rational(), n * n)
        .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()))
}

/// Unit lower times unit upper triangular, with its inverse.
pub fn invertible(n: usize) -> impl Strategy<Value = (Matrix<Rational>, Matrix<Rational>)> {
    proptest::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                lower[(i, j)] = rat(v[i * n + j], 1);
                upper[(j, i)] = rat(v[j * n + i], 1);
            }
        }
        let p = &lower * &upper;
        let inv = p.inverse().unwrap();
        (p, inv)
    })
}
