//! Reference computations that do not go through the code paths they check.

use std::collections::BTreeMap;

use crate::clifford::{Blade, Multivector, QuadraticSpace};
use crate::linalg::{kernel, Subspace};
use crate::ring::{Coefficient, Rational};

/// `[ᾱ_ij, ᾱ_kl]` in `L′_q` as a map from ordered pairs `(a, b)`, `a < b`,
/// to coefficients.
///
/// Expands `[xy, zw] = b(y,z) xw − b(x,z) yw + b(x,w) zy − b(y,w) zx` for
/// vectors, then drops `ᾱ_aa = q(e_a) e_0 ≡ 0` and rewrites `ᾱ_ba = −ᾱ_ab`.
pub fn bracket_by_formula(
    space: &QuadraticSpace<Rational>,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
) -> BTreeMap<(usize, usize), Rational> {
    let mut out: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut add = |c: Rational, a: usize, b: usize| {
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        let e = out.entry(key).or_insert_with(Rational::zero);
        *e += c;
    };
    add(space.b(j, k), i, l);
    add(-space.b(i, k), j, l);
    add(space.b(j, l), k, i);
    add(-space.b(i, l), k, j);
    out.retain(|_, c| !c.is_zero());
    out
}

/// Variant with every coefficient doubled and `b(i,l)` in place of `b(j,k)`
/// in the first term, for `i < j < k < l`.
pub fn four_index_doubled_variant(
    space: &QuadraticSpace<Rational>,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
) -> BTreeMap<(usize, usize), Rational> {
    let two = Rational::from_int(2);
    let mut out = BTreeMap::new();
    for (c, key) in [
        (space.b(i, l), (i, l)),
        (-space.b(i, k), (j, l)),
        (space.b(i, l), (j, k)),
        (-space.b(j, l), (i, k)),
    ] {
        let e = out.entry(key).or_insert_with(Rational::zero);
        *e += two.clone() * c;
    }
    out.retain(|_, c: &mut Rational| !c.is_zero());
    out
}

/// Variant of the shared-index bracket `[ᾱ_ij, ᾱ_jl]`, `i < j < l`, with
/// `b(i,l)` in place of `b(i,j)` on `ᾱ_jl`.
pub fn shared_index_swapped_variant(
    space: &QuadraticSpace<Rational>,
    i: usize,
    j: usize,
    l: usize,
) -> BTreeMap<(usize, usize), Rational> {
    let mut out = BTreeMap::new();
    out.insert((i, l), Rational::from_int(2) * space.q(j));
    out.insert((i, j), -space.b(l, j));
    out.insert((j, l), -space.b(i, l));
    out.retain(|_, c| !c.is_zero());
    out
}

/// Radical of `Cl^+_q` as the even part of the ideal generated by the
/// kernel of the polar form, in coordinates of [`Blade::even`].
pub fn radical_from_form_kernel(space: &QuadraticSpace<Rational>) -> Subspace<Rational> {
    let m = space.dim();
    let even = Blade::even(m);
    let index: BTreeMap<Blade, usize> = even.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut span = Subspace::new(even.len());
    for r in kernel(space.polar(), m) {
        let r = Multivector::vector(&r);
        for y in Blade::all(m).into_iter().filter(|b| !b.is_even()) {
            let p = space.product(&Multivector::blade(y), &r).expect("indices within range");
            let mut coords = vec![Rational::zero(); even.len()];
            for (b, c) in p.terms() {
                coords[index[b]] = c.clone();
            }
            span.insert(&coords);
        }
    }
    span
}
