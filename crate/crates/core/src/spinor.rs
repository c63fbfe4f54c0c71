//! Spinor modules `S = ΛN` for split forms, their half-spin summands, and the
//! identification of `Cl^+` with matrix algebras.
//!
//! Generator layout of the split space: `e_1..e_ℓ` are `n_1..n_ℓ`,
//! `e_{ℓ+1}..e_{2ℓ}` are `p_1..p_ℓ`, and in the odd case `e_{2ℓ+1}` is `u`.
//! The form has `b(n_i, p_j) = δ_ij`, `q(u) = 1` and nothing else.
//!
//! A spinor basis element is a subset `ω ⊆ {1..ℓ}` (bitmask), standing for
//! `n_{ω1} ∧ … ∧ n_{ωk}`. The actions are:
//! `n_i·ω = (−1)^{#{j∈ω : j<i}} ω∪{i}` (zero if `i ∈ ω`),
//! `p_i·ω = (−1)^{#{j∈ω : j<i}} ω∖{i}` (zero if `i ∉ ω`),
//! `u·ω = (−1)^{|ω|} ω`.

use crate::clifford::{Blade, Multivector, QuadraticSpace};
use crate::error::{Error, Result};
use crate::lie::pair_index;
use crate::linalg::{Matrix, Subspace};
use crate::ring::{rat, Coefficient, Rational};
use crate::weight::{Weight, WeightMultiset};

/// A generator of the split space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    N(usize),
    P(usize),
    U,
}

/// Split quadratic space `N ⊕ P (⊕ U)` of Witt index `ℓ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WittDecomposition {
    l: usize,
    odd: bool,
}

impl WittDecomposition {
    /// `m = 2ℓ`.
    pub fn even(l: usize) -> Self {
        assert!((1..=20).contains(&l), "Witt index {l} out of range");
        WittDecomposition { l, odd: false }
    }

    /// `m = 2ℓ + 1`.
    pub fn odd(l: usize) -> Self {
        assert!((1..=20).contains(&l), "Witt index {l} out of range");
        WittDecomposition { l, odd: true }
    }

    pub fn witt_index(&self) -> usize {
        self.l
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn m(&self) -> usize {
        2 * self.l + usize::from(self.odd)
    }

    /// 1-based position of a generator in the space.
    pub fn index_of(&self, g: Generator) -> Result<usize> {
        let l = self.l;
        match g {
            Generator::N(i) if (1..=l).contains(&i) => Ok(i),
            Generator::P(i) if (1..=l).contains(&i) => Ok(l + i),
            Generator::U if self.odd => Ok(2 * l + 1),
            other => Err(Error::Precondition(format!("unknown generator {other:?} for Witt index {l}"))),
        }
    }

    pub fn generator_at(&self, index: usize) -> Generator {
        let l = self.l;
        if index <= l {
            Generator::N(index)
        } else if index <= 2 * l {
            Generator::P(index - l)
        } else {
            Generator::U
        }
    }

    pub fn space(&self) -> QuadraticSpace<Rational> {
        let m = self.m();
        let mut g = vec![vec![Rational::zero(); m]; m];
        for i in 0..self.l {
            g[i][self.l + i] = rat(1, 2);
            g[self.l + i][i] = rat(1, 2);
        }
        if self.odd {
            g[m - 1][m - 1] = Rational::one();
        }
        QuadraticSpace::new(g).expect("symmetric by construction")
    }
}

/// The module `S = ΛN` with `Cl_q` acting through the generator actions.
#[derive(Clone, Debug)]
pub struct SpinorModule {
    witt: WittDecomposition,
    space: QuadraticSpace<Rational>,
}

/// A basis spinor `ω` times a sign.
type SignedBasis = Option<(u64, bool)>;

impl SpinorModule {
    pub fn new(witt: WittDecomposition) -> Self {
        SpinorModule { witt, space: witt.space() }
    }

    pub fn witt(&self) -> WittDecomposition {
        self.witt
    }

    pub fn space(&self) -> &QuadraticSpace<Rational> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        1 << self.witt.l
    }

    /// Indices of `S+ = Λ^even N` (contains `∅`), ascending.
    pub fn plus_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|w| w.count_ones() % 2 == 0).collect()
    }

    pub fn minus_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|w| w.count_ones() % 2 == 1).collect()
    }

    fn generator_on_basis(&self, index: usize, omega: u64) -> SignedBasis {
        let below = |i: usize| (omega & ((1u64 << (i - 1)) - 1)).count_ones() % 2 == 1;
        match self.witt.generator_at(index) {
            Generator::N(i) => (omega & (1 << (i - 1)) == 0).then(|| (omega | (1 << (i - 1)), below(i))),
            Generator::P(i) => (omega & (1 << (i - 1)) != 0).then(|| (omega & !(1 << (i - 1)), below(i))),
            Generator::U => Some((omega, omega.count_ones() % 2 == 1)),
        }
    }

    /// A blade `e_{i1}⋯e_{ik}` acting on `ω`; the rightmost factor acts first.
    fn blade_on_basis(&self, blade: Blade, omega: u64) -> SignedBasis {
        let mut state = (omega, false);
        for i in blade.indices().into_iter().rev() {
            let (w, s) = self.generator_on_basis(i, state.0)?;
            state = (w, state.1 ^ s);
        }
        Some(state)
    }

    /// Action of a generator on a spinor given in coordinates.
    pub fn clifford_action(&self, g: Generator, s: &[Rational]) -> Result<Vec<Rational>> {
        let index = self.witt.index_of(g)?;
        self.apply(&Multivector::generator(index), s)
    }

    /// Action of an arbitrary Clifford element on a spinor.
    pub fn apply(&self, x: &Multivector<Rational>, s: &[Rational]) -> Result<Vec<Rational>> {
        if s.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("spinor of length {} in a module of dimension {}", s.len(), self.dim())));
        }
        if x.max_index() > self.witt.m() {
            return Err(Error::IndexOutOfRange { index: x.max_index(), m: self.witt.m() });
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (omega, c) in s.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (blade, k) in x.terms() {
                if let Some((w, neg)) = self.blade_on_basis(*blade, omega as u64) {
                    let v = c.clone() * k.clone();
                    let w = w as usize;
                    out[w] = if neg { out[w].clone() - v } else { out[w].clone() + v };
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `x` on `S` (column `ω` is the image of basis spinor `ω`).
    pub fn matrix(&self, x: &Multivector<Rational>) -> Result<Matrix<Rational>> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for omega in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[omega] = Rational::one();
            for (row, v) in self.apply(x, &e)?.into_iter().enumerate() {
                m[(row, omega)] = v;
            }
        }
        Ok(m)
    }

    /// `h_i = (n_i p_i − p_i n_i)/2` as a Clifford element.
    pub fn cartan_element(&self, i: usize) -> Multivector<Rational> {
        let n = self.witt.index_of(Generator::N(i)).expect("valid index");
        let p = self.witt.index_of(Generator::P(i)).expect("valid index");
        let np = self.space.word(&[n, p]).expect("in range");
        let pn = self.space.word(&[p, n]).expect("in range");
        (np - pn).scale(&rat(1, 2))
    }

    /// Weight of basis spinor `ω`, read off the diagonal action of the `h_i`.
    pub fn weight_of(&self, omega: usize) -> Weight {
        (1..=self.witt.l)
            .map(|i| {
                let mut e = vec![Rational::zero(); self.dim()];
                e[omega] = Rational::one();
                let image = self.apply(&self.cartan_element(i), &e).expect("valid spinor");
                debug_assert!(image.iter().enumerate().all(|(k, v)| k == omega || v.is_zero()));
                image[omega].clone()
            })
            .collect()
    }

    pub fn weights(&self, basis: &[usize]) -> WeightMultiset {
        basis.iter().map(|&w| self.weight_of(w)).collect()
    }
}

/// Which summand of the spinor module to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpinPart {
    Full,
    /// `Λ^even N`.
    Plus,
    /// `Λ^odd N`.
    Minus,
}

/// Spin-representation weights for type B (`m = 2ℓ+1`) or D (`m = 2ℓ`).
pub fn spin_weights(odd: bool, l: usize, part: SpinPart) -> WeightMultiset {
    let module = SpinorModule::new(if odd { WittDecomposition::odd(l) } else { WittDecomposition::even(l) });
    let basis: Vec<usize> = match part {
        SpinPart::Full => (0..module.dim()).collect(),
        SpinPart::Plus => module.plus_basis(),
        SpinPart::Minus => module.minus_basis(),
    };
    module.weights(&basis)
}

/// Outcome of the matrix-algebra identification check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsomorphismReport {
    pub witt_index: usize,
    pub odd: bool,
    pub algebra_dim: usize,
    /// `[dim S]` in the odd case, `[dim S+, dim S−]` in the even case.
    pub module_dims: Vec<usize>,
    pub target_dim: usize,
    pub image_rank: usize,
    pub relations_hold: bool,
    pub homomorphism_holds: bool,
    pub blocks_respected: bool,
    pub first_failure: Option<String>,
}

impl IsomorphismReport {
    pub fn bijective(&self) -> bool {
        self.image_rank == self.algebra_dim && self.algebra_dim == self.target_dim
    }

    pub fn passed(&self) -> bool {
        self.bijective() && self.relations_hold && self.homomorphism_holds && self.blocks_respected
    }
}

/// Checks that `Cl^+ → End(S)` (odd) or `Cl^+ → End(S+) ⊕ End(S−)` (even)
/// is a bijective algebra map.
pub fn even_algebra_isomorphism_check(witt: WittDecomposition) -> IsomorphismReport {
    let module = SpinorModule::new(witt);
    let space = module.space().clone();
    let m = witt.m();
    let d = module.dim();
    let mut first_failure: Option<String> = None;
    let mut fail = |msg: String, flag: &mut bool| {
        *flag = false;
        if first_failure.is_none() {
            first_failure = Some(msg);
        }
    };

    // Defining relations on the generators.
    let mut relations_hold = true;
    let gens: Vec<Matrix<Rational>> =
        (1..=m).map(|i| module.matrix(&Multivector::generator(i)).expect("in range")).collect();
    let id = Matrix::<Rational>::identity(d);
    for i in 1..=m {
        for j in i..=m {
            let (a, b) = (&gens[i - 1], &gens[j - 1]);
            let lhs = if i == j { a * a } else { &(a * b) + &(b * a) };
            let expected = if i == j { id.scale(&space.q(i)) } else { id.scale(&space.b(i, j)) };
            if lhs != expected {
                let name = |k| format!("{:?}", witt.generator_at(k));
                fail(format!("relation fails for ({}, {})", name(i), name(j)), &mut relations_hold);
            }
        }
    }

    // ρ(α·x) = ρ(α)ρ(x) for bivector generators α of Cl^+ and every even blade x.
    let mut homomorphism_holds = true;
    let even = Blade::even(m);
    'outer: for i in 1..=m {
        for j in i + 1..=m {
            let alpha = Multivector::blade(Blade::from_indices(&[i, j]).expect("distinct"));
            for x in &even {
                let x = Multivector::blade(*x);
                let prod = space.product(&alpha, &x).expect("in range");
                for omega in 0..d {
                    let mut e = vec![Rational::zero(); d];
                    e[omega] = Rational::one();
                    let lhs = module.apply(&prod, &e).expect("valid");
                    let rhs = module.apply(&alpha, &module.apply(&x, &e).expect("valid")).expect("valid");
                    if lhs != rhs {
                        fail(format!("ρ(e{i}{j}·x) ≠ ρ(e{i}{j})ρ(x) for x = {x}"), &mut homomorphism_holds);
                        break 'outer;
                    }
                }
            }
        }
    }

    // Block structure and image rank.
    let plus = module.plus_basis();
    let minus = module.minus_basis();
    let parity_of = |k: usize| k.count_ones() % 2;
    let mut blocks_respected = true;
    if !witt.odd {
        for b in Blade::all(m) {
            let mat = module.matrix(&Multivector::blade(b)).expect("in range");
            let want_same = b.is_even();
            let ok = (0..d).all(|r| (0..d).all(|c| (parity_of(r) == parity_of(c)) == want_same || mat[(r, c)].is_zero()));
            if !ok {
                fail(format!("{b} does not respect S+ ⊕ S−"), &mut blocks_respected);
                break;
            }
        }
    }
    let coords = |mat: &Matrix<Rational>| -> Vec<Rational> {
        if witt.odd {
            mat.as_slice().to_vec()
        } else {
            let mut v = Vec::with_capacity(d * d / 2);
            for block in [&plus, &minus] {
                for &r in block.iter() {
                    for &c in block.iter() {
                        v.push(mat[(r, c)].clone());
                    }
                }
            }
            v
        }
    };
    let target_dim = if witt.odd { d * d } else { 2 * (d / 2) * (d / 2) };
    let mut image = Subspace::new(target_dim);
    for b in &even {
        let mat = module.matrix(&Multivector::blade(*b)).expect("in range");
        image.insert(&coords(&mat));
    }
    let image_rank = image.dim();
    let module_dims = if witt.odd { vec![d] } else { vec![plus.len(), minus.len()] };
    IsomorphismReport {
        witt_index: witt.l,
        odd: witt.odd,
        algebra_dim: even.len(),
        module_dims,
        target_dim,
        image_rank,
        relations_hold,
        homomorphism_holds,
        blocks_respected,
        first_failure,
    }
}

/// Restriction of the half-spin weights of `D_ℓ` to the Cartan of `B_{ℓ−1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictionReport {
    pub witt_index: usize,
    pub restricted_plus: WeightMultiset,
    pub restricted_minus: WeightMultiset,
    pub spin_b: WeightMultiset,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.restricted_plus == self.spin_b && self.restricted_minus == self.spin_b
    }
}

/// Restricts `S±` of `D_ℓ` along `so(2ℓ−1) ⊂ so(2ℓ)`.
///
/// The subspace `n_ℓ + p_ℓ` spans the non-isotropic line of the smaller
/// space, so the Cartan of the subalgebra is spanned by `h_1..h_{ℓ−1}` and
/// restriction forgets the last weight coordinate.
pub fn restrict_even_to_odd(l: usize) -> Result<RestrictionReport> {
    if l < 2 {
        return Err(Error::Precondition(format!("restriction needs ℓ ≥ 2, got {l}")));
    }
    let drop_last = |w: &Weight| w[..w.len() - 1].to_vec();
    Ok(RestrictionReport {
        witt_index: l,
        restricted_plus: spin_weights(false, l, SpinPart::Plus).map(drop_last),
        restricted_minus: spin_weights(false, l, SpinPart::Minus).map(drop_last),
        spin_b: spin_weights(true, l - 1, SpinPart::Full),
    })
}

/// The central involution of an even split Clifford algebra and its action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralInvolutionReport {
    pub witt_index: usize,
    pub w: Multivector<Rational>,
    pub squares_to_one: bool,
    pub anticommutes_with_vectors: bool,
    /// The scalar `c` with `w = c` on `S+` and `w = −c` on `S−`, if it exists.
    pub plus_scalar: Option<Rational>,
}

impl CentralInvolutionReport {
    pub fn passed(&self) -> bool {
        self.squares_to_one && self.anticommutes_with_vectors && self.plus_scalar.is_some()
    }
}

/// `w = a_1 b_1 ⋯ a_ℓ b_ℓ` with `a_i = n_i + p_i` and `b_i = n_i − p_i`, an
/// orthogonal basis with `q(a_i) = 1`, `q(b_i) = −1`. No rescaling is needed:
/// `w² = 1` already holds.
pub fn central_involution_check(l: usize) -> CentralInvolutionReport {
    let witt = WittDecomposition::even(l);
    let module = SpinorModule::new(witt);
    let space = module.space();
    let m = witt.m();
    let mut w = Multivector::one();
    for i in 1..=l {
        let n = Multivector::<Rational>::generator(i);
        let p = Multivector::<Rational>::generator(l + i);
        let a = &n + &p;
        let b = &n - &p;
        w = space.product_all(&[&w, &a, &b]).expect("in range");
    }
    let squares_to_one = space.product(&w, &w).expect("in range") == Multivector::one();
    let anticommutes_with_vectors = (1..=m).all(|i| {
        space.anticommutator(&w, &Multivector::generator(i)).expect("in range").is_zero()
    });
    let mat = module.matrix(&w).expect("in range");
    let d = module.dim();
    let off_diagonal_zero = (0..d).all(|r| (0..d).all(|c| r == c || mat[(r, c)].is_zero()));
    let c = mat[(0, 0)].clone();
    let consistent = (0..d).all(|k| {
        let expect = if k.count_ones() % 2 == 0 { c.clone() } else { -c.clone() };
        mat[(k, k)] == expect
    });
    CentralInvolutionReport {
        witt_index: l,
        w,
        squares_to_one,
        anticommutes_with_vectors,
        plus_scalar: (off_diagonal_zero && consistent && !c.is_zero()).then_some(c),
    }
}

/// Matrix of `ᾱ_ij` on `S` for the split form, normalized to be traceless so
/// that the map from `L′_q` is well defined (the `e_0` ambiguity is removed).
pub fn spin_image_matrix(module: &SpinorModule, coords: &[Rational]) -> Result<Matrix<Rational>> {
    let m = module.witt().m();
    let npairs = m * (m - 1) / 2;
    if coords.len() != npairs {
        return Err(Error::NotInSpan(format!("{} coordinates given, L′_q has dimension {npairs}", coords.len())));
    }
    let mut x = Multivector::zero();
    for i in 1..=m {
        for j in i + 1..=m {
            let c = &coords[pair_index(m, i, j)];
            x.add_term(Blade::from_indices(&[i, j]).expect("distinct"), c.clone());
        }
    }
    let mat = module.matrix(&x)?;
    let shift = mat.trace() / Rational::from_int(module.dim() as i64);
    Ok(&mat - &Matrix::identity(module.dim()).scale(&shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis_vec(d: usize, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); d];
        v[k] = Rational::one();
        v
    }

    #[test]
    fn generator_actions() {
        let s = SpinorModule::new(WittDecomposition::odd(2));
        // n_1·∅ = n_1
        assert_eq!(s.clifford_action(Generator::N(1), &basis_vec(4, 0)).unwrap(), basis_vec(4, 0b01));
        // p_1·(n_1 ∧ n_2) = n_2
        assert_eq!(s.clifford_action(Generator::P(1), &basis_vec(4, 0b11)).unwrap(), basis_vec(4, 0b10));
        // u·n_1 = −n_1
        let minus: Vec<Rational> = basis_vec(4, 0b01).into_iter().map(|x| -x).collect();
        assert_eq!(s.clifford_action(Generator::U, &basis_vec(4, 0b01)).unwrap(), minus);
        assert!(s.clifford_action(Generator::N(3), &basis_vec(4, 0)).is_err());
        assert!(SpinorModule::new(WittDecomposition::even(2)).clifford_action(Generator::U, &basis_vec(4, 0)).is_err());
    }

    #[test]
    fn small_isomorphisms() {
        let r = even_algebra_isomorphism_check(WittDecomposition::odd(1));
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.algebra_dim, r.module_dims.clone()), (4, vec![2]));
        let r = even_algebra_isomorphism_check(WittDecomposition::even(2));
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.algebra_dim, r.module_dims.clone()), (8, vec![2, 2]));
        let r = even_algebra_isomorphism_check(WittDecomposition::even(3));
        assert_eq!(r.image_rank, 32);
    }

    #[test]
    fn weights_of_small_modules() {
        let w = spin_weights(true, 1, SpinPart::Full);
        let expect: WeightMultiset = [vec![rat(1, 2)], vec![rat(-1, 2)]].into_iter().collect();
        assert_eq!(w, expect);
        let w = spin_weights(false, 2, SpinPart::Full);
        assert_eq!((w.distinct(), w.total()), (4, 4));
        assert_eq!(spin_weights(false, 7, SpinPart::Plus).total(), 64);
        // ∅ ∈ S+ has every coordinate −1/2.
        assert_eq!(spin_weights(false, 3, SpinPart::Plus).multiplicity(&[rat(-1, 2), rat(-1, 2), rat(-1, 2)]), 1);
    }

    #[test]
    fn cartan_elements_lie_in_even_degree_two() {
        let s = SpinorModule::new(WittDecomposition::even(3));
        for i in 1..=3 {
            let h = s.cartan_element(i);
            assert!(h.is_even() && h.filtration_degree() <= 2);
        }
    }

    #[test]
    fn restriction_small() {
        let r = restrict_even_to_odd(2).unwrap();
        let expect: WeightMultiset = [vec![rat(1, 2)], vec![rat(-1, 2)]].into_iter().collect();
        assert_eq!(r.restricted_plus, expect);
        assert!(r.passed());
        assert_eq!(restrict_even_to_odd(4).unwrap().restricted_plus.total(), 8);
    }

    #[test]
    fn central_involution() {
        for l in 1..=3 {
            let r = central_involution_check(l);
            assert!(r.passed(), "{r:?}");
        }
    }
}
