//! The Clifford–Lipschitz monoid of a possibly degenerate form, its unit
//! group, the norm-one even subgroup, and the infinitesimal version over
//! dual numbers.
//!
//! The doubled space `M ⊕ M` with form `q ⊕ −q` is realized in two bases:
//!
//! * `f_i = (e_i, 0)` and `g_i = (0, e_i)`, generators `1..m` and `m+1..2m`
//!   of a space with Gram matrix `diag(Q, −Q)`. The pair `x ⊗ y` is simply
//!   `f(x)·ψ(y)` here, a concatenation of blades, where `ψ` is the graded
//!   anti-isomorphism `e_{b1}⋯e_{bk} ↦ (−1)^{k(k−1)/2} g_{bk}⋯g_{b1}`.
//! * `δ_i = (e_i, e_i)` and `δ′_i = (e_i, −e_i)`, both totally isotropic.
//!   Giving `δ` degree `+1` and `δ′` degree `−1` grades the algebra, and the
//!   distinguished piece `Σ_j Λ^j(Δ)·Λ^j(Δ′)` is exactly the degree-zero
//!   part, spanned by the canonical blades `δ_I δ′_J` with `|I| = |J|`.
//!
//! Membership in the degree-zero part is tested in the first basis by the
//! degree derivation `D`, `D(f_i) = g_i`, `D(g_i) = f_i`, whose kernel is the
//! degree-zero part. The second basis gives an independent check by
//! expanding into `δ`, `δ′` blades and counting.

use std::collections::BTreeMap;

use crate::clifford::{Blade, Multivector, QuadraticSpace};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Subspace};
use crate::ring::{rat, Coefficient, Dual, Rational};

/// `Cl(q ⊕ −q)` together with the data needed to test Lipschitz membership.
#[derive(Clone, Debug)]
pub struct DoubledAlgebra<C> {
    base: QuadraticSpace<C>,
    fg: QuadraticSpace<C>,
    delta: QuadraticSpace<C>,
}

impl<C: Coefficient> DoubledAlgebra<C> {
    pub fn new(base: &QuadraticSpace<C>) -> Self {
        let m = base.dim();
        let mut fg = vec![vec![C::zero(); 2 * m]; 2 * m];
        let mut delta = vec![vec![C::zero(); 2 * m]; 2 * m];
        for i in 0..m {
            for j in 0..m {
                let q = base.gram()[i][j].clone();
                fg[i][j] = q.clone();
                fg[m + i][m + j] = -q.clone();
                // b(δ_i, δ′_j) = 2·b_q(e_i, e_j), so the Gram entry is b_q(e_i, e_j).
                let b = q.clone() + q;
                delta[i][m + j] = b.clone();
                delta[m + j][i] = b;
            }
        }
        DoubledAlgebra {
            base: base.clone(),
            fg: QuadraticSpace::new(fg).expect("symmetric"),
            delta: QuadraticSpace::new(delta).expect("symmetric"),
        }
    }

    pub fn base(&self) -> &QuadraticSpace<C> {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.base.dim()
    }

    /// The doubled space in the `f`, `g` basis.
    pub fn fg_space(&self) -> &QuadraticSpace<C> {
        &self.fg
    }

    /// The doubled space in the `δ`, `δ′` basis.
    pub fn delta_space(&self) -> &QuadraticSpace<C> {
        &self.delta
    }

    /// `ψ(e_B) = (−1)^{k(k−1)/2} g_{bk}⋯g_{b1}`.
    fn psi_blade(&self, blade: Blade) -> Multivector<C> {
        let m = self.m();
        let word: Vec<usize> = blade.indices().into_iter().rev().map(|i| i + m).collect();
        let w = self.fg.word(&word).expect("indices in range");
        let k = blade.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 1 {
            -w
        } else {
            w
        }
    }

    /// The image of `x ⊗ y` in `Cl(q ⊕ −q)`, in the `f`, `g` basis.
    pub fn embed_pair(&self, x: &Multivector<C>, y: &Multivector<C>) -> Result<Multivector<C>> {
        let m = self.m();
        for z in [x, y] {
            if z.max_index() > m {
                return Err(Error::IndexOutOfRange { index: z.max_index(), m });
            }
        }
        let psi: Vec<(Multivector<C>, C)> = y.terms().map(|(b, c)| (self.psi_blade(*b), c.clone())).collect();
        let mut out = Multivector::zero();
        for (a, xc) in x.terms() {
            for (py, yc) in &psi {
                for (g, gc) in py.terms() {
                    // f-indices precede g-indices and the blocks are orthogonal.
                    out.add_term(Blade::from_bits(a.bits() | g.bits()), xc.clone() * yc.clone() * gc.clone());
                }
            }
        }
        Ok(out)
    }

    /// The degree derivation in the `f`, `g` basis.
    pub fn degree_derivation(&self, z: &Multivector<C>) -> Multivector<C> {
        let m = self.m();
        let mut out = Multivector::zero();
        for (blade, c) in z.terms() {
            let word = blade.indices();
            for p in 0..word.len() {
                let mut w = word.clone();
                w[p] = if w[p] <= m { w[p] + m } else { w[p] - m };
                let image = self.fg.word(&w).expect("indices in range");
                for (b, x) in image.terms() {
                    out.add_term(*b, x.clone() * c.clone());
                }
            }
        }
        out
    }

    /// Membership in `Σ_j Λ^j(Δ)·Λ^j(Δ′)` for an element in the `f`, `g` basis.
    pub fn in_cl0(&self, z: &Multivector<C>) -> bool {
        self.degree_derivation(z).is_zero()
    }

    /// Rewrites an element from the `f`, `g` basis into the `δ`, `δ′` basis
    /// using `f_i = (δ_i + δ′_i)/2`, `g_i = (δ_i − δ′_i)/2`.
    pub fn to_delta(&self, z: &Multivector<C>) -> Multivector<C> {
        let m = self.m();
        let half = C::from_rational(rat(1, 2));
        let vector = |k: usize| -> Multivector<C> {
            let (i, sign) = if k <= m { (k, C::one()) } else { (k - m, -C::one()) };
            Multivector::from_terms([(Blade::generator(i), half.clone()), (Blade::generator(m + i), half.clone() * sign)])
        };
        let mut out = Multivector::zero();
        for (blade, c) in z.terms() {
            let mut acc = Multivector::scalar(c.clone());
            for k in blade.indices() {
                acc = self.delta.product_unchecked(&acc, &vector(k));
            }
            out = out + acc;
        }
        out
    }

    /// Membership by counting: every `δ_I δ′_J` blade has `|I| = |J|`.
    pub fn in_cl0_by_blades(&self, z_delta: &Multivector<C>) -> bool {
        let m = self.m();
        let low = (1u64 << m) - 1;
        z_delta.terms().all(|(b, _)| (b.bits() & low).count_ones() == (b.bits() >> m).count_ones())
    }

    /// Number of canonical `δ_I δ′_J` blades with `|I| = |J|`.
    pub fn cl0_dim(&self) -> usize {
        let m = self.m();
        assert!(m <= 10, "refusing to enumerate 4^{m} blades");
        let low = (1u64 << m) - 1;
        (0..1u64 << (2 * m)).filter(|b| (b & low).count_ones() == (b >> m).count_ones()).count()
    }

    /// Checks, inside the `f`, `g` realization, that `δ_i = f_i + g_i` and
    /// `δ′_i = f_i − g_i` span totally isotropic subspaces.
    pub fn deltas_isotropic(&self) -> bool {
        let m = self.m();
        let d = |i: usize, s: bool| {
            let g = Multivector::<C>::generator(m + i);
            let f = Multivector::<C>::generator(i);
            if s {
                f + g
            } else {
                f - g
            }
        };
        for s in [true, false] {
            for i in 1..=m {
                for j in i..=m {
                    let a = self.fg.anticommutator(&d(i, s), &d(j, s)).expect("in range");
                    if !a.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Full classification of one element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LipschitzReport<C> {
    pub homogeneous: bool,
    pub cl0_member: bool,
    /// `x·τ(x)` when it is a scalar equal to `τ(x)·x`.
    pub norm_scalar: Option<C>,
    pub even: bool,
}

/// Classification label of an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// In the norm-one even subgroup.
    Spin,
    /// Invertible Lipschitz element.
    Group,
    /// Nonzero element of the monoid, not invertible.
    Monoid,
    None,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Spin => "spin",
            Verdict::Group => "group",
            Verdict::Monoid => "monoid",
            Verdict::None => "none",
        }
    }
}

impl<C: Coefficient> LipschitzReport<C> {
    pub fn is_lipschitz(&self) -> bool {
        self.homogeneous && self.cl0_member
    }

    pub fn is_glip(&self) -> bool {
        self.is_lipschitz() && self.norm_scalar.as_ref().is_some_and(|n| !n.is_zero())
    }

    pub fn is_spin_kernel(&self) -> bool {
        self.is_glip() && self.even && self.norm_scalar.as_ref().is_some_and(C::is_one)
    }

    /// The zero element lies in the monoid but is reported as `none`.
    pub fn verdict(&self, is_zero: bool) -> Verdict {
        if self.is_spin_kernel() {
            Verdict::Spin
        } else if self.is_glip() {
            Verdict::Group
        } else if self.is_lipschitz() && !is_zero {
            Verdict::Monoid
        } else {
            Verdict::None
        }
    }
}

pub fn classify<C: Coefficient>(x: &Multivector<C>, d: &DoubledAlgebra<C>) -> Result<LipschitzReport<C>> {
    let space = d.base();
    let tx = space.reverse(x)?;
    let homogeneous = x.is_homogeneous();
    let cl0_member = d.in_cl0(&d.embed_pair(x, &tx)?);
    let n = space.product(x, &tx)?;
    let n2 = space.product(&tx, x)?;
    let norm_scalar = (n.is_scalar() && n == n2).then(|| n.scalar_part());
    Ok(LipschitzReport { homogeneous, cl0_member, norm_scalar, even: x.is_even() })
}

pub fn is_lipschitz<C: Coefficient>(x: &Multivector<C>, d: &DoubledAlgebra<C>) -> Result<bool> {
    if !x.is_homogeneous() {
        return Ok(false);
    }
    let tx = d.base().reverse(x)?;
    Ok(d.in_cl0(&d.embed_pair(x, &tx)?))
}

pub fn is_glip<C: Coefficient>(x: &Multivector<C>, d: &DoubledAlgebra<C>) -> Result<bool> {
    Ok(classify(x, d)?.is_glip())
}

pub fn is_spin_kernel<C: Coefficient>(x: &Multivector<C>, d: &DoubledAlgebra<C>) -> Result<bool> {
    Ok(classify(x, d)?.is_spin_kernel())
}

/// Solution of the first-order Lipschitz condition on `1 + εX`, `X` even.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InfinitesimalReport {
    pub m: usize,
    /// Basis of the solution space, as multivectors.
    pub solutions: Vec<Multivector<Rational>>,
    /// The solution space is exactly `span(e_0, e_ij)`.
    pub equals_degree_two: bool,
    /// Dimension after also imposing `X + τ(X) = 0`.
    pub spin_dim: usize,
    /// Whether `X = e_0` survives the norm condition (it never should).
    pub e0_in_spin: bool,
}

/// Linear conditions for `1 + εX` to be Lipschitz over the dual numbers,
/// solved over the even part of `Cl_q`.
pub fn infinitesimal_lipschitz(space: &QuadraticSpace<Rational>) -> Result<InfinitesimalReport> {
    let m = space.dim();
    let dual_space = space.map_coeffs(|c| Dual::from_rational(c.clone()));
    let d = DoubledAlgebra::new(&dual_space);
    let basis = Blade::even(m);

    // Column k holds the ε-parts of D(embed(1+εX_k, τ(1+εX_k))) and of X_k + τ(X_k).
    let mut lip_rows: BTreeMap<Blade, Vec<Rational>> = BTreeMap::new();
    let mut norm_rows: BTreeMap<Blade, Vec<Rational>> = BTreeMap::new();
    let n = basis.len();
    for (k, blade) in basis.iter().enumerate() {
        let x = Multivector::one() + Multivector::term(*blade, Dual::epsilon());
        let tx = dual_space.reverse(&x)?;
        let defect = d.degree_derivation(&d.embed_pair(&x, &tx)?);
        for (b, c) in defect.terms() {
            if !c.re.is_zero() {
                return Err(Error::Inconsistent(format!("zeroth-order defect at {b}")));
            }
            lip_rows.entry(*b).or_insert_with(|| vec![Rational::zero(); n])[k] = c.eps.clone();
        }
        let sum = x.clone() + tx;
        for (b, c) in sum.terms() {
            if !b.is_scalar() || !c.eps.is_zero() {
                norm_rows.entry(*b).or_insert_with(|| vec![Rational::zero(); n])[k] = c.eps.clone();
            }
        }
    }
    let lip: Vec<Vec<Rational>> = lip_rows.into_values().collect();
    let sol = kernel(&lip, n);
    let solutions: Vec<Multivector<Rational>> = sol
        .iter()
        .map(|v| Multivector::from_terms(basis.iter().zip(v).map(|(b, c)| (*b, c.clone()))))
        .collect();

    let mut span = Subspace::new(n);
    for v in &sol {
        span.insert(v);
    }
    let expected: Vec<usize> = (0..n).filter(|&k| basis[k].grade() <= 2).collect();
    let equals_degree_two = span.dim() == expected.len()
        && expected.iter().all(|&k| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            span.contains(&e)
        });

    let mut all = lip;
    all.extend(norm_rows.into_values());
    let spin = kernel(&all, n);
    let mut spin_span = Subspace::new(n);
    for v in &spin {
        spin_span.insert(v);
    }
    let mut e0 = vec![Rational::zero(); n];
    e0[0] = Rational::one();
    Ok(InfinitesimalReport {
        m,
        solutions,
        equals_degree_two,
        spin_dim: spin.len(),
        e0_in_spin: spin_span.contains(&e0),
    })
}
