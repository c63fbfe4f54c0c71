//! Root systems, characters of irreducible representations, and the
//! restriction of half-spin representations along orthogonal
//! representations of `G2`, `F4` and `C3`.

mod roots;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub use roots::{add, dot, scale, sub, RootSystem, RootType};

use crate::error::{Error, Result};
use crate::ring::{rat, Coefficient, Rational};
use crate::weight::{format_weight, Weight, WeightMultiset};

/// Character of the irreducible representation with highest weight `λ`
/// (Freudenthal's recursion on dominant weights, extended by Weyl orbits).
pub fn irrep_weights(r: &RootSystem, lambda: &[Rational]) -> Result<WeightMultiset> {
    let dominant = dominant_multiplicities(r, lambda)?;
    let mut out = WeightMultiset::new();
    for (mu, m) in &dominant {
        for w in r.orbit(mu) {
            out.insert(w, *m);
        }
    }
    Ok(out)
}

/// Multiplicities of the dominant weights of `V(λ)`.
pub fn dominant_multiplicities(r: &RootSystem, lambda: &[Rational]) -> Result<BTreeMap<Weight, u64>> {
    if !r.is_dominant_integral(lambda) {
        return Err(Error::NotDominant(format_weight(lambda)));
    }
    // Dominant weights below λ, reached by subtracting positive roots.
    let depth = |mu: &Weight| -> Rational {
        r.simple_coords(&sub(lambda, mu)).into_iter().fold(Rational::zero(), |a, b| a + b)
    };
    let mut found: BTreeMap<Weight, ()> = BTreeMap::new();
    found.insert(lambda.to_vec(), ());
    let mut frontier = vec![lambda.to_vec()];
    while let Some(mu) = frontier.pop() {
        for a in r.positive_roots() {
            let nu = r.dominant_conjugate(&sub(&mu, a));
            if r.in_positive_cone(&sub(lambda, &nu)) && !found.contains_key(&nu) {
                found.insert(nu.clone(), ());
                frontier.push(nu);
            }
        }
    }
    let mut order: Vec<(Rational, Weight)> = found.into_keys().map(|mu| (depth(&mu), mu)).collect();
    order.sort();

    let lr = add(lambda, r.rho());
    let norm_lr = dot(&lr, &lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (_, mu) in order {
        if mu.as_slice() == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = Rational::zero();
        for a in r.positive_roots() {
            let mut k = 1i64;
            loop {
                let nu = add(&mu, &scale(a, &rat(k, 1)));
                let Some(m) = mult.get(&r.dominant_conjugate(&nu)) else { break };
                sum += Rational::from_int(*m as i64) * dot(&nu, a);
                k += 1;
            }
        }
        let mr = add(&mu, r.rho());
        let denom = norm_lr.clone() - dot(&mr, &mr);
        let m = sum * rat(2, 1) / denom;
        if !m.is_integer() {
            return Err(Error::Inconsistent(format!("non-integral multiplicity at {}", format_weight(&mu))));
        }
        let m = m.to_integer().to_u64().expect("nonnegative multiplicity");
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult)
}

/// Half-spin weights of `D_ℓ`: all `(±1/2, …, ±1/2)` with an even (`plus`)
/// or odd number of negative entries.
pub fn halfspin_weights(l: usize, plus: bool) -> WeightMultiset {
    assert!((1..=24).contains(&l), "half-spin rank {l} out of range");
    (0u64..1 << l)
        .filter(|bits| (bits.count_ones() % 2 == 0) == plus)
        .map(|bits| (0..l).map(|i| if bits >> i & 1 == 1 { rat(-1, 2) } else { rat(1, 2) }).collect())
        .collect()
}

/// The weights `μ_1, …, μ_ℓ` through which the Cartan of a subalgebra sits
/// in the Cartan of `so(2ℓ)`: the `i`-th coordinate weight restricts to `μ_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingData {
    pub subalgebra: RootType,
    /// One representative per `±` pair (zeros paired among themselves).
    pub representatives: Vec<Weight>,
}

impl EmbeddingData {
    /// Pairs the weights of a self-dual representation of even dimension;
    /// the representative of `±μ` is the one with `(μ, ρ) > 0` (ties broken
    /// lexicographically).
    pub fn from_weights(r: &RootSystem, weights: &WeightMultiset) -> Result<Self> {
        if weights.negated() != *weights {
            return Err(Error::Precondition("weights are not closed under negation".into()));
        }
        if !weights.total().is_multiple_of(2) {
            return Err(Error::Precondition("odd-dimensional representation has no pairing".into()));
        }
        let zero = vec![Rational::zero(); r.ambient_dim()];
        let mut reps = Vec::new();
        for (w, m) in weights.iter() {
            if *w == zero {
                reps.extend(std::iter::repeat_n(zero.clone(), (m / 2) as usize));
            } else {
                let neg: Weight = w.iter().map(|x| -x.clone()).collect();
                let s = dot(w, r.rho());
                let positive = s > Rational::zero() || (s.is_zero() && *w > neg);
                if positive {
                    reps.extend(std::iter::repeat_n(w.clone(), m as usize));
                }
            }
        }
        Ok(EmbeddingData { subalgebra: r.root_type(), representatives: reps })
    }

    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    /// The same embedding with the representatives at the given positions negated.
    pub fn flipped(&self, positions: &[usize]) -> EmbeddingData {
        let mut reps = self.representatives.clone();
        for &p in positions {
            reps[p] = reps[p].iter().map(|x| -x.clone()).collect();
        }
        EmbeddingData { subalgebra: self.subalgebra, representatives: reps }
    }
}

/// `(s_1, …, s_ℓ) ↦ Σ s_i μ_i`.
pub fn restrict_weights(w: &WeightMultiset, e: &EmbeddingData) -> Result<WeightMultiset> {
    if let Some(len) = w.rank() {
        if len != e.rank() {
            return Err(Error::DimensionMismatch(format!("{len} coordinates against {} embedding slots", e.rank())));
        }
    }
    let dim = e.representatives.first().map_or(0, Vec::len);
    Ok(w.map(|s| {
        s.iter().zip(&e.representatives).fold(vec![Rational::zero(); dim], |acc, (si, mu)| add(&acc, &scale(mu, si)))
    }))
}

/// One irreducible summand found by [`identify_irreducible`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constituent {
    pub highest_weight: Weight,
    pub dim: BigInt,
    pub multiplicity: u64,
}

/// Greedy peel-off of irreducible characters, largest first.
pub fn identify_irreducible(w: &WeightMultiset, r: &RootSystem) -> Result<Vec<Constituent>> {
    let mut rest = w.clone();
    let mut found: Vec<Constituent> = Vec::new();
    while !rest.is_empty() {
        let lambda = maximal_dominant(&rest, r)
            .ok_or_else(|| Error::NotACharacter("no dominant weight left in a nonempty multiset".into()))?;
        let chi = irrep_weights(r, &lambda)?;
        let m = rest.multiplicity(&lambda);
        rest = rest.subtract(&chi.times(m))?;
        found.push(Constituent { dim: r.weyl_dim(&lambda)?, highest_weight: lambda, multiplicity: m });
    }
    Ok(found)
}

/// Maximal dominant weight by `(μ, ρ)`, ties broken lexicographically.
fn maximal_dominant(w: &WeightMultiset, r: &RootSystem) -> Option<Weight> {
    w.iter()
        .filter(|(mu, _)| r.is_dominant(mu))
        .map(|(mu, _)| (dot(mu, r.rho()), mu.clone()))
        .max()
        .map(|(_, mu)| mu)
}

/// The three embeddings whose half-spin restrictions are checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlethysmCase {
    /// Adjoint representation of `G2`, 14-dimensional, inside `so(14)`.
    G2,
    /// 26-dimensional fundamental of `F4` inside `so(26)`.
    F4,
    /// 14-dimensional orthogonal fundamental of `C3` inside `so(14)`.
    C3,
}

impl PlethysmCase {
    pub fn root_type(self) -> RootType {
        match self {
            PlethysmCase::G2 => RootType::G2,
            PlethysmCase::F4 => RootType::F4,
            PlethysmCase::C3 => RootType::C(3),
        }
    }

    pub fn defining_dim(self) -> u64 {
        match self {
            PlethysmCase::G2 | PlethysmCase::C3 => 14,
            PlethysmCase::F4 => 26,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PlethysmCase::G2 => "g2",
            PlethysmCase::F4 => "f4",
            PlethysmCase::C3 => "c3",
        }
    }
}

impl std::str::FromStr for PlethysmCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(PlethysmCase::G2),
            "f4" => Ok(PlethysmCase::F4),
            "c3" => Ok(PlethysmCase::C3),
            other => Err(Error::Parse(format!("unknown plethysm case {other:?}"))),
        }
    }
}

/// The defining representation: for `G2` the adjoint (highest root), else
/// the unique orthogonal fundamental representation of the stated dimension.
pub fn defining_highest_weight(case: PlethysmCase, r: &RootSystem) -> Result<Weight> {
    match case {
        PlethysmCase::G2 => {
            let top = r
                .positive_roots()
                .iter()
                .max_by_key(|a| dot(a, r.rho()))
                .expect("nonempty root system")
                .clone();
            Ok(top)
        }
        _ => {
            let target = BigInt::from(case.defining_dim());
            let hits: Vec<Weight> = r
                .fundamental_weights()
                .iter()
                .filter(|w| r.weyl_dim(w).is_ok_and(|d| d == target))
                .filter(|w| is_orthogonal(r, w))
                .cloned()
                .collect();
            match hits.as_slice() {
                [one] => Ok(one.clone()),
                _ => Err(Error::Inconsistent(format!(
                    "{} orthogonal fundamentals of dimension {target} in {}",
                    hits.len(),
                    r.root_type()
                ))),
            }
        }
    }
}

/// A self-dual irreducible is orthogonal iff `⟨λ, 2ρ^∨⟩` is even.
fn is_orthogonal(r: &RootSystem, lambda: &[Rational]) -> bool {
    let p = r.two_rho_coroot_pairing(lambda);
    p.is_integer() && (p.to_integer() % 2u8) == BigInt::from(0)
}

/// Outcome of [`verify_plethysm`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlethysmReport {
    pub case: PlethysmCase,
    pub spin_rank: usize,
    pub defining_highest_weight: Weight,
    pub plus: Vec<Constituent>,
    pub minus: Vec<Constituent>,
    /// Both half-spin restrictions have the same decomposition.
    pub halfspin_agree: bool,
    /// Flipping representatives of `±μ` pairs leaves the decomposition unchanged.
    pub representative_invariant: bool,
}

impl PlethysmReport {
    pub fn irreducible(&self) -> bool {
        let single = |c: &[Constituent]| c.len() == 1 && c[0].multiplicity == 1;
        single(&self.plus) && single(&self.minus)
    }
}

/// Restricts both half-spin representations along the defining
/// representation and decomposes the results.
pub fn verify_plethysm(case: PlethysmCase) -> Result<PlethysmReport> {
    let r = RootSystem::new(case.root_type());
    let top = defining_highest_weight(case, &r)?;
    let defining = irrep_weights(&r, &top)?;
    if defining.total() != case.defining_dim() {
        return Err(Error::Inconsistent(format!("defining representation has dimension {}", defining.total())));
    }
    let e = EmbeddingData::from_weights(&r, &defining)?;
    let l = e.rank();
    let decompose = |e: &EmbeddingData, plus: bool| -> Result<Vec<Constituent>> {
        identify_irreducible(&restrict_weights(&halfspin_weights(l, plus), e)?, &r)
    };
    let plus = decompose(&e, true)?;
    let minus = decompose(&e, false)?;
    let sorted = |c: &[Constituent]| {
        let mut v: Vec<(Weight, u64)> = c.iter().map(|x| (x.highest_weight.clone(), x.multiplicity)).collect();
        v.sort();
        v
    };
    // Flip the first nonzero representative (and, independently, all of them).
    let first_nonzero: Vec<usize> =
        e.representatives.iter().position(|w| w.iter().any(|x| !x.is_zero())).into_iter().collect();
    let all: Vec<usize> = (0..l).collect();
    let mut representative_invariant = true;
    for flip in [first_nonzero, all] {
        let f = e.flipped(&flip);
        let (p, m) = (decompose(&f, true)?, decompose(&f, false)?);
        // Flipping an odd number of slots swaps the two half-spin summands.
        let (p, m) = if flip.len() % 2 == 1 { (m, p) } else { (p, m) };
        representative_invariant &= sorted(&p) == sorted(&plus) && sorted(&m) == sorted(&minus);
    }
    Ok(PlethysmReport {
        case,
        spin_rank: l,
        defining_highest_weight: top,
        halfspin_agree: sorted(&plus) == sorted(&minus),
        plus,
        minus,
        representative_invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_adjoint_character() {
        let r = RootSystem::new(RootType::G2);
        let top = defining_highest_weight(PlethysmCase::G2, &r).unwrap();
        let w = irrep_weights(&r, &top).unwrap();
        assert_eq!(w.total(), 14);
        assert_eq!(w.multiplicity(&[rat(0, 1), rat(0, 1), rat(0, 1)]), 2);
        assert_eq!(w.distinct(), 13);
    }

    #[test]
    fn trivial_and_round_trip() {
        let r = RootSystem::new(RootType::G2);
        let zero = vec![rat(0, 1); 3];
        let w = irrep_weights(&r, &zero).unwrap();
        assert_eq!(w.total(), 1);
        let c = identify_irreducible(&w.times(2), &r).unwrap();
        assert_eq!(c, vec![Constituent { highest_weight: zero, dim: BigInt::from(1), multiplicity: 2 }]);
        let rho = irrep_weights(&r, r.rho()).unwrap();
        assert_eq!(rho.total(), 64);
        let c = identify_irreducible(&rho, &r).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(&c[0].highest_weight, r.rho());
    }

    #[test]
    fn f4_26() {
        let r = RootSystem::new(RootType::F4);
        let top = defining_highest_weight(PlethysmCase::F4, &r).unwrap();
        assert_eq!(irrep_weights(&r, &top).unwrap().total(), 26);
    }

    #[test]
    fn halfspin_counts() {
        assert_eq!(halfspin_weights(7, true).total(), 64);
        assert_eq!(halfspin_weights(1, true), [vec![rat(1, 2)]].into_iter().collect());
        let w = halfspin_weights(4, true);
        assert!(w.is_negation_closed());
        assert!(halfspin_weights(3, true).union(&halfspin_weights(3, false)).is_negation_closed());
    }

    #[test]
    fn zero_embedding() {
        let e = EmbeddingData { subalgebra: RootType::G2, representatives: vec![vec![rat(0, 1); 3]; 4] };
        let w = restrict_weights(&halfspin_weights(4, true), &e).unwrap();
        assert_eq!(w.total(), 8);
        assert_eq!(w.distinct(), 1);
    }

    #[test]
    fn g2_plethysm() {
        let rep = verify_plethysm(PlethysmCase::G2).unwrap();
        assert!(rep.irreducible());
        let r = RootSystem::new(RootType::G2);
        assert_eq!(&rep.plus[0].highest_weight, r.rho());
        assert_eq!(rep.plus[0].dim, BigInt::from(64));
        assert!(rep.halfspin_agree && rep.representative_invariant);
    }
}
