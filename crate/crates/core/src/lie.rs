//! The Lie algebra `L_q` of even elements of filtration degree at most two,
//! its quotient `L′_q = L_q / k·e_0`, and recovery of the form from the
//! bracket table.

use std::collections::BTreeMap;

use crate::clifford::{Blade, Multivector, QuadraticSpace};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, Field, RatFunc};
use crate::tensor::AlgebraTensor;

/// The ordered pairs `(i, j)`, `1 ≤ i < j ≤ m`, lexicographically. Position
/// in this list is the index of `ᾱ_ij` in `L′_q`.
pub fn pair_list(m: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 1..=m {
        for j in i + 1..=m {
            v.push((i, j));
        }
    }
    v
}

/// Index of `ᾱ_ij` (`i < j`) in [`pair_list`].
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= m);
    // Pairs starting with a < i come first: Σ_{a<i} (m − a).
    (i - 1) * m - (i - 1) * i / 2 + (j - i - 1)
}

/// `ᾱ_ij` for arbitrary distinct `i, j`, as (index, sign) using `ᾱ_ji = −ᾱ_ij`.
fn oriented(m: usize, i: usize, j: usize) -> (usize, bool) {
    if i < j {
        (pair_index(m, i, j), true)
    } else {
        (pair_index(m, j, i), false)
    }
}

/// `L_q` with basis `[e_0, α_12, …, α_(m−1)m]`.
#[derive(Clone)]
pub struct EvenLieAlgebra<C> {
    space: QuadraticSpace<C>,
    basis: Vec<Multivector<C>>,
    pairs: Vec<(usize, usize)>,
}

/// Builds `L_q` and checks that every bracket of basis elements stays inside
/// the span of `e_0` and the bivectors.
pub fn build_even_lie<C: Coefficient>(space: &QuadraticSpace<C>) -> Result<EvenLieAlgebra<C>> {
    let m = space.dim();
    let pairs = pair_list(m);
    let mut basis = vec![Multivector::one()];
    for &(i, j) in &pairs {
        basis.push(space.word(&[i, j])?);
    }
    let lie = EvenLieAlgebra { space: space.clone(), basis, pairs };
    for a in 0..lie.dim() {
        for b in a + 1..lie.dim() {
            let br = space.commutator(&lie.basis[a], &lie.basis[b])?;
            let stray = br.terms().map(|(blade, _)| *blade).find(|blade| !(blade.is_scalar() || blade.grade() == 2));
            if let Some(blade) = stray {
                return Err(Error::Inconsistent(format!(
                    "bracket of basis elements {a} and {b} leaves L_q through {blade}"
                )));
            }
        }
    }
    Ok(lie)
}

impl<C: Coefficient> EvenLieAlgebra<C> {
    pub fn space(&self) -> &QuadraticSpace<C> {
        &self.space
    }

    /// `1 + m(m−1)/2`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Multivector<C>] {
        &self.basis
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinates of an element of `L_q` in the basis, or `NotInSpan`.
    pub fn coordinates(&self, x: &Multivector<C>) -> Result<Vec<C>> {
        let m = self.space.dim();
        let mut out = vec![C::zero(); self.dim()];
        for (blade, c) in x.terms() {
            if blade.is_scalar() {
                out[0] = c.clone();
            } else if blade.grade() == 2 {
                let ix = blade.indices();
                out[1 + pair_index(m, ix[0], ix[1])] = c.clone();
            } else {
                return Err(Error::NotInSpan(format!("{blade} is not in L_q")));
            }
        }
        Ok(out)
    }

    /// Coordinates of `[x_a, x_b]` for basis indices `a, b`.
    pub fn bracket(&self, a: usize, b: usize) -> Vec<C> {
        let br = self.space.commutator(&self.basis[a], &self.basis[b]).expect("basis lives in the space");
        self.coordinates(&br).expect("closure verified at construction")
    }
}

/// Structure constants of `L′_q` in the basis `ᾱ_ij`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientLieAlgebra<C> {
    m: usize,
    /// `table[a][b]` lists `(c, coefficient of ᾱ_c in [ᾱ_a, ᾱ_b])`.
    table: Vec<Vec<Vec<(usize, C)>>>,
}

impl<C: Coefficient> QuotientLieAlgebra<C> {
    /// Accepts an external table of `(a, b, c, coefficient)` entries over the
    /// basis [`pair_list`]`(m)` and checks antisymmetry and the Jacobi identity.
    pub fn from_constants(m: usize, entries: impl IntoIterator<Item = (usize, usize, usize, C)>) -> Result<Self> {
        let l = QuotientLieAlgebra::from_entries_unchecked(m, entries)?;
        if let Some((a, b)) = l.antisymmetry_defect() {
            return Err(Error::Inconsistent(format!("[ᾱ_{a}, ᾱ_{b}] ≠ −[ᾱ_{b}, ᾱ_{a}]")));
        }
        if let Some((a, b, c)) = l.jacobi_defect() {
            return Err(Error::Inconsistent(format!("Jacobi identity fails on basis triple ({a}, {b}, {c})")));
        }
        Ok(l)
    }

    fn from_entries_unchecked(m: usize, entries: impl IntoIterator<Item = (usize, usize, usize, C)>) -> Result<Self> {
        let d = m * m.saturating_sub(1) / 2;
        let mut dense: BTreeMap<(usize, usize, usize), C> = BTreeMap::new();
        for (a, b, c, x) in entries {
            if a >= d || b >= d || c >= d {
                return Err(Error::DimensionMismatch(format!("constant ({a}, {b}, {c}) outside dimension {d}")));
            }
            let slot = dense.entry((a, b, c)).or_insert_with(C::zero);
            *slot = slot.clone() + x;
        }
        let mut table = vec![vec![Vec::new(); d]; d];
        for ((a, b, c), x) in dense {
            if !x.is_zero() {
                table[a][b].push((c, x));
            }
        }
        Ok(QuotientLieAlgebra { m, table })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, C)] {
        &self.table[a][b]
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> C {
        self.table[a][b].iter().find(|(k, _)| *k == c).map_or_else(C::zero, |(_, x)| x.clone())
    }

    /// Coefficient of `ᾱ_kl` in `[ᾱ_ij, ᾱ_pq]` for arbitrary index pairs with
    /// distinct entries, using `ᾱ_ji = −ᾱ_ij`.
    pub fn coefficient(&self, (i, j): (usize, usize), (p, q): (usize, usize), (k, l): (usize, usize)) -> C {
        let (a, sa) = oriented(self.m, i, j);
        let (b, sb) = oriented(self.m, p, q);
        let (c, sc) = oriented(self.m, k, l);
        let x = self.constant(a, b, c);
        if sa ^ sb ^ sc {
            x
        } else {
            -x
        }
    }

    /// All nonzero `(a, b, c, coefficient)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &C)> {
        self.table.iter().enumerate().flat_map(|(a, row)| {
            row.iter().enumerate().flat_map(move |(b, cell)| cell.iter().map(move |(c, x)| (a, b, *c, x)))
        })
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[C], y: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (c, k) in &self.table[a][b] {
                    out[*c] = out[*c].clone() + xa.clone() * yb.clone() * k.clone();
                }
            }
        }
        out
    }

    pub fn antisymmetry_defect(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        for a in 0..d {
            for b in a..d {
                let ab = &self.table[a][b];
                let ba: Vec<(usize, C)> = self.table[b][a].iter().map(|(c, x)| (*c, -x.clone())).collect();
                if *ab != ba {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First basis triple violating the Jacobi identity.
    pub fn jacobi_defect(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    if !self.jacobi_holds(a, b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `[x_a,[x_b,x_c]] + [x_b,[x_c,x_a]] + [x_c,[x_a,x_b]] = 0`.
    pub fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let e = |i: usize| {
            let mut v = vec![C::zero(); self.dim()];
            v[i] = C::one();
            v
        };
        let term = |x: usize, y: usize, z: usize| self.bracket(&e(x), &self.bracket(&e(y), &e(z)));
        let s1 = term(a, b, c);
        let s2 = term(b, c, a);
        let s3 = term(c, a, b);
        s1.into_iter().zip(s2).zip(s3).all(|((p, q), r)| (p + q + r).is_zero())
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QuotientLieAlgebra<D> {
        QuotientLieAlgebra::from_entries_unchecked(self.m, self.entries().map(|(a, b, c, x)| (a, b, c, f(x))))
            .expect("same shape")
    }
}

/// Structure constants of `L′_q`, computed from the geometric product.
pub fn structure_constants<C: Coefficient>(space: &QuadraticSpace<C>) -> Result<QuotientLieAlgebra<C>> {
    let m = space.dim();
    if m < 2 {
        return Err(Error::Precondition(format!("L′_q needs m ≥ 2, got m = {m}")));
    }
    let pairs = pair_list(m);
    let blades: Vec<Multivector<C>> = pairs
        .iter()
        .map(|&(i, j)| Multivector::blade(Blade::from_indices(&[i, j]).expect("distinct indices")))
        .collect();
    let mut entries = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let br = space.commutator(&blades[a], &blades[b])?;
            for (blade, x) in br.terms() {
                match blade.grade() {
                    0 => {}
                    2 => {
                        let ix = blade.indices();
                        let c = pair_index(m, ix[0], ix[1]);
                        entries.push((a, b, c, x.clone()));
                        entries.push((b, a, c, -x.clone()));
                    }
                    _ => {
                        return Err(Error::Inconsistent(format!("bracket left L_q through {blade}")));
                    }
                }
            }
        }
    }
    QuotientLieAlgebra::from_entries_unchecked(m, entries)
}

/// Recovers `Q` from the bracket table of `L′_q`.
///
/// For distinct `i, j, l`:
/// `[ᾱ_ij, ᾱ_jl] = 2q(e_j)·ᾱ_il − b(i,j)·ᾱ_jl − b(j,l)·ᾱ_ij`,
/// so both `q(e_j)` and every off-diagonal `b(i,j)` can be read off once
/// `m ≥ 3`. The recovered form is re-expanded and compared against the
/// input; a mismatch means the table does not come from any form.
pub fn reconstruct_form<F: Field>(l: &QuotientLieAlgebra<F>) -> Result<QuadraticSpace<F>> {
    let m = l.m();
    if m < 3 {
        return Err(Error::Precondition(format!("form reconstruction needs m ≥ 3, got m = {m}")));
    }
    let two = F::from_int(2);
    let third = |a: usize, b: usize| (1..=m).find(|&x| x != a && x != b).expect("m ≥ 3");
    let mut gram = vec![vec![F::zero(); m]; m];
    for j in 1..=m {
        let i = third(j, j);
        let k = third(i, j);
        gram[j - 1][j - 1] = l.coefficient((i, j), (j, k), (i, k)) / two.clone();
    }
    for i in 1..=m {
        for j in i + 1..=m {
            let k = third(i, j);
            let b_ij = -l.coefficient((i, j), (j, k), (j, k));
            gram[i - 1][j - 1] = b_ij.clone() / two.clone();
            gram[j - 1][i - 1] = b_ij / two.clone();
        }
    }
    let space = QuadraticSpace::new(gram)?;
    if structure_constants(&space)? != *l {
        return Err(Error::Inconsistent("bracket table does not arise from a quadratic form".into()));
    }
    Ok(space)
}

/// Multiplication tensor of `Cl^+_q` on the even blades in basis order
/// (grade, then lexicographic), with `e_0` as identity (index 0).
pub fn theta_tensor<C: Coefficient>(space: &QuadraticSpace<C>) -> Result<AlgebraTensor<C>> {
    let basis = Blade::even(space.dim());
    let index: BTreeMap<Blade, usize> = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let elems: Vec<Multivector<C>> = basis.iter().map(|b| Multivector::blade(*b)).collect();
    AlgebraTensor::from_fn(basis.len(), 0, |i, j| {
        space
            .product_unchecked(&elems[i], &elems[j])
            .terms()
            .map(|(b, c)| (index[b], c.clone()))
            .collect()
    })
}

/// Recovers `Q` from a tensor laid out as by [`theta_tensor`], using only the
/// products of bivector basis elements.
pub fn reconstruct_from_tensor<F: Field>(tensor: &AlgebraTensor<F>) -> Result<QuadraticSpace<F>> {
    let d = tensor.dim();
    if !d.is_power_of_two() || tensor.identity() != 0 {
        return Err(Error::DimensionMismatch(format!("tensor of dimension {d} is not an even Clifford layout")));
    }
    let m = d.trailing_zeros() as usize + 1;
    if m < 3 {
        return Err(Error::Precondition(format!("form reconstruction needs m ≥ 3, got m = {m}")));
    }
    let basis = Blade::even(m);
    let npairs = m * (m - 1) / 2;
    // Bivectors occupy positions 1..=npairs, in the same order as pair_list.
    let mut entries = Vec::new();
    for a in 0..npairs {
        for b in 0..npairs {
            let (x, y) = (a + 1, b + 1);
            let mut coeffs: BTreeMap<usize, F> = BTreeMap::new();
            for (k, c) in tensor.basis_product(x, y) {
                let e = coeffs.entry(*k).or_insert_with(F::zero);
                *e = e.clone() + c.clone();
            }
            for (k, c) in tensor.basis_product(y, x) {
                let e = coeffs.entry(*k).or_insert_with(F::zero);
                *e = e.clone() - c.clone();
            }
            for (k, c) in coeffs {
                if c.is_zero() || k == 0 {
                    continue;
                }
                if basis[k].grade() != 2 {
                    return Err(Error::Inconsistent(format!("bivector bracket has a {} component", basis[k])));
                }
                entries.push((a, b, k - 1, c));
            }
        }
    }
    reconstruct_form(&QuotientLieAlgebra::from_entries_unchecked(m, entries)?)
}

/// Both regularity criteria for a one-parameter family at `t = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IntegralityReport {
    pub constants_regular: bool,
    pub form_regular: bool,
}

/// Decides whether the family `Q(t)` extends over the local ring at `t = 0`,
/// once through the constants of `L′_{q_t}` and once through the entries of
/// `2Q(t)`. The two answers must agree, otherwise `Inconsistent`.
pub fn integrality_witness(family: &QuadraticSpace<RatFunc>) -> Result<bool> {
    let report = integrality_report(family)?;
    if report.constants_regular != report.form_regular {
        return Err(Error::Inconsistent(format!(
            "constants regular: {}, form regular: {}",
            report.constants_regular, report.form_regular
        )));
    }
    Ok(report.form_regular)
}

pub fn integrality_report(family: &QuadraticSpace<RatFunc>) -> Result<IntegralityReport> {
    let m = family.dim();
    if m < 3 {
        return Err(Error::Precondition(format!("integrality test needs m ≥ 3, got m = {m}")));
    }
    let constants_regular = structure_constants(family)?.entries().all(|(_, _, _, x)| x.is_regular_at_zero());
    let form_regular = family.polar().iter().flatten().all(RatFunc::is_regular_at_zero);
    Ok(IntegralityReport { constants_regular, form_regular })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Poly, Rational};

    fn ident(m: usize) -> QuadraticSpace<Rational> {
        QuadraticSpace::identity(m)
    }

    #[test]
    fn pair_indexing() {
        for m in 2..8 {
            for (k, &(i, j)) in pair_list(m).iter().enumerate() {
                assert_eq!(pair_index(m, i, j), k);
            }
        }
    }

    #[test]
    fn dimension_is_flat() {
        assert_eq!(build_even_lie(&ident(3)).unwrap().dim(), 4);
        assert_eq!(build_even_lie(&QuadraticSpace::<Rational>::zero(5)).unwrap().dim(), 11);
    }

    #[test]
    fn identity_form_bracket() {
        let l = structure_constants(&ident(3)).unwrap();
        assert_eq!(l.coefficient((1, 2), (2, 3), (1, 3)), rat(2, 1));
        assert_eq!(l.bracket_basis(0, 2), &[(pair_index(3, 1, 3), rat(2, 1))]);
    }

    #[test]
    fn zero_form_is_abelian() {
        let l = structure_constants(&QuadraticSpace::<Rational>::zero(4)).unwrap();
        assert_eq!(l.entries().count(), 0);
    }

    #[test]
    fn disjoint_pair_bracket() {
        let mut g = vec![vec![rat(0, 1); 4]; 4];
        g[0][3] = rat(1, 2);
        g[3][0] = rat(1, 2);
        let l = structure_constants(&QuadraticSpace::new(g).unwrap()).unwrap();
        assert_eq!(l.coefficient((1, 2), (3, 4), (1, 4)), rat(0, 1));
        assert_eq!(l.coefficient((1, 2), (3, 4), (2, 3)), rat(1, 1));
    }

    #[test]
    fn round_trip_small() {
        let g = vec![
            vec![rat(1, 1), rat(1, 3), rat(0, 1)],
            vec![rat(1, 3), rat(-2, 1), rat(5, 7)],
            vec![rat(0, 1), rat(5, 7), rat(0, 1)],
        ];
        let v = QuadraticSpace::new(g).unwrap();
        assert_eq!(reconstruct_form(&structure_constants(&v).unwrap()).unwrap(), v);
        assert_eq!(reconstruct_from_tensor(&theta_tensor(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn small_m_rejected() {
        let l = structure_constants(&ident(2)).unwrap();
        assert!(matches!(reconstruct_form(&l), Err(Error::Precondition(_))));
    }

    #[test]
    fn inconsistent_table_rejected() {
        // Scale the identity table's constants unevenly: still a Lie algebra
        // is not guaranteed, and certainly not of Clifford type.
        let l = structure_constants(&ident(3)).unwrap();
        let entries: Vec<_> = l
            .entries()
            .map(|(a, b, c, x)| (a, b, c, if a == 0 && b == 1 { x.clone() * rat(3, 1) } else { x.clone() }))
            .collect();
        let bad = QuotientLieAlgebra::from_entries_unchecked(3, entries).unwrap();
        assert!(reconstruct_form(&bad).is_err());
    }

    #[test]
    fn external_constants_checked() {
        let l = structure_constants(&ident(4)).unwrap();
        let ok = QuotientLieAlgebra::from_constants(4, l.entries().map(|(a, b, c, x)| (a, b, c, x.clone())));
        assert_eq!(ok.unwrap(), l);
        let broken = QuotientLieAlgebra::from_constants(4, [(0, 1, 2, rat(1, 1))]);
        assert!(matches!(broken, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn theta_tensor_shape() {
        let t = theta_tensor(&ident(3)).unwrap();
        assert_eq!(t.dim(), 4);
        t.check_unital().unwrap();
        assert_eq!(t.associativity_defect(), None);
    }

    #[test]
    fn integrality_examples() {
        let t = RatFunc::t();
        let one = RatFunc::one();
        let fam = |x: RatFunc| QuadraticSpace::diagonal(vec![one.clone(), one.clone(), x]);
        assert!(integrality_witness(&fam(t.clone())).unwrap());
        assert!(!integrality_witness(&fam(one.clone() / t.clone())).unwrap());
        let r = RatFunc::new(Poly::t(), Poly::one() + Poly::t());
        assert!(integrality_witness(&fam(r)).unwrap());
    }
}
