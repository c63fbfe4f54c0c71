//! The acceptance suite: ten checks, each run with a seeded generator and a
//! time budget, reporting one line.

pub mod oracle;
pub mod random;

use std::fmt;
use std::time::{Duration, Instant};

use crate::clifford::{Multivector, QuadraticSpace};
use crate::degeneration::certify_specialization;
use crate::error::Result;
use crate::lie::{pair_index, pair_list, reconstruct_form, structure_constants};
use crate::linalg::{Matrix, Subspace};
use crate::lipschitz::{classify, infinitesimal_lipschitz, is_lipschitz, DoubledAlgebra};
use crate::local_models::{
    centralizer_dim, generates_full_algebra, is_cyclic_vector, s_equivalent, sl2_basis, spin_image_respects_brackets,
    spin_image_tuple, MatrixTuple,
};
use crate::plethysm::{verify_plethysm, PlethysmCase, RootSystem, RootType};
use crate::ring::{rat, Coefficient, RatFunc, Rational};
use crate::spinor::{even_algebra_isomorphism_check, restrict_even_to_odd, WittDecomposition};
use crate::weight::format_weight;

use self::random::TestRng;

pub const DEFAULT_SEED: u64 = 20240601;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    /// The mathematical checks all held.
    pub correct: bool,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
    /// Summary, or the first counterexample on failure.
    pub detail: String,
    /// Additional observations that do not affect the verdict.
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn passed(&self) -> bool {
        self.correct && self.within_budget()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!("{:.2}s of {}s", self.elapsed.as_secs_f64(), b.as_secs()),
            None => format!("{:.2}s", self.elapsed.as_secs_f64()),
        };
        write!(f, "[{verdict}] {:>2}. {} ({budget}): {}", self.id, self.title, self.detail)?;
        if !self.within_budget() {
            write!(f, " [over time budget]")?;
        }
        Ok(())
    }
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget_secs: Option<u64>,
    run: fn(&mut TestRng) -> Result<Outcome>,
}

struct Outcome {
    correct: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { correct: true, detail: detail.into(), notes: Vec::new() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Outcome { correct: false, detail: detail.into(), notes: Vec::new() }
    }

    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "form reconstruction round trip", budget_secs: Some(30), run: form_reconstruction },
    Criterion { id: 2, title: "structure constants vs bracket formula", budget_secs: None, run: bracket_oracle },
    Criterion { id: 3, title: "even Clifford algebra as matrix algebra", budget_secs: Some(10), run: matrix_identification },
    Criterion { id: 4, title: "half-spin restriction D_l to B_(l-1)", budget_secs: None, run: even_to_odd },
    Criterion { id: 5, title: "Lipschitz monoid axioms", budget_secs: Some(60), run: lipschitz_axioms },
    Criterion { id: 6, title: "degeneration certificates", budget_secs: Some(30), run: degeneration },
    Criterion { id: 7, title: "plethysm G2", budget_secs: Some(10), run: plethysm_g2 },
    Criterion { id: 8, title: "plethysm F4 and C3", budget_secs: Some(120), run: plethysm_f4_c3 },
    Criterion { id: 9, title: "local models", budget_secs: Some(30), run: local_models },
    Criterion { id: 10, title: "Weyl dimension of V_rho", budget_secs: None, run: weyl_dimension },
];

pub fn criterion_ids() -> impl Iterator<Item = u8> {
    CRITERIA.iter().map(|c| c.id)
}

/// Runs one criterion; `None` for an unknown id. Each criterion draws from
/// its own stream derived from `seed`.
pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionReport> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let mut rng = random::rng(seed ^ (u64::from(id) << 32));
    let start = Instant::now();
    let outcome = (c.run)(&mut rng).unwrap_or_else(|e| Outcome::fail(format!("error: {e}")));
    Some(CriterionReport {
        id: c.id,
        title: c.title,
        correct: outcome.correct,
        elapsed: start.elapsed(),
        budget: c.budget_secs.map(Duration::from_secs),
        detail: outcome.detail,
        notes: outcome.notes,
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    criterion_ids().filter_map(|id| run_criterion(id, seed)).collect()
}

fn form_reconstruction(rng: &mut TestRng) -> Result<Outcome> {
    for trial in 0..200 {
        let m = 3 + trial % 7;
        let q = random::symmetric_form(rng, m);
        let back = reconstruct_form(&structure_constants(&q)?)?;
        if back != q {
            return Ok(Outcome::fail(format!("trial {trial}, m = {m}: {:?} recovered as {:?}", q.gram(), back.gram())));
        }
    }
    Ok(Outcome::pass("200 random forms, m = 3..9, recovered exactly"))
}

fn bracket_oracle(rng: &mut TestRng) -> Result<Outcome> {
    let mut checked = 0usize;
    let (mut four, mut four_variant_bad) = (0usize, 0usize);
    let (mut shared, mut shared_variant_bad) = (0usize, 0usize);
    for m in 2..=7 {
        let mut forms = vec![QuadraticSpace::identity(m), random::form_of_corank(rng, m, 1)];
        forms.extend((0..3).map(|_| random::symmetric_form(rng, m)));
        for q in &forms {
            let lie = structure_constants(q)?;
            let pairs = pair_list(m);
            for &x in &pairs {
                for &y in &pairs {
                    let expected = oracle::bracket_by_formula(q, x, y);
                    for &z in &pairs {
                        let want = expected.get(&z).cloned().unwrap_or_else(Rational::zero);
                        let got = lie.coefficient(x, y, z);
                        if got != want {
                            return Ok(Outcome::fail(format!(
                                "m = {m}, Q = {:?}: coefficient of a{}{} in [a{}{}, a{}{}] is {got}, formula gives {want}",
                                q.gram(),
                                z.0,
                                z.1,
                                x.0,
                                x.1,
                                y.0,
                                y.1
                            )));
                        }
                        checked += 1;
                    }
                    let ((i, j), (k, l)) = (x, y);
                    if i < j && j < k && k < l {
                        four += 1;
                        four_variant_bad += usize::from(oracle::four_index_doubled_variant(q, x, y) != expected);
                    }
                    if j == k && i < l && j < l {
                        shared += 1;
                        shared_variant_bad += usize::from(oracle::shared_index_swapped_variant(q, i, j, l) != expected);
                    }
                }
            }
        }
    }
    let notes = vec![
        format!(
            "doubled four-index variant (2b_il on a_il) disagrees with the product on {four_variant_bad} of {four} four-index patterns"
        ),
        format!(
            "shared-index variant with b(i,l) on a_jl disagrees with the product on {shared_variant_bad} of {shared} shared-index patterns"
        ),
    ];
    Ok(Outcome::pass(format!(
        "{checked} coefficients, m = 2..7, {four} four-index and {shared} shared-index patterns, all exact"
    ))
    .with_notes(notes))
}

fn matrix_identification(_: &mut TestRng) -> Result<Outcome> {
    let mut ranks = Vec::new();
    for l in 1..=4 {
        for witt in [WittDecomposition::odd(l), WittDecomposition::even(l)] {
            let r = even_algebra_isomorphism_check(witt);
            if !r.passed() || !r.bijective() {
                return Ok(Outcome::fail(format!(
                    "l = {l}, odd = {}: image rank {} of {}, target {}, first failure {:?}",
                    witt.is_odd(),
                    r.image_rank,
                    r.algebra_dim,
                    r.target_dim,
                    r.first_failure
                )));
            }
            ranks.push(format!("{}{}:{}", if witt.is_odd() { "B" } else { "D" }, l, r.image_rank));
        }
    }
    Ok(Outcome::pass(format!("bijective for l = 1..4, image ranks {}", ranks.join(" "))))
}

fn even_to_odd(_: &mut TestRng) -> Result<Outcome> {
    for l in 2..=7 {
        let r = restrict_even_to_odd(l)?;
        if !r.passed() {
            return Ok(Outcome::fail(format!("l = {l}: restricted multisets differ from the spin weights of B_{}", l - 1)));
        }
    }
    Ok(Outcome::pass("both half-spin restrictions equal the B_(l-1) spin multiset for l = 2..7"))
}

/// `λ + ab` with random `λ`, `a`, `b`.
fn lambda_ab(rng: &mut TestRng, q: &QuadraticSpace<Rational>) -> Result<Multivector<Rational>> {
    let m = q.dim();
    let ab = q.product(&random::vector(rng, m), &random::vector(rng, m))?;
    Ok(Multivector::scalar(random::rational(rng)) + ab)
}

fn lipschitz_axioms(rng: &mut TestRng) -> Result<Outcome> {
    let mut generators_checked = 0;
    let mut products_checked = 0;
    for m in 1..=5 {
        let forms = [random::form_of_corank(rng, m, 0),
            random::form_of_corank(rng, m, 1),
            QuadraticSpace::zero(m),
            random::symmetric_form(rng, m)];
        for (f, q) in forms.iter().enumerate() {
            let d = DoubledAlgebra::new(q);
            let mut gens: Vec<Multivector<Rational>> = (1..=m).map(Multivector::generator).collect();
            for _ in 0..4 {
                gens.push(random::vector(rng, m));
                gens.push(lambda_ab(rng, q)?);
            }
            for x in &gens {
                if !is_lipschitz(x, &d)? {
                    return Ok(Outcome::fail(format!("m = {m}, Q = {:?}: generator {x} is not Lipschitz", q.gram())));
                }
                generators_checked += 1;
            }
            // 500 products in total: 25 per form, 4 forms per m, m = 1..5.
            for _ in 0..25 {
                let k = 2 + rng_index(rng, 2);
                let factors: Vec<&Multivector<Rational>> = (0..k).map(|_| &gens[rng_index(rng, gens.len())]).collect();
                let x = q.product_all(&factors)?;
                let r = classify(&x, &d)?;
                let tx = q.reverse(&x)?;
                let tau_ok = is_lipschitz(&tx, &d)?;
                if !r.is_lipschitz() || !tau_ok || r.norm_scalar.is_none() {
                    return Ok(Outcome::fail(format!(
                        "m = {m}, form #{f}, Q = {:?}, x = {x}: lipschitz {}, tau(x) lipschitz {tau_ok}, scalar norm {}",
                        q.gram(),
                        r.is_lipschitz(),
                        r.norm_scalar.is_some()
                    )));
                }
                products_checked += 1;
            }
        }
    }
    for m in 1..=6 {
        for corank in [0, 1, m] {
            let q = random::form_of_corank(rng, m, corank);
            let r = infinitesimal_lipschitz(&q)?;
            if !r.equals_degree_two || r.spin_dim != m * (m - 1) / 2 || r.e0_in_spin {
                return Ok(Outcome::fail(format!(
                    "m = {m}, corank {corank}: solution dim {}, equals degree two {}, spin dim {} (expected {})",
                    r.solutions.len(),
                    r.equals_degree_two,
                    r.spin_dim,
                    m * (m - 1) / 2
                )));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{generators_checked} generators and {products_checked} products pass; infinitesimal space and spin dimension m(m-1)/2 hold for m = 1..6, corank 0, 1, m"
    )))
}

fn rng_index(rng: &mut TestRng, n: usize) -> usize {
    use rand::Rng;
    rng.gen_range(0..n)
}

fn degeneration(_: &mut TestRng) -> Result<Outcome> {
    let mut dims = Vec::new();
    for m in [3, 5, 7] {
        let mut diag = vec![RatFunc::one(); m];
        diag[m - 1] = RatFunc::t();
        let w = certify_specialization(&QuadraticSpace::diagonal(diag))?;
        let mut special = vec![Rational::one(); m];
        special[m - 1] = Rational::zero();
        let expected = oracle::radical_from_form_kernel(&QuadraticSpace::diagonal(special));
        let mut computed = Subspace::new(w.fiber_dim);
        for v in &w.radical.basis {
            computed.insert(v);
        }
        let same = computed.dim() == expected.dim() && expected.basis().iter().all(|v| computed.contains(v));
        if w.radical.dim == 0 || !same || !w.radical.verified() {
            return Ok(Outcome::fail(format!(
                "m = {m}: radical dim {} vs ideal-generated {}, same span {same}, nil ideal {}",
                w.radical.dim,
                expected.dim(),
                w.radical.verified()
            )));
        }
        dims.push(format!("m={m}: {}/{}", w.radical.dim, w.fiber_dim));
    }
    Ok(Outcome::pass(format!("radical dims {} match the ideal generated by ker 2Q(0), nil", dims.join(", "))))
}

fn plethysm_summary(case: PlethysmCase, expected_dim: u64) -> Result<(bool, String)> {
    let r = verify_plethysm(case)?;
    let roots = RootSystem::new(case.root_type());
    let ok = r.irreducible()
        && r.halfspin_agree
        && r.representative_invariant
        && r.plus[0].dim == expected_dim.into()
        && r.minus[0].dim == expected_dim.into();
    let hw = r.plus.first().map(|c| c.highest_weight.clone()).unwrap_or_default();
    let labels = roots.dynkin_labels(&hw);
    let text = format!(
        "{} in D_{}: {} constituent(s), highest weight {} (labels {}), dim {}",
        case.name(),
        r.spin_rank,
        r.plus.len(),
        format_weight(&hw),
        format_weight(&labels),
        r.plus.first().map(|c| c.dim.to_string()).unwrap_or_default()
    );
    Ok((ok, text))
}

fn plethysm_g2(_: &mut TestRng) -> Result<Outcome> {
    let r = verify_plethysm(PlethysmCase::G2)?;
    let roots = RootSystem::new(RootType::G2);
    let rho_ok = r.plus.iter().chain(&r.minus).all(|c| &c.highest_weight == roots.rho());
    let (ok, text) = plethysm_summary(PlethysmCase::G2, 64)?;
    if ok && rho_ok {
        Ok(Outcome::pass(format!("{text}; equals rho, both half-spins")))
    } else {
        Ok(Outcome::fail(format!("{text}; highest weight is rho: {rho_ok}")))
    }
}

fn plethysm_f4_c3(_: &mut TestRng) -> Result<Outcome> {
    let (f4_ok, f4) = plethysm_summary(PlethysmCase::F4, 4096)?;
    let (c3_ok, c3) = plethysm_summary(PlethysmCase::C3, 64)?;
    let detail = format!("{f4}; {c3}; both half-spins agree");
    Ok(if f4_ok && c3_ok { Outcome::pass(detail) } else { Outcome::fail(detail) })
}

fn m2(rows: [[i64; 2]; 2]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
}

fn local_models(rng: &mut TestRng) -> Result<Outcome> {
    let zero2 = m2([[0, 0], [0, 0]]);
    let nil = MatrixTuple::new(2, vec![m2([[0, 1], [0, 0]]), m2([[0, 0], [1, 0]])])?;
    let id = MatrixTuple::new(2, vec![m2([[1, 0], [0, 1]]); 2])?;
    let diag = MatrixTuple::new(2, vec![m2([[1, 0], [0, 2]]), m2([[3, 0], [0, 4]])])?;
    let e1 = [rat(1, 1), rat(0, 1)];
    let examples = [
        ("nilpotent pair generates M_2", generates_full_algebra(&nil)),
        ("identity pair does not generate", !generates_full_algebra(&id)),
        ("commuting diagonals do not generate", !generates_full_algebra(&diag)),
        ("(1,0) is cyclic for the nilpotent pair", is_cyclic_vector(&nil, &e1)?),
        ("0 is not cyclic", !is_cyclic_vector(&nil, &[rat(0, 1), rat(0, 1)])?),
        ("(1,0) is not cyclic for diagonals", !is_cyclic_vector(&diag, &e1)?),
        (
            "diag(1,2) ~ diag(2,1)",
            s_equivalent(
                &MatrixTuple::new(2, vec![m2([[1, 0], [0, 2]]), zero2.clone()])?,
                &MatrixTuple::new(2, vec![m2([[2, 0], [0, 1]]), zero2.clone()])?,
                None,
            )?
            .equivalent,
        ),
        (
            "nilpotent ~ zero",
            s_equivalent(&MatrixTuple::new(2, vec![m2([[0, 1], [0, 0]]), zero2.clone()])?, &MatrixTuple::zero(2, 2), None)?
                .equivalent,
        ),
        ("centralizer of the nilpotent pair in sl_2 is 0", centralizer_dim(&nil, &sl2_basis())? == 0),
        ("centralizer of (0,0) is sl_2", centralizer_dim(&MatrixTuple::zero(2, 2), &sl2_basis())? == 3),
        (
            "centralizer of (H,0) is the Cartan line",
            centralizer_dim(&MatrixTuple::new(2, vec![m2([[1, 0], [0, -1]]), zero2.clone()])?, &sl2_basis())? == 1,
        ),
    ];
    if let Some((name, _)) = examples.iter().find(|(_, ok)| !ok) {
        return Ok(Outcome::fail(format!("example failed: {name}")));
    }

    for trial in 0..50 {
        let n = 1 + trial % 3;
        let g = 1 + rng_index(rng, 3);
        let t = MatrixTuple::new(n, (0..g).map(|_| random::matrix(rng, n)).collect())?;
        let (p, p_inv) = random::invertible_matrix(rng, n);
        let c = t.conjugate(&p, &p_inv)?;
        let r = s_equivalent(&t, &c, None)?;
        if !r.equivalent || generates_full_algebra(&t) != generates_full_algebra(&c) {
            return Ok(Outcome::fail(format!("conjugation trial {trial}: {t:?} vs {c:?}, word {:?}", r.counterexample)));
        }
    }

    let sl2_element = |rng: &mut TestRng| {
        let (a, b, c) = (random::rational(rng), random::rational(rng), random::rational(rng));
        Matrix::from_rows(vec![vec![a.clone(), b], vec![c, -a]])
    };
    let generic = MatrixTuple::new(2, vec![sl2_element(rng), sl2_element(rng)])?;
    let generic_dim = centralizer_dim(&generic, &sl2_basis())?;
    if generic_dim != 0 {
        return Ok(Outcome::fail(format!("centralizer of the random sl_2 pair {generic:?} has dim {generic_dim}")));
    }

    let h1 = spin_image_tuple(&[vec![rat(1, 1), rat(0, 1), rat(0, 1)]], WittDecomposition::odd(1))?;
    if h1.matrices()[0] != Matrix::diagonal(&[rat(-1, 2), rat(1, 2)]) {
        return Ok(Outcome::fail("n_1 p_1 does not act as diag(-1/2, 1/2) on S for l = 1"));
    }
    let pair = vec![vec![rat(0, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 1)]];
    if !generates_full_algebra(&spin_image_tuple(&pair, WittDecomposition::odd(1))?) {
        return Ok(Outcome::fail("spin image of a generating so(3) pair does not generate M_2"));
    }
    for witt in [WittDecomposition::odd(1), WittDecomposition::odd(2), WittDecomposition::even(2), WittDecomposition::even(3)] {
        let m = witt.m();
        let lie = structure_constants(&witt.space())?;
        let mut elements: Vec<Vec<Rational>> =
            (0..3).map(|_| (0..m * (m - 1) / 2).map(|_| random::rational(rng)).collect()).collect();
        let mut unit = vec![Rational::zero(); m * (m - 1) / 2];
        unit[pair_index(m, 1, m)] = Rational::one();
        elements.push(unit);
        if !spin_image_respects_brackets(&elements, witt, &lie)? {
            return Ok(Outcome::fail(format!("spin image does not respect brackets for {witt:?}")));
        }
    }
    Ok(Outcome::pass(format!(
        "{} examples, 50 random conjugations (n <= 3), generic sl_2 centralizer 0, spin image brackets exact",
        examples.len()
    )))
}

fn weyl_dimension(_: &mut TestRng) -> Result<Outcome> {
    let mut types = vec![RootType::G2, RootType::F4];
    types.extend((2..=5).map(RootType::B));
    types.extend((2..=5).map(RootType::C));
    types.extend((3..=6).map(RootType::D));
    let mut summary = Vec::new();
    for ty in types {
        let r = RootSystem::new(ty);
        let dim = r.weyl_dim(r.rho())?;
        let expected = num_bigint::BigInt::from(2u32).pow(r.positive_roots().len() as u32);
        if dim != expected {
            return Ok(Outcome::fail(format!("{ty}: dim V_rho = {dim}, 2^|Phi+| = {expected}")));
        }
        summary.push(format!("{ty}:{dim}"));
    }
    Ok(Outcome::pass(summary.join(" ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion() {
        assert!(run_criterion(11, 0).is_none());
        assert_eq!(criterion_ids().count(), 10);
    }

    #[test]
    fn quick_criteria_pass() {
        for id in [4, 10] {
            let r = run_criterion(id, DEFAULT_SEED).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
