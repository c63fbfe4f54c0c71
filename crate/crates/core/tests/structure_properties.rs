mod common;

use cliffdeg::clifford::{Multivector, QuadraticSpace};
use cliffdeg::degeneration::family_tensor;
use cliffdeg::lie::{reconstruct_form, reconstruct_from_tensor, structure_constants, theta_tensor};
use cliffdeg::lipschitz::{classify, is_lipschitz, DoubledAlgebra};
use cliffdeg::ring::{rat, Poly, RatFunc, Rational};
use common::{form, rational, vector};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_table_recovers_the_form(q in (3usize..=6).prop_flat_map(form)) {
        prop_assert_eq!(reconstruct_form(&structure_constants(&q).unwrap()).unwrap(), q);
    }

    #[test]
    fn tensor_recovers_the_form(q in (3usize..=5).prop_flat_map(form)) {
        prop_assert_eq!(reconstruct_from_tensor(&theta_tensor(&q).unwrap()).unwrap(), q);
    }

    #[test]
    fn brackets_satisfy_jacobi(q in (2usize..=5).prop_flat_map(form)) {
        let l = structure_constants(&q).unwrap();
        prop_assert!(l.jacobi_defect().is_none());
        prop_assert!(l.antisymmetry_defect().is_none());
    }

    #[test]
    fn products_of_vectors_are_lipschitz(
        (q, vs) in (1usize..=4).prop_flat_map(|m| (form(m), proptest::collection::vec(vector(m), 1..=3)))
    ) {
        let d = DoubledAlgebra::new(&q);
        let refs: Vec<&Multivector<Rational>> = vs.iter().collect();
        let x = q.product_all(&refs).unwrap();
        let r = classify(&x, &d).unwrap();
        prop_assert!(r.is_lipschitz());
        prop_assert!(r.norm_scalar.is_some());
        prop_assert!(is_lipschitz(&q.reverse(&x).unwrap(), &d).unwrap());
    }

    #[test]
    fn derivation_test_matches_blade_count(
        (q, vs, lambda) in (1usize..=3).prop_flat_map(|m| (form(m), proptest::collection::vec(vector(m), 2), rational()))
    ) {
        let d = DoubledAlgebra::new(&q);
        // y mixes parities, so its pair usually falls outside Cl^0.
        let x = Multivector::scalar(lambda) + q.product(&vs[0], &vs[1]).unwrap();
        let y = &x + &vs[0];
        for z in [x, y] {
            let tz = q.reverse(&z).unwrap();
            let pair = d.embed_pair(&z, &tz).unwrap();
            prop_assert_eq!(d.in_cl0(&pair), d.in_cl0_by_blades(&d.to_delta(&pair)));
        }
    }

    #[test]
    fn specialization_commutes_with_the_tensor(
        diag in proptest::collection::vec((rational(), rational()), 3),
        c in rational()
    ) {
        // Q(t) = diag(a_i + b_i t)
        let entries: Vec<RatFunc> = diag
            .iter()
            .map(|(a, b)| RatFunc::from_poly(Poly::new(vec![a.clone(), b.clone()])))
            .collect();
        let family = QuadraticSpace::diagonal(entries);
        let t = family_tensor(&family).unwrap();
        prop_assert_eq!(t.specialize(&c).unwrap(), theta_tensor(&family.specialize(&c).unwrap()).unwrap());
    }
}

#[test]
fn zero_is_lipschitz_but_not_invertible() {
    let q = QuadraticSpace::<Rational>::identity(3);
    let d = DoubledAlgebra::new(&q);
    let r = classify(&Multivector::zero(), &d).unwrap();
    assert!(r.is_lipschitz());
    assert!(!r.is_glip());
    assert_eq!(r.verdict(true).as_str(), "none");
    assert_eq!(classify(&Multivector::scalar(rat(1, 1)), &d).unwrap().verdict(false).as_str(), "spin");
}
