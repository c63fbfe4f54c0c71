use num_bigint::BigInt;
use cliffdeg::plethysm::{identify_irreducible, irrep_weights, RootSystem, RootType};
use cliffdeg::ring::{rat, Rational};
use cliffdeg::weight::WeightMultiset;
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = RootType> {
    prop_oneof![Just(RootType::B(2)), Just(RootType::C(2)), Just(RootType::G2), Just(RootType::D(3)), Just(RootType::B(3))]
}

fn dominant(ty: RootType) -> impl Strategy<Value = (RootType, Vec<i64>)> {
    let rank = RootSystem::new(ty).rank();
    proptest::collection::vec(0i64..=2, rank).prop_map(move |l| (ty, l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn characters_are_weyl_invariant((ty, labels) in small_type().prop_flat_map(dominant)) {
        let r = RootSystem::new(ty);
        let lambda = r.from_dynkin(&labels);
        let w = irrep_weights(&r, &lambda).unwrap();
        prop_assert_eq!(BigInt::from(w.total()), r.weyl_dim(&lambda).unwrap());
        for i in 0..r.rank() {
            prop_assert_eq!(&w.map(|v| r.reflect(v, i)), &w);
        }
    }

    #[test]
    fn peeling_recovers_a_direct_sum(
        (ty, a, b) in small_type().prop_flat_map(|ty| {
            let rank = RootSystem::new(ty).rank();
            (Just(ty), proptest::collection::vec(0i64..=1, rank), proptest::collection::vec(0i64..=1, rank))
        })
    ) {
        let r = RootSystem::new(ty);
        let (la, lb) = (r.from_dynkin(&a), r.from_dynkin(&b));
        let sum = irrep_weights(&r, &la).unwrap().union(&irrep_weights(&r, &lb).unwrap());
        let parts = identify_irreducible(&sum, &r).unwrap();
        let mut got: Vec<(Vec<Rational>, u64)> = parts.iter().map(|c| (c.highest_weight.clone(), c.multiplicity)).collect();
        got.sort();
        let mut want = if la == lb { vec![(la, 2)] } else { vec![(la, 1), (lb, 1)] };
        want.sort();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn fundamental_weights_are_dual_to_simple_coroots() {
    for ty in [RootType::B(4), RootType::C(3), RootType::D(5), RootType::G2, RootType::F4] {
        let r = RootSystem::new(ty);
        for (k, w) in r.fundamental_weights().iter().enumerate() {
            let labels = r.dynkin_labels(w);
            let expected: Vec<Rational> = (0..r.rank()).map(|i| rat(i64::from(i == k), 1)).collect();
            assert_eq!(labels, expected, "{ty} fundamental weight {k}");
        }
    }
}

#[test]
fn non_characters_are_rejected() {
    let r = RootSystem::new(RootType::B(2));
    let mut w = WeightMultiset::new();
    w.insert(vec![rat(1, 1), rat(0, 1)], 1);
    assert!(identify_irreducible(&w, &r).is_err());
}
