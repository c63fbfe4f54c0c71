mod common;

use cliffdeg::json::{
    multivector_from_json, multivector_to_json, parse, space_from_json, space_to_json, tensor_from_json,
    tensor_to_json,
};
use cliffdeg::lie::theta_tensor;
use cliffdeg::weight::WeightMultiset;
use common::{form, form_up_to, multivector, rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn forms_round_trip_through_text(q in form_up_to(5)) {
        let text = space_to_json(&q).to_string();
        prop_assert_eq!(space_from_json(&parse(&text).unwrap()).unwrap(), q);
    }

    #[test]
    fn multivectors_round_trip(x in multivector(5, 6)) {
        prop_assert_eq!(multivector_from_json(&multivector_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn tensors_round_trip(q in (1usize..=4).prop_flat_map(form)) {
        let t = theta_tensor(&q).unwrap();
        prop_assert_eq!(tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn weight_tsv_round_trips(ws in proptest::collection::vec((proptest::collection::vec(rational(), 3), 1u64..=4), 0..8)) {
        let mut w = WeightMultiset::new();
        for (v, k) in ws {
            w.insert(v, k);
        }
        prop_assert_eq!(WeightMultiset::from_tsv(&w.to_tsv()).unwrap(), w);
    }
}
