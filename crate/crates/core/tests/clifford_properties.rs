mod common;

use cliffdeg::clifford::{Multivector, QuadraticSpace};
use cliffdeg::lie::theta_tensor;
use cliffdeg::ring::{rat, Rational};
use common::{form, form_up_to, multivector, vector};
use proptest::prelude::*;

fn space_with(m: usize) -> impl Strategy<Value = (QuadraticSpace<Rational>, Multivector<Rational>, Multivector<Rational>, Multivector<Rational>)> {
    (form(m), multivector(m, 4), multivector(m, 4), multivector(m, 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative((q, x, y, z) in (1usize..=4).prop_flat_map(space_with)) {
        let xy_z = q.product(&q.product(&x, &y).unwrap(), &z).unwrap();
        let x_yz = q.product(&x, &q.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
    }

    #[test]
    fn vectors_square_to_the_form((q, v) in (1usize..=5).prop_flat_map(|m| (form(m), vector(m)))) {
        let coords: Vec<Rational> = (1..=q.dim()).map(|i| v.coeff(cliffdeg::clifford::Blade::generator(i))).collect();
        prop_assert_eq!(q.product(&v, &v).unwrap(), Multivector::scalar(q.eval(&coords)));
    }

    #[test]
    fn reversal_is_an_anti_automorphism((q, x, y, _) in (1usize..=4).prop_flat_map(space_with)) {
        let lhs = q.reverse(&q.product(&x, &y).unwrap()).unwrap();
        let rhs = q.product(&q.reverse(&y).unwrap(), &q.reverse(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(q.reverse(&q.reverse(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn zero_form_gives_the_exterior_algebra(m in 1usize..=5, i in 1usize..=5, j in 1usize..=5) {
        prop_assume!(i <= m && j <= m);
        let q = QuadraticSpace::<Rational>::zero(m);
        let (ei, ej) = (Multivector::generator(i), Multivector::generator(j));
        let sum = &q.product(&ei, &ej).unwrap() + &q.product(&ej, &ei).unwrap();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn even_subalgebra_tensor_is_associative_and_unital(q in form_up_to(4)) {
        let t = theta_tensor(&q).unwrap();
        prop_assert_eq!(t.dim(), 1 << (q.dim().max(1) - 1));
        prop_assert!(t.check_unital().is_ok());
        prop_assert_eq!(t.associativity_defect(), None);
    }

    #[test]
    fn anticommutator_of_vectors_is_the_polar_form((q, u, v) in (1usize..=5).prop_flat_map(|m| (form(m), vector(m), vector(m)))) {
        let m = q.dim();
        let cu: Vec<Rational> = (1..=m).map(|i| u.coeff(cliffdeg::clifford::Blade::generator(i))).collect();
        let cv: Vec<Rational> = (1..=m).map(|i| v.coeff(cliffdeg::clifford::Blade::generator(i))).collect();
        let mut b = rat(0, 1);
        for i in 0..m {
            for j in 0..m {
                b += q.polar()[i][j].clone() * cu[i].clone() * cv[j].clone();
            }
        }
        prop_assert_eq!(q.anticommutator(&u, &v).unwrap(), Multivector::scalar(b));
    }
}
