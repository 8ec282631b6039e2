mod common;

use common::{homogeneous, poly, ring};
use proptest::prelude::*;
use superdim::groebner::ideal_equal;
use superdim::oracle::TruncatedIdeal;
use superdim::{Parity, SuperAlgebra, SuperPoly};

fn relations() -> impl Strategy<Value = Vec<SuperPoly>> {
    prop::collection::vec(
        prop_oneof![
            homogeneous(ring(), Parity::Even),
            homogeneous(ring(), Parity::Odd)
        ],
        1..3,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_linear(rels in relations(), f in poly(ring()), g in poly(ring())) {
        let a = SuperAlgebra::new("A", ring(), rels).unwrap();
        let nf = a.normal_form(&f);
        prop_assert_eq!(a.normal_form(&nf), nf.clone());
        prop_assert_eq!(a.normal_form(&(&f + &g)), &nf + &a.normal_form(&g));
    }

    #[test]
    fn reduction_stays_in_the_coset(rels in relations(), f in poly(ring())) {
        let a = SuperAlgebra::new("A", ring(), rels).unwrap();
        let diff = &f - &a.normal_form(&f);
        prop_assert!(a.is_zero(&diff));
    }

    #[test]
    fn multiples_of_relations_vanish(rels in relations(), hs in prop::collection::vec(poly(ring()), 2)) {
        let a = SuperAlgebra::new("A", ring(), rels.clone()).unwrap();
        let member = rels.iter().zip(&hs).fold(SuperPoly::zero(&ring()), |acc, (r, h)| &acc + &(h * r));
        prop_assert!(a.is_zero(&member));
        prop_assert!(a.is_zero(&rels.iter().fold(SuperPoly::zero(&ring()), |acc, r| &acc + &(r * &hs[0]))));
    }

    #[test]
    fn oracle_membership_is_sound(rels in relations(), hs in prop::collection::vec(poly(ring()), 2), f in poly(ring())) {
        let a = SuperAlgebra::new("A", ring(), rels.clone()).unwrap();
        let trunc = TruncatedIdeal::new(&ring(), &rels, 7);
        for cand in [f.clone(), &f + &(&hs[0] * &rels[0])] {
            if trunc.contains(&cand) == Some(true) {
                prop_assert!(a.is_zero(&cand), "oracle member {} survives", cand);
            }
        }
    }

    #[test]
    fn ideal_equality_ignores_generator_order(rels in relations()) {
        let a = SuperAlgebra::free("F", ring());
        let mut rev = rels.clone();
        rev.reverse();
        prop_assert!(ideal_equal(&a.ideal(&rels), &a.ideal(&rev)));
    }
}
