mod common;

use common::{any_homogeneous, homogeneous, poly, ring};
use proptest::prelude::*;
use superdim::{Parity, SuperPoly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(f in poly(ring()), g in poly(ring()), h in poly(ring())) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &SuperPoly::one(&ring()), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn supercommutative((f, p) in any_homogeneous(ring()), (g, q) in any_homogeneous(ring())) {
        let fg = &f * &g;
        let gf = &g * &f;
        if p == Parity::Odd && q == Parity::Odd {
            prop_assert_eq!(fg.clone(), -&gf);
        } else {
            prop_assert_eq!(fg.clone(), gf);
        }
        if !fg.is_zero() {
            prop_assert_eq!(fg.parity(), Some(p.add(q)));
        }
    }

    #[test]
    fn odd_elements_square_to_zero(y in homogeneous(ring(), Parity::Odd)) {
        prop_assert!((&y * &y).is_zero());
    }

    #[test]
    fn odd_derivations_obey_signed_leibniz(
        (u, pu) in any_homogeneous(ring()),
        v in poly(ring()),
        e0 in homogeneous(ring(), Parity::Odd),
        e1 in homogeneous(ring(), Parity::Odd),
        o0 in homogeneous(ring(), Parity::Even),
        o1 in homogeneous(ring(), Parity::Even),
        o2 in homogeneous(ring(), Parity::Even),
    ) {
        let images = vec![e0, e1, o0, o1, o2];
        let d = |f: &SuperPoly| f.apply_derivation(&images, Parity::Odd).unwrap();
        let lhs = d(&(&u * &v));
        let sign = if pu == Parity::Odd { -&(&u * &d(&v)) } else { &u * &d(&v) };
        prop_assert_eq!(lhs, &(&d(&u) * &v) + &sign);
    }

    #[test]
    fn substitution_is_multiplicative(f in poly(ring()), g in poly(ring()),
                                      a in homogeneous(ring(), Parity::Even),
                                      b in homogeneous(ring(), Parity::Odd)) {
        let r = ring();
        let images = vec![a, r.generator("x1").unwrap(), b, r.generator("y3").unwrap(), r.generator("y2").unwrap()];
        let s = |p: &SuperPoly| p.substitute(&images, &r);
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
    }

    #[test]
    fn display_is_stable(f in poly(ring())) {
        let shown = f.to_string();
        prop_assert_eq!(shown.clone(), f.clone().to_string());
        prop_assert_eq!(f.is_zero(), shown == "0");
    }
}
