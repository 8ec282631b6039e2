use proptest::prelude::*;
use superdim::groebner::{ideal_equal, PointIdeal};
use superdim::orbits::{
    admissible_pivots, check_star, orbit_ideal, orbit_with_pivot, stabilizer_type, validate_action,
    verify_orbit_theorems, OddAction, Stabilizer,
};
use superdim::sdim::SuperDim;
use superdim::{corpus, AlgebraError, Field, Ring, Scalar, SuperAlgebra, SuperPoly};

fn q(n: i64, d: i64) -> Scalar {
    &Field::Rational.int(n) / &Field::Rational.int(d)
}

/// `k[x | y1, y2]` with `φ(y1) = a + b x`, `φ(y2) = c + d x`.
fn two_odd(a: i64, b: i64, c: i64, d: i64) -> OddAction {
    let f = Field::Rational;
    two_odd_q(f.int(a), f.int(b), f.int(c), f.int(d))
}

fn two_odd_q(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> OddAction {
    let r = Ring::new(&["x"], &["y1", "y2"], Field::Rational).unwrap();
    let x = r.generator("x").unwrap();
    let lin =
        |u: Scalar, v: Scalar| &SuperPoly::constant(&r, u) + &(&SuperPoly::constant(&r, v) * &x);
    let alg = SuperAlgebra::free("A", r.clone());
    validate_action(&alg, vec![SuperPoly::zero(&r), lin(a, b), lin(c, d)]).unwrap()
}

#[test]
fn corpus_actions_satisfy_the_theorems() {
    for case in corpus::actions() {
        for rep in verify_orbit_theorems(&case.action, &case.points).unwrap() {
            assert!(rep.ok(), "{} at {}: {rep:?}", case.file, rep.point);
        }
    }
}

#[test]
fn zero_derivation_fixes_everything() {
    let a = corpus::algebra("a11.salg");
    let r = a.ring().clone();
    let act = validate_action(&a, vec![SuperPoly::zero(&r), SuperPoly::zero(&r)]).unwrap();
    for c in -2..=2 {
        let pt = PointIdeal::from_values(&a, vec![Field::Rational.int(c)]).unwrap();
        assert_eq!(stabilizer_type(&act, &pt), Stabilizer::Full);
        let o = orbit_ideal(&act, &pt).unwrap();
        assert_eq!(o.sdim, SuperDim::new(0, 0));
        assert!(ideal_equal(&o.ideal, &a.ideal(&pt.maximal_generators(&r))));
    }
}

#[test]
fn points_off_the_scheme_are_rejected() {
    let a = corpus::algebra("cusp.salg");
    let err = PointIdeal::from_values(&a, vec![Field::Rational.int(1)]).unwrap_err();
    assert!(matches!(err, AlgebraError::NotOnScheme(_)));
}

#[test]
fn two_odd_generators_give_a_linear_odd_relation() {
    // φ(y1) = 1, φ(y2) = x at x = 3: the orbit identifies y2 with 3 y1
    let act = two_odd(1, 0, 0, 1);
    let a = act.algebra().clone();
    let r = a.ring().clone();
    let pt = PointIdeal::from_values(&a, vec![Field::Rational.int(3)]).unwrap();
    let o = orbit_ideal(&act, &pt).unwrap();
    let g = |n: &str| r.generator(n).unwrap();
    assert!(o
        .ideal
        .contains(&(&g("y2") - &(&SuperPoly::int(&r, 3) * &g("y1")))));
    assert!(!o.ideal.contains(&g("y1")));
    assert_eq!(o.sdim, SuperDim::new(0, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn orbit_invariants(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, d in -2i64..=2,
                        num in -6i64..=6, den in 1i64..=4, fixed in any::<bool>()) {
        let p = q(num, den);
        // when `fixed`, both images vanish at the point
        let act = if fixed {
            two_odd_q(-&(&p * &q(b, 1)), q(b, 1), -&(&p * &q(d, 1)), q(d, 1))
        } else {
            two_odd(a, b, c, d)
        };
        let alg = act.algebra().clone();
        let r = alg.ring().clone();
        let pt = PointIdeal::from_values(&alg, vec![p]).unwrap();
        if fixed {
            prop_assert_eq!(stabilizer_type(&act, &pt), Stabilizer::Full);
        }
        let o = orbit_ideal(&act, &pt).unwrap();

        // the even part of I is 𝔪 and I contains 𝔪 A_1
        let even_max = alg.ideal(&pt.even_maximal_generators(&r));
        for m in pt.even_maximal_generators(&r) {
            prop_assert!(o.ideal.contains(&m));
        }
        for e in o.ideal.even_generators() {
            prop_assert!(even_max.contains(&e), "even generator {} outside 𝔪", e);
        }
        for lin in pt.linear_generators(&r) {
            for i in 0..r.num_odd() {
                prop_assert!(o.ideal.contains(&(&lin * &SuperPoly::odd_var(&r, i))));
            }
        }
        // φ-stability
        for g in o.ideal.generators() {
            prop_assert!(o.ideal.contains(&act.apply(g)));
        }
        // dichotomy and the dimension identity
        let full = o.stabilizer == Stabilizer::Full;
        prop_assert_eq!(full, o.sdim == SuperDim::new(0, 0));
        if full {
            prop_assert!(ideal_equal(&o.ideal, &alg.ideal(&pt.maximal_generators(&r))));
        }
        let stab = if full { SuperDim::new(0, 1) } else { SuperDim::new(0, 0) };
        prop_assert_eq!(SuperDim::new(0, 1).checked_sub(stab), Some(o.sdim));
        // pivot independence and (⋆)
        for j in admissible_pivots(&act, &pt) {
            prop_assert!(ideal_equal(&orbit_with_pivot(&act, &pt, Some(j)).unwrap().ideal, &o.ideal));
        }
        prop_assert!(check_star(&act, &pt, 3).unwrap());
    }
}
