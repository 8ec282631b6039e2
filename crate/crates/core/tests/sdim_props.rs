use proptest::prelude::*;
use superdim::groebner::PointIdeal;
use superdim::sdim::{
    bar, check_oddly_regular_at_point, gr_presentation, gr_slices_agree, is_odd_parameter_system,
    is_odd_regular_sequence, is_odd_weight_homogeneous, krull_dim_even, ksdim, phi_dim_at_point,
    KsdimOptions, SuperDim,
};
use superdim::{corpus, oracle, Exec, Field, Ring, SuperAlgebra, SuperPoly};

fn opts() -> KsdimOptions {
    KsdimOptions {
        exec: Exec::Sequential,
        ..Default::default()
    }
}

#[test]
fn corpus_values_over_a_prime_field() {
    let f = Field::prime(101).unwrap();
    for (file, want) in corpus::ksdim_expectations() {
        let text = corpus::ALGEBRAS.iter().find(|(n, _)| *n == file).unwrap().1;
        let a = superdim::dsl::parse_algebra(text, f).unwrap().algebra;
        assert_eq!(ksdim(&a, &opts()).unwrap().dim, want, "{file}");
    }
}

#[test]
fn ksdim_is_the_same_in_both_exec_modes() {
    for (name, a) in corpus::all_algebras() {
        let seq = ksdim(&a, &opts()).unwrap();
        let par = ksdim(
            &a,
            &KsdimOptions {
                exec: Exec::Parallel,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.dim, par.dim, "{name}");
        assert_eq!(seq.certificate.elements, par.certificate.elements, "{name}");
    }
}

#[test]
fn even_dimension_matches_the_oracle() {
    for (name, a) in corpus::all_algebras() {
        let b = bar(&a);
        assert_eq!(
            krull_dim_even(&a),
            oracle::krull_dim(b.ring(), b.relations(), 6),
            "{name}"
        );
    }
}

#[test]
fn phi_lemma_on_free_algebras() {
    // at any point of a free algebra Φ has dimension n, the odd generators
    // are odd regular, and Ksdim has odd part n
    for n in 0..=3 {
        let names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
        let a = SuperAlgebra::free(
            "F",
            Ring::new(&["x".to_string()], &names, Field::Rational).unwrap(),
        );
        for c in [-1, 0, 2] {
            let pt = PointIdeal::from_values(&a, vec![Field::Rational.int(c)]).unwrap();
            assert_eq!(phi_dim_at_point(&a, &pt).unwrap(), n);
            assert!(check_oddly_regular_at_point(&a, &pt).unwrap());
        }
        let ys: Vec<SuperPoly> = (0..n).map(|i| SuperPoly::odd_var(a.ring(), i)).collect();
        assert!(is_odd_regular_sequence(&a, &ys).unwrap());
        assert_eq!(ksdim(&a, &opts()).unwrap().dim, SuperDim::new(1, n));
    }
}

#[test]
fn phi_lemma_fails_where_odd_regularity_fails() {
    let a = corpus::algebra("xy.salg");
    let origin = PointIdeal::from_values(&a, vec![Field::Rational.int(0)]).unwrap();
    assert_eq!(phi_dim_at_point(&a, &origin).unwrap(), 1);
    assert!(!check_oddly_regular_at_point(&a, &origin).unwrap());
    // off the origin y vanishes after localizing, and Φ = 0 at x = 1
    let one = PointIdeal::from_values(&a, vec![Field::Rational.int(1)]).unwrap();
    assert_eq!(phi_dim_at_point(&a, &one).unwrap(), 0);
}

#[test]
fn cusp_is_degenerate() {
    let a = corpus::algebra("cusp.salg");
    let k = ksdim(&a, &opts()).unwrap();
    assert_eq!(k.dim, SuperDim::new(0, 2));
    let g = gr_presentation(&a);
    assert_eq!(
        g.relations()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>(),
        ["x^2"]
    );
    assert!(gr_slices_agree(&a, &g, 6));
}

fn small_algebra() -> impl Strategy<Value = SuperAlgebra> {
    let ring = Ring::new(&["x1", "x2"], &["y1", "y2"], Field::Rational).unwrap();
    let coeffs = prop::collection::vec(-2i64..=2, 6);
    (coeffs, 0usize..3).prop_map(move |(c, shape)| {
        let g = |n: &str| ring.generator(n).unwrap();
        let k = |i: usize| SuperPoly::int(&ring, c[i]);
        let y12 = &g("y1") * &g("y2");
        let rel = match shape {
            0 => &(&k(0) * &g("x1").pow(2)) + &(&(&k(1) * &g("x2")) + &(&k(2) * &y12)),
            1 => &(&(&k(0) * &g("x1")) + &k(1)) * &g("y1"),
            _ => &(&(&k(3) * &g("x1")) * &g("x2")) - &(&k(4) * &y12),
        };
        SuperAlgebra::new("R", ring.clone(), vec![rel]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gr_is_weight_homogeneous_with_equal_slices(a in small_algebra()) {
        let g = gr_presentation(&a);
        prop_assert!(is_odd_weight_homogeneous(&g));
        prop_assert!(gr_slices_agree(&a, &g, 5));
    }

    #[test]
    fn quotients_do_not_raise_the_even_dimension(a in small_algebra()) {
        let free = SuperAlgebra::free("F", a.ring().clone());
        if let (Some(q), Some(f)) = (krull_dim_even(&a), krull_dim_even(&free)) {
            prop_assert!(q <= f);
            prop_assert_eq!(ksdim(&a, &opts()).unwrap().dim.even, q);
        }
    }

    #[test]
    fn certificates_are_odd_parameter_systems(a in small_algebra()) {
        if a.is_zero_ring() {
            return Ok(());
        }
        let k = ksdim(&a, &opts()).unwrap();
        prop_assert!(k.dim.odd <= a.ring().num_odd());
        prop_assert_eq!(k.certificate.elements.len(), k.dim.odd);
        prop_assert!(is_odd_parameter_system(&a, &k.certificate.elements).unwrap());
    }
}
