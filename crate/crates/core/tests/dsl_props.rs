mod common;

use common::{homogeneous, poly, ring};
use proptest::prelude::*;
use superdim::dsl::{parse_algebra, parse_document, parse_poly, render_algebra, render_document};
use superdim::{corpus, Field, Parity, SuperAlgebra};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomials_round_trip(f in poly(ring())) {
        let r = ring();
        prop_assert_eq!(parse_poly(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn algebras_round_trip(rels in prop::collection::vec(
        prop_oneof![homogeneous(ring(), Parity::Even), homogeneous(ring(), Parity::Odd)], 0..3)) {
        let rels: Vec<_> = rels.into_iter().filter(|r| !r.is_zero()).collect();
        let a = SuperAlgebra::new("A", ring(), rels).unwrap();
        let text = render_algebra(&a);
        let b = parse_algebra(&text, Field::Rational).unwrap().algebra;
        prop_assert_eq!(b.relations(), a.relations());
        prop_assert_eq!(render_algebra(&b), text);
    }
}

#[test]
fn corpus_is_canonical() {
    for (name, text) in corpus::ALGEBRAS
        .iter()
        .chain(corpus::ACTIONS)
        .chain(corpus::PAIRS)
    {
        let doc = parse_document(text, Field::Rational).unwrap();
        let canon = render_document(&doc);
        let again = parse_document(&canon, Field::Rational).unwrap();
        assert_eq!(render_document(&again), canon, "{name}");
    }
}

#[test]
fn prime_field_parsing() {
    let f = Field::prime(5).unwrap();
    for (name, text) in corpus::ALGEBRAS {
        parse_algebra(text, f).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
