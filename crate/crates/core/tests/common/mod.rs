#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use superdim::{Field, Mono, Parity, Ring, SuperPoly};

pub fn ring() -> Arc<Ring> {
    Ring::new(&["x1", "x2"], &["y1", "y2", "y3"], Field::Rational).unwrap()
}

type RawTerm = (Vec<u32>, u64, i64);

fn raw_terms(max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, 2), 0u64..8, -4i64..=4),
        0..max_terms,
    )
}

fn build(ring: &Arc<Ring>, raw: Vec<RawTerm>) -> SuperPoly {
    let f = ring.field();
    SuperPoly::from_terms(
        ring,
        raw.into_iter()
            .map(|(even, odd, c)| (Mono { even, odd }, f.int(c))),
    )
}

pub fn poly(ring: Arc<Ring>) -> impl Strategy<Value = SuperPoly> {
    raw_terms(5).prop_map(move |raw| build(&ring, raw))
}

pub fn homogeneous(ring: Arc<Ring>, parity: Parity) -> impl Strategy<Value = SuperPoly> {
    raw_terms(5).prop_map(move |raw| {
        let raw = raw
            .into_iter()
            .filter(|(_, odd, _)| (odd.count_ones() as usize % 2) == parity.bit())
            .collect();
        build(&ring, raw)
    })
}

pub fn any_homogeneous(ring: Arc<Ring>) -> impl Strategy<Value = (SuperPoly, Parity)> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
        .prop_flat_map(move |p| homogeneous(ring.clone(), p).prop_map(move |f| (f, p)))
}
