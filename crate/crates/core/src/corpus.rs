//! The bundled presentations used by the self-test and the tests.

use crate::dsl::{parse_algebra, parse_pair, parse_poly_list, AlgebraDoc};
use crate::field::Field;
use crate::groebner::{PointIdeal, SuperAlgebra};
use crate::hcgroup::HcPair;
use crate::orbits::{validate_action, OddAction};
use crate::poly::SuperPoly;
use crate::sdim::SuperDim;

pub const ALGEBRAS: &[(&str, &str)] = &[
    ("xy.salg", include_str!("../corpus/xy.salg")),
    ("xyy.salg", include_str!("../corpus/xyy.salg")),
    ("lambda2.salg", include_str!("../corpus/lambda2.salg")),
    ("a11.salg", include_str!("../corpus/a11.salg")),
    ("a12.salg", include_str!("../corpus/a12.salg")),
    ("cusp.salg", include_str!("../corpus/cusp.salg")),
    ("plane_xy.salg", include_str!("../corpus/plane_xy.salg")),
];

pub const ACTIONS: &[(&str, &str)] = &[
    ("translate.salg", include_str!("../corpus/translate.salg")),
    (
        "fixed_origin.salg",
        include_str!("../corpus/fixed_origin.salg"),
    ),
    ("diagonal.salg", include_str!("../corpus/diagonal.salg")),
];

pub const PAIRS: &[(&str, &str)] = &[
    ("unipotent.shc", include_str!("../corpus/unipotent.shc")),
    ("gl1.shc", include_str!("../corpus/gl1.shc")),
    ("gl11.shc", include_str!("../corpus/gl11.shc")),
    ("gl1_bad.shc", include_str!("../corpus/gl1_bad.shc")),
];

fn source(table: &[(&str, &'static str)], file: &str) -> &'static str {
    table
        .iter()
        .find(|(n, _)| *n == file)
        .map(|(_, s)| *s)
        .unwrap_or_else(|| panic!("no corpus entry {file}"))
}

pub fn algebra(file: &str) -> SuperAlgebra {
    let text = ALGEBRAS
        .iter()
        .chain(ACTIONS)
        .find(|(n, _)| *n == file)
        .map(|(_, s)| *s);
    let text = text.unwrap_or_else(|| panic!("no corpus entry {file}"));
    parse_algebra(text, Field::Rational)
        .expect("corpus parses")
        .algebra
}

pub fn all_algebras() -> Vec<(&'static str, SuperAlgebra)> {
    ALGEBRAS
        .iter()
        .chain(ACTIONS)
        .map(|(n, _)| (*n, algebra(n)))
        .collect()
}

pub fn pair(file: &str) -> HcPair {
    parse_pair(source(PAIRS, file), Field::Rational).expect("corpus parses")
}

/// Hand-derived `Ksdim` values.
pub fn ksdim_expectations() -> Vec<(&'static str, SuperDim)> {
    vec![
        ("xy.salg", SuperDim::new(1, 0)),
        ("xyy.salg", SuperDim::new(1, 1)),
        ("lambda2.salg", SuperDim::new(0, 2)),
    ]
}

/// Algebras with covers `{a_i}`, `Σ A_0 a_i = A_0`, and hand-derived `Ksdim`.
pub fn covers() -> Vec<(&'static str, Vec<&'static str>, SuperDim)> {
    vec![
        ("xy.salg", vec!["x", "x - 1"], SuperDim::new(1, 0)),
        ("a12.salg", vec!["x", "x + 1"], SuperDim::new(1, 2)),
        ("xyy.salg", vec!["x", "1 - x"], SuperDim::new(1, 1)),
        (
            "plane_xy.salg",
            vec!["x1", "x2", "1 - x1 - x2"],
            SuperDim::new(2, 0),
        ),
        ("cusp.salg", vec!["x + 1", "-x"], SuperDim::new(0, 2)),
    ]
}

pub fn cover_elements(a: &SuperAlgebra, cover: &[&str]) -> Vec<SuperPoly> {
    parse_poly_list(&cover.join(", "), a.ring()).expect("cover parses")
}

pub struct ActionCase {
    pub file: &'static str,
    pub doc: AlgebraDoc,
    pub action: OddAction,
    pub points: Vec<PointIdeal>,
}

pub fn actions() -> Vec<ActionCase> {
    ACTIONS
        .iter()
        .map(|(file, text)| {
            let doc = parse_algebra(text, Field::Rational).expect("corpus parses");
            let images = doc
                .derivation
                .as_ref()
                .expect("action documents carry a derivation")
                .images
                .clone();
            let action = validate_action(&doc.algebra, images).expect("corpus actions are valid");
            let points = doc
                .points
                .iter()
                .map(|p| PointIdeal::new(&doc.algebra, p).expect("corpus points lie on X"))
                .collect();
            ActionCase {
                file,
                doc,
                action,
                points,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_document, render_document};

    #[test]
    fn corpus_round_trips() {
        for (name, text) in ALGEBRAS.iter().chain(ACTIONS).chain(PAIRS) {
            let doc =
                parse_document(text, Field::Rational).unwrap_or_else(|e| panic!("{name}: {e}"));
            let canon = render_document(&doc);
            let again = render_document(&parse_document(&canon, Field::Rational).unwrap());
            assert_eq!(canon, again, "{name}");
        }
    }

    #[test]
    fn loads() {
        assert_eq!(all_algebras().len(), ALGEBRAS.len() + ACTIONS.len());
        assert_eq!(
            actions().iter().map(|c| c.points.len()).collect::<Vec<_>>(),
            [6, 6, 6]
        );
        assert!(pair("unipotent.shc").validate().is_valid());
        assert!(!pair("gl1_bad.shc").validate().is_valid());
    }
}
