//! Built-in pairs.

use super::{scalar_identity, scalar_zero, EvenGroupSpec, GroupElem, HcElement, HcPair, ScalarMat};
use crate::field::Field;
use crate::poly::SuperPoly;

fn mat(field: Field, rows: &[&[i64]]) -> ScalarMat {
    rows.iter()
        .map(|r| r.iter().map(|&c| field.int(c)).collect())
        .collect()
}

fn zero_bracket(field: Field, n: usize, t: usize) -> Vec<Vec<ScalarMat>> {
    vec![vec![scalar_zero(field, n); t]; t]
}

/// Upper unitriangular `2 × 2` matrices on `V = k v` with trivial action
/// and `[v, v] = 2 E12`.
pub fn unipotent(field: Field) -> HcPair {
    let r = EvenGroupSpec::ring_for(2, field).unwrap();
    let g = |n: &str| r.generator(n).unwrap();
    let one = SuperPoly::one(&r);
    let group = EvenGroupSpec::new(
        r.clone(),
        vec![&g("g11") - &one, &g("g22") - &one, g("g21")],
    )
    .unwrap();
    let bracket = vec![vec![mat(field, &[&[0, 2], &[0, 0]])]];
    HcPair::new("unipotent", group, vec![vec![one]], bracket)
        .unwrap()
        .with_k_points(vec![
            mat(field, &[&[1, 1], &[0, 1]]),
            mat(field, &[&[1, -2], &[0, 1]]),
        ])
        .unwrap()
}

/// `GL_1` acting on `k^t` by the character `g`, zero bracket.
pub fn gl1_weight(field: Field, t: usize) -> HcPair {
    let r = EvenGroupSpec::ring_for(1, field).unwrap();
    let g = r.generator("g11").unwrap();
    let group = EvenGroupSpec::new(r.clone(), vec![]).unwrap();
    let rho = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| {
                    if i == j {
                        g.clone()
                    } else {
                        SuperPoly::zero(&r)
                    }
                })
                .collect()
        })
        .collect();
    HcPair::new(
        format!("gl1-weight1-dim{t}"),
        group,
        rho,
        zero_bracket(field, 1, t),
    )
    .unwrap()
    .with_k_points(vec![mat(field, &[&[2]]), mat(field, &[&[-3]])])
    .unwrap()
}

/// `GL_1` on `k v` by `g` with `[v, v] = 1`: not equivariant.
pub fn gl1_bad(field: Field) -> HcPair {
    let mut p = gl1_weight(field, 1);
    p.name = "gl1-bad".into();
    p.bracket = vec![vec![mat(field, &[&[1]])]];
    p
}

/// The even part of `GL(1|1)`: the diagonal torus of `GL_2` acting on
/// `V = k v1 ⊕ k v2` with weights `p/q` and `q/p`, and `[v1, v2] = 1`.
pub fn gl11(field: Field) -> HcPair {
    let r = EvenGroupSpec::ring_for(2, field).unwrap();
    let g = |n: &str| r.generator(n).unwrap();
    let group = EvenGroupSpec::new(r.clone(), vec![g("g12"), g("g21")]).unwrap();
    let d = g("d");
    let zero = SuperPoly::zero(&r);
    let rho = vec![
        vec![&g("g11").pow(2) * &d, zero.clone()],
        vec![zero, &g("g22").pow(2) * &d],
    ];
    let id = scalar_identity(field, 2);
    let z = scalar_zero(field, 2);
    let bracket = vec![vec![z.clone(), id.clone()], vec![id, z]];
    HcPair::new("gl(1|1)", group, rho, bracket)
        .unwrap()
        .with_k_points(vec![
            mat(field, &[&[2, 0], &[0, 3]]),
            mat(field, &[&[-1, 0], &[0, 2]]),
        ])
        .unwrap()
}

/// `GL_2` on its standard module, zero bracket.
pub fn gl2_std(field: Field) -> HcPair {
    let r = EvenGroupSpec::ring_for(2, field).unwrap();
    let g = |n: &str| r.generator(n).unwrap();
    let group = EvenGroupSpec::new(r.clone(), vec![]).unwrap();
    let rho = vec![vec![g("g11"), g("g12")], vec![g("g21"), g("g22")]];
    HcPair::new("gl2-std", group, rho, zero_bracket(field, 2, 2))
        .unwrap()
        .with_k_points(vec![
            mat(field, &[&[1, 1], &[0, 1]]),
            mat(field, &[&[0, 1], &[1, 0]]),
            mat(field, &[&[2, 1], &[1, 1]]),
        ])
        .unwrap()
}

/// `SL_2` acting trivially on `k^t`, zero bracket.
pub fn sl2_trivial(field: Field, t: usize) -> HcPair {
    let r = EvenGroupSpec::ring_for(2, field).unwrap();
    let g = |n: &str| r.generator(n).unwrap();
    let det = &(&g("g11") * &g("g22")) - &(&g("g12") * &g("g21"));
    let group = EvenGroupSpec::new(r.clone(), vec![&det - &SuperPoly::one(&r)]).unwrap();
    let rho = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| {
                    if i == j {
                        SuperPoly::one(&r)
                    } else {
                        SuperPoly::zero(&r)
                    }
                })
                .collect()
        })
        .collect();
    HcPair::new(
        format!("sl2-trivial-dim{t}"),
        group,
        rho,
        zero_bracket(field, 2, t),
    )
    .unwrap()
}

/// The trivial group with `V = 0`.
pub fn trivial_group(field: Field) -> HcPair {
    let r = EvenGroupSpec::ring_for(1, field).unwrap();
    let g = r.generator("g11").unwrap();
    let group = EvenGroupSpec::new(r.clone(), vec![&g - &SuperPoly::one(&r)]).unwrap();
    HcPair::new("trivial", group, vec![], vec![]).unwrap()
}

/// The unipotent pair embeds in `3 × 3` matrices over `A`:
/// `[[1, b], [0, 1]] e(a, v) ↦ [[1, a, b], [0, 1, -a], [0, 0, 1]]`.
pub fn unipotent_model(e: &HcElement) -> Vec<Vec<SuperPoly>> {
    let a = &e.odd[0];
    let b = &e.g.m[0][1];
    let ring = a.ring();
    let (zero, one) = (SuperPoly::zero(ring), SuperPoly::one(ring));
    vec![
        vec![one.clone(), a.clone(), b.clone()],
        vec![zero.clone(), one.clone(), -a],
        vec![zero.clone(), zero, one],
    ]
}

/// Reads `(g, a)` back from a model matrix.
pub fn unipotent_from_model(m: &[Vec<SuperPoly>]) -> HcElement {
    let ring = m[0][0].ring();
    let (zero, one) = (SuperPoly::zero(ring), SuperPoly::one(ring));
    let g = vec![
        vec![one.clone(), m[0][2].clone()],
        vec![zero.clone(), one.clone()],
    ];
    let inv = vec![vec![one.clone(), -&m[0][2]], vec![zero, one]];
    HcElement {
        g: GroupElem { m: g, inv },
        odd: vec![m[0][1].clone()],
    }
}
