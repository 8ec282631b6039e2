//! Degree-truncated dense linear algebra, independent of the Gröbner engine.
//!
//! The ideal generated by `gens` is approximated by the span of all products
//! `m * g` with `deg(m) + deg(g) <= D`. Membership found this way is a proof;
//! non-membership only holds up to the bound.

use std::collections::HashMap;
use std::sync::Arc;

use crate::groebner::exponents_up_to;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::poly::{Mono, Ring, SuperPoly};

/// All super-monomials of total degree at most `d`, in a fixed order.
pub fn monomials_up_to(ring: &Ring, d: u32) -> Vec<Mono> {
    let n = ring.num_odd();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << n) {
        let k = s.count_ones();
        if k > d {
            continue;
        }
        for e in exponents_up_to(ring.num_even(), d - k) {
            out.push(Mono { even: e, odd: s });
        }
    }
    out.sort();
    out
}

struct Columns {
    index: HashMap<Mono, usize>,
}

impl Columns {
    fn new(monos: &[Mono]) -> Columns {
        Columns {
            index: monos
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect(),
        }
    }

    /// `None` if a term falls outside the truncation.
    fn vector(&self, p: &SuperPoly) -> Option<SparseVec> {
        p.terms()
            .iter()
            .map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect()
    }
}

/// The truncated span of an ideal of `k[x | y]`.
pub struct TruncatedIdeal {
    ring: Arc<Ring>,
    degree: u32,
    columns: Columns,
    span: Echelon,
}

impl TruncatedIdeal {
    pub fn new(ring: &Arc<Ring>, gens: &[SuperPoly], degree: u32) -> TruncatedIdeal {
        let monos = monomials_up_to(ring, degree);
        let columns = Columns::new(&monos);
        let span = build_span(&columns, &monos, gens, degree);
        TruncatedIdeal {
            ring: ring.clone(),
            degree,
            columns,
            span,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `Some(true)` for a proven member, `Some(false)` if not in the
    /// truncated span, `None` if `f` exceeds the degree bound.
    pub fn contains(&self, f: &SuperPoly) -> Option<bool> {
        debug_assert!(Arc::ptr_eq(&self.ring, f.ring()) || *self.ring == **f.ring());
        let v = self.columns.vector(f)?;
        Some(self.span.contains(&v))
    }

    pub fn dimension(&self) -> usize {
        self.span.rank()
    }
}

fn build_span(columns: &Columns, monos: &[Mono], gens: &[SuperPoly], degree: u32) -> Echelon {
    let mut span = Echelon::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree();
        if dg > degree {
            continue;
        }
        for m in monos.iter().filter(|m| m.total_degree() + dg <= degree) {
            let prod = g.mul_term(m, &g.field().one());
            if let Some(v) = columns.vector(&prod) {
                if !v.is_empty() {
                    span.insert(v);
                }
            }
        }
    }
    span
}

/// `{ f : deg f <= degree, f * p ∈ (relations) }` up to truncation at
/// `degree + deg p`, as a list of spanning polynomials.
pub fn annihilator_space(p: &SuperPoly, relations: &[SuperPoly], degree: u32) -> Vec<SuperPoly> {
    let ring = p.ring();
    let top = degree + p.total_degree();
    let monos = monomials_up_to(ring, top);
    let columns = Columns::new(&monos);
    let span = build_span(&columns, &monos, relations, top);
    let unknowns: Vec<&Mono> = monos
        .iter()
        .filter(|m| m.total_degree() <= degree)
        .collect();
    let images: Vec<SparseVec> = unknowns
        .iter()
        .map(|m| {
            let prod = SuperPoly::monomial(ring, (*m).clone(), ring.field().one())
                .checked_mul(p)
                .expect("same ring");
            span.reduce(&columns.vector(&prod).expect("within truncation"))
        })
        .collect();
    kernel(&images, ring.field())
        .into_iter()
        .map(|coeffs| {
            SuperPoly::from_terms(
                ring,
                unknowns
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| ((*m).clone(), c)),
            )
        })
        .collect()
}

/// Krull dimension of `k[x] / (gens)` as the largest set `U` of variables
/// with `(gens) ∩ k[U] = 0`. The intersection is nonzero exactly when the
/// residues of the monomials of `k[U]` modulo the truncated span are
/// linearly dependent. `None` when `1` lies in the span.
pub fn krull_dim(ring: &Arc<Ring>, gens: &[SuperPoly], degree: u32) -> Option<usize> {
    assert_eq!(
        ring.num_odd(),
        0,
        "the dimension oracle works on purely even rings"
    );
    let monos = monomials_up_to(ring, degree);
    let columns = Columns::new(&monos);
    let span = build_span(&columns, &monos, gens, degree);
    let one = ring.field().one();
    let mut best = None;
    for set in 0u64..(1u64 << ring.num_even()) {
        let size = set.count_ones() as usize;
        if best.is_some_and(|b| size <= b) {
            continue;
        }
        let in_u = |mo: &Mono| {
            mo.even
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || set & (1 << i) != 0)
        };
        let mut residues = Echelon::new();
        let meets = monos
            .iter()
            .enumerate()
            .filter(|(_, mo)| in_u(mo))
            .any(|(c, _)| !residues.insert(span.reduce(&SparseVec::from([(c, one.clone())]))));
        if !meets {
            best = Some(size);
        } else if set == 0 {
            return None;
        }
    }
    best
}
