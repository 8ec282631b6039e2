//! Krull super-dimension and related invariants.
//!
//! `Kdim(A_0)` is computed as `Kdim(Ā)`: the kernel of `A_0 -> Ā` is
//! `A_0 ∩ A A_1^2`, which is nil because every product of two odd elements
//! squares to zero. The same argument lets annihilators be pushed into `Ā`
//! before measuring dimension.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::exec::Exec;
use crate::groebner::{
    annihilator, ideal_equal, localize_at_even, standard_monomials, ModuleBasis, PointIdeal,
    SuperAlgebra, SuperIdeal, TermOrder,
};
use crate::poly::{Mono, Parity, Ring, SuperPoly};

/// `(even | odd)`, ordered lexicographically with the even part first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> SuperDim {
        SuperDim { even, odd }
    }

    /// Componentwise difference, `None` if either part would go negative.
    pub fn checked_sub(self, other: SuperDim) -> Option<SuperDim> {
        Some(SuperDim {
            even: self.even.checked_sub(other.even)?,
            odd: self.odd.checked_sub(other.odd)?,
        })
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// `Ā = A / A A_1` as a purely even presentation.
pub fn bar(a: &SuperAlgebra) -> SuperAlgebra {
    let ring = a.ring().even_only();
    let rels = a
        .relations()
        .iter()
        .map(|r| r.bar_into(&ring))
        .filter(|r| !r.is_zero())
        .collect();
    SuperAlgebra::new(format!("bar({})", a.name()), ring, rels).expect("same ring")
}

/// Krull dimension of `k[x] / I` from the leading terms of a Gröbner basis:
/// the size of a largest set of variables containing the support of no
/// leading monomial. `None` for the zero ring.
pub fn krull_dim_of_basis(basis: &ModuleBasis, num_vars: usize) -> Option<usize> {
    if basis.contains_one() {
        return None;
    }
    let supports: Vec<u64> = basis
        .leading_monos()
        .map(|m| {
            m.even
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << num_vars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Some(best)
}

/// Krull dimension of a purely even presentation `k[x] / (gens)`.
pub fn krull_dim(ring: &Arc<Ring>, gens: &[SuperPoly]) -> Option<usize> {
    debug_assert_eq!(ring.num_odd(), 0);
    let basis = crate::groebner::module_groebner(gens, TermOrder::Standard);
    krull_dim_of_basis(&basis, ring.num_even())
}

/// `Ksdim_0(A) = Kdim(A_0)`, `None` for the zero ring.
pub fn krull_dim_even(a: &SuperAlgebra) -> Option<usize> {
    let b = bar(a);
    krull_dim_of_basis(b.basis(), b.ring().num_even())
}

/// Evidence that `elements` form a system of odd parameters.
#[derive(Clone, Debug)]
pub struct OddParamCertificate {
    pub elements: Vec<SuperPoly>,
    pub annihilator: SuperIdeal,
    /// `Kdim(A_0 / Ann_{A_0}(y_1 ⋯ y_k))`, equal to `Kdim(A_0)`.
    pub even_dim_witness: usize,
}

fn product(a: &SuperAlgebra, ys: &[SuperPoly]) -> SuperPoly {
    ys.iter()
        .fold(SuperPoly::one(a.ring()), |acc, y| a.mul(&acc, y))
}

fn check_odd(ys: &[SuperPoly]) -> Result<()> {
    for y in ys {
        if !y.is_homogeneous(Parity::Odd) {
            return Err(AlgebraError::Parity(format!("`{y}` is not odd")));
        }
    }
    Ok(())
}

/// Dimension of `Ā / image(Ann_{A_0}(p))`.
fn quotient_dim_by_annihilator(a: &SuperAlgebra, ann: &SuperIdeal) -> Option<usize> {
    let b = bar(a);
    let mut gens: Vec<SuperPoly> = b.relations().to_vec();
    for g in ann.even_generators() {
        let img = g.bar_into(b.ring());
        if !img.is_zero() {
            gens.push(img);
        }
    }
    krull_dim(b.ring(), &gens)
}

/// Checks `Kdim(A_0 / Ann_{A_0}(y_1⋯y_k)) = Kdim(A_0)` with `y_1⋯y_k ≠ 0`.
/// Returns the certificate when the check passes.
pub fn odd_parameter_certificate(
    a: &SuperAlgebra,
    ys: &[SuperPoly],
) -> Result<Option<OddParamCertificate>> {
    check_odd(ys)?;
    let Some(full) = krull_dim_even(a) else {
        return Ok(None);
    };
    certificate_with_dim(a, ys, full)
}

fn certificate_with_dim(
    a: &SuperAlgebra,
    ys: &[SuperPoly],
    full: usize,
) -> Result<Option<OddParamCertificate>> {
    let p = product(a, ys);
    if p.is_zero() {
        return Ok(None);
    }
    let ann = annihilator(&p, a)?;
    match quotient_dim_by_annihilator(a, &ann.ideal) {
        Some(d) if d == full => Ok(Some(OddParamCertificate {
            elements: ys.to_vec(),
            annihilator: ann.ideal,
            even_dim_witness: d,
        })),
        _ => Ok(None),
    }
}

pub fn is_odd_parameter_system(a: &SuperAlgebra, ys: &[SuperPoly]) -> Result<bool> {
    Ok(odd_parameter_certificate(a, ys)?.is_some())
}

/// Search configuration for [`ksdim`].
#[derive(Clone, Debug)]
pub struct KsdimOptions {
    pub extra_candidates: Vec<SuperPoly>,
    pub random_combinations: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for KsdimOptions {
    fn default() -> Self {
        KsdimOptions {
            extra_candidates: Vec::new(),
            random_combinations: 4,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Ksdim {
    pub dim: SuperDim,
    pub certificate: OddParamCertificate,
}

/// Odd candidates: square-free odd monomials of odd degree, the extras, and
/// seeded random combinations of the odd generators, with zeros and
/// duplicates removed.
pub fn odd_candidates(a: &SuperAlgebra, opts: &KsdimOptions) -> Vec<SuperPoly> {
    let ring = a.ring();
    let n = ring.num_odd();
    let mut out: Vec<SuperPoly> = Vec::new();
    let push = |p: SuperPoly, out: &mut Vec<SuperPoly>| {
        let p = a.normal_form(&p);
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    };
    let mut masks: Vec<u64> = (1u64..(1u64 << n))
        .filter(|s| s.count_ones() % 2 == 1)
        .collect();
    masks.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    masks.reverse();
    masks.sort_by_key(|s| s.count_ones());
    for s in masks {
        let mono = Mono {
            even: vec![0; ring.num_even()],
            odd: s,
        };
        push(
            SuperPoly::monomial(ring, mono, ring.field().one()),
            &mut out,
        );
    }
    for e in &opts.extra_candidates {
        push(e.clone(), &mut out);
    }
    if n > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_combinations {
            let mut p = SuperPoly::zero(ring);
            for i in 0..n {
                let c: i64 = rng.gen_range(-3..=3);
                p = &p + &SuperPoly::odd_var(ring, i).scale(&ring.field().int(c));
            }
            push(p, &mut out);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `Ksdim(A)`: the even part is `Kdim(A_0)`, the odd part the length of the
/// longest system of odd parameters found among the candidates, capped by
/// the number of odd generators. The odd part is a certified lower bound.
pub fn ksdim(a: &SuperAlgebra, opts: &KsdimOptions) -> Result<Ksdim> {
    let even = krull_dim_even(a).ok_or(AlgebraError::ZeroRing)?;
    for y in &opts.extra_candidates {
        check_odd(std::slice::from_ref(y))?;
    }
    let empty = certificate_with_dim(a, &[], even)?
        .expect("the empty system always qualifies in a nonzero ring");
    let mut best = empty;
    let candidates = odd_candidates(a, opts);
    let n = a.ring().num_odd();
    for k in 1..=n.min(candidates.len()) {
        let choices = subsets(candidates.len(), k);
        let found = opts.exec.find_first(&choices, |idx| {
            let ys: Vec<SuperPoly> = idx.iter().map(|&i| candidates[i].clone()).collect();
            certificate_with_dim(a, &ys, even).ok().flatten()
        });
        match found {
            Some(cert) => best = cert,
            None => break,
        }
    }
    Ok(Ksdim {
        dim: SuperDim::new(even, best.elements.len()),
        certificate: best,
    })
}

/// `Ann_A(y_1⋯y_k) = A y_1 + ⋯ + A y_k`.
pub fn is_odd_regular_sequence(a: &SuperAlgebra, ys: &[SuperPoly]) -> Result<bool> {
    check_odd(ys)?;
    let p = product(a, ys);
    let ann = annihilator(&p, a)?;
    Ok(ideal_equal(&ann.ideal, &a.ideal(ys)))
}

/// `A / 𝔪A` for the even maximal ideal `𝔪` of a rational point, with the
/// odd standard monomials spanning `Φ_A = A_1 / 𝔪 A_1`.
fn phi_basis(a: &SuperAlgebra, pt: &PointIdeal) -> Result<Vec<Mono>> {
    let ring = a.ring();
    let q = a.ideal(&pt.even_maximal_generators(ring));
    let std = standard_monomials(ring, q.basis(), (ring.num_odd() as u32).max(1) + 1);
    if std.iter().any(|m| m.even_degree() > 0) {
        return Err(AlgebraError::Shape(
            "residue algebra is not finite dimensional".into(),
        ));
    }
    Ok(std
        .into_iter()
        .filter(|m| m.parity() == Parity::Odd)
        .collect())
}

/// `dim_k Φ_A` at a rational point.
pub fn phi_dim_at_point(a: &SuperAlgebra, pt: &PointIdeal) -> Result<usize> {
    Ok(phi_basis(a, pt)?.len())
}

/// Lifts a basis of `Φ_A` to odd elements and tests whether they form an odd
/// regular sequence in `A`. A `true` answer certifies that the localization
/// at the point is oddly regular; `false` is inconclusive.
pub fn check_oddly_regular_at_point(a: &SuperAlgebra, pt: &PointIdeal) -> Result<bool> {
    let ring = a.ring();
    let lift: Vec<SuperPoly> = phi_basis(a, pt)?
        .into_iter()
        .map(|m| SuperPoly::monomial(ring, m, ring.field().one()))
        .collect();
    is_odd_regular_sequence(a, &lift)
}

/// Presentation of `gr(A)`: lowest odd-weight forms of a Gröbner basis for
/// an order that ranks fewer odd factors higher.
pub fn gr_presentation(a: &SuperAlgebra) -> SuperAlgebra {
    let ring = a.ring();
    let weighted = ModuleBasis::compute(
        TermOrder::LowOddWeight,
        a.basis().elements().iter().cloned(),
    );
    let forms: Vec<SuperPoly> = weighted
        .to_polys(ring)
        .into_iter()
        .map(|p| {
            let w = p.min_odd_weight().unwrap_or(0);
            p.odd_weight_part(w)
        })
        .collect();
    let free = SuperAlgebra::free("F", ring.clone());
    let minimal = free.ideal(&forms).minimal_generators(&free);
    SuperAlgebra::new(format!("gr({})", a.name()), ring.clone(), minimal).expect("same ring")
}

/// Every relation is homogeneous in the number of odd factors.
pub fn is_odd_weight_homogeneous(a: &SuperAlgebra) -> bool {
    a.relations().iter().all(|r| {
        let mut ws = r.terms().iter().map(|(m, _)| m.odd_len());
        match ws.next() {
            Some(w) => ws.all(|v| v == w),
            None => true,
        }
    })
}

/// Number of standard monomials of odd weight `w` and total degree at most
/// `d`, keyed by `(d, w)`, for `d <= max_total`.
pub fn weight_slice_counts(
    ring: &Ring,
    basis: &ModuleBasis,
    max_total: u32,
) -> BTreeMap<(u32, usize), usize> {
    let std = standard_monomials(ring, basis, max_total);
    let mut out = BTreeMap::new();
    for d in 0..=max_total {
        for w in 0..=ring.num_odd() {
            let c = std
                .iter()
                .filter(|m| m.total_degree() <= d && m.odd_len() == w)
                .count();
            out.insert((d, w), c);
        }
    }
    out
}

/// Slices of `A` under the weight order against slices of `gr(A)` under the
/// standard order.
pub fn gr_slices_agree(a: &SuperAlgebra, gr: &SuperAlgebra, max_total: u32) -> bool {
    let weighted = ModuleBasis::compute(
        TermOrder::LowOddWeight,
        a.basis().elements().iter().cloned(),
    );
    weight_slice_counts(a.ring(), &weighted, max_total)
        == weight_slice_counts(gr.ring(), gr.basis(), max_total)
}

/// `sdim` of the affine superscheme `SSpec(A)`.
pub fn sdim_affine(a: &SuperAlgebra, opts: &KsdimOptions) -> Result<SuperDim> {
    Ok(ksdim(a, opts)?.dim)
}

#[derive(Clone, Debug)]
pub struct CoverReport {
    /// `Ksdim(A_{a_i})`, `None` where the localization is the zero ring.
    pub local: Vec<Option<SuperDim>>,
    /// Indices whose localization reaches the top even dimension.
    pub top_even: Vec<usize>,
    /// `(max even | max odd over top_even)`.
    pub combined: SuperDim,
    pub global: SuperDim,
}

impl CoverReport {
    pub fn agrees(&self) -> bool {
        self.combined == self.global
    }
}

/// Computes `Ksdim` on each `A_{a_i}` of a cover with `Σ A_0 a_i = A_0` and
/// compares the combined value with `Ksdim(A)`.
pub fn verify_cover(
    a: &SuperAlgebra,
    cover: &[SuperPoly],
    opts: &KsdimOptions,
) -> Result<CoverReport> {
    for c in cover {
        if !c.is_homogeneous(Parity::Even) {
            return Err(AlgebraError::Parity(format!(
                "cover element `{c}` is not even"
            )));
        }
    }
    if !a.ideal(cover).is_unit() {
        return Err(AlgebraError::NotACover);
    }
    let global = ksdim(a, opts)?.dim;
    let mut local = Vec::new();
    for c in cover {
        let (loc, zero) = localize_at_even(a, c)?;
        local.push(if zero {
            None
        } else {
            Some(ksdim(&loc, opts)?.dim)
        });
    }
    let d = local
        .iter()
        .flatten()
        .map(|s| s.even)
        .max()
        .ok_or(AlgebraError::ZeroRing)?;
    let top_even: Vec<usize> = local
        .iter()
        .enumerate()
        .filter(|(_, s)| s.map(|s| s.even) == Some(d))
        .map(|(i, _)| i)
        .collect();
    let odd = top_even
        .iter()
        .filter_map(|&i| local[i])
        .map(|s| s.odd)
        .max()
        .unwrap_or(0);
    Ok(CoverReport {
        local,
        top_even,
        combined: SuperDim::new(d, odd),
        global,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Scalar};

    fn ring(even: &[&str], odd: &[&str]) -> Arc<Ring> {
        Ring::new(even, odd, Field::Rational).unwrap()
    }

    fn g(r: &Arc<Ring>, n: &str) -> SuperPoly {
        r.generator(n).unwrap()
    }

    fn seq() -> KsdimOptions {
        KsdimOptions {
            exec: Exec::Sequential,
            ..Default::default()
        }
    }

    fn pt(a: &SuperAlgebra, vals: &[i64]) -> PointIdeal {
        let v: Vec<Scalar> = vals.iter().map(|&c| Field::Rational.int(c)).collect();
        PointIdeal::from_values(a, v).unwrap()
    }

    #[test]
    fn bar_examples() {
        let r = ring(&["x"], &["y"]);
        let a = SuperAlgebra::new("A", r.clone(), vec![&g(&r, "x") * &g(&r, "y")]).unwrap();
        assert!(bar(&a).relations().is_empty());
        let l = SuperAlgebra::free("L", ring(&[], &["y1", "y2"]));
        assert_eq!(bar(&l).ring().num_even(), 0);
        let r2 = ring(&["x"], &["y1", "y2"]);
        let rel = &g(&r2, "x").pow(2) - &(&g(&r2, "y1") * &g(&r2, "y2"));
        let b = bar(&SuperAlgebra::new("B", r2, vec![rel]).unwrap());
        assert_eq!(b.relations().len(), 1);
        assert_eq!(b.relations()[0].to_string(), "x^2");
    }

    #[test]
    fn even_dimension_examples() {
        assert_eq!(
            krull_dim_even(&SuperAlgebra::free("F", ring(&["x1", "x2"], &[]))),
            Some(2)
        );
        let r = ring(&["x"], &["y1", "y2"]);
        let rel = &g(&r, "x").pow(2) - &(&g(&r, "y1") * &g(&r, "y2"));
        assert_eq!(
            krull_dim_even(&SuperAlgebra::new("B", r, vec![rel]).unwrap()),
            Some(0)
        );
        let r2 = ring(&["x1", "x2"], &[]);
        let c = SuperAlgebra::new("C", r2.clone(), vec![&g(&r2, "x1") * &g(&r2, "x2")]).unwrap();
        assert_eq!(krull_dim_even(&c), Some(1));
        let z = SuperAlgebra::new("Z", r2.clone(), vec![SuperPoly::one(&r2)]).unwrap();
        assert_eq!(krull_dim_even(&z), None);
    }

    #[test]
    fn parameter_system_examples() {
        let r = ring(&["x"], &["y"]);
        let free = SuperAlgebra::free("F", r.clone());
        assert!(is_odd_parameter_system(&free, &[g(&r, "y")]).unwrap());

        let r2 = ring(&["x"], &["y1", "y2"]);
        let rel = &(&g(&r2, "x") * &g(&r2, "y1")) * &g(&r2, "y2");
        let a = SuperAlgebra::new("A", r2.clone(), vec![rel]).unwrap();
        assert!(!is_odd_parameter_system(&a, &[g(&r2, "y1"), g(&r2, "y2")]).unwrap());
        assert!(is_odd_parameter_system(&a, &[g(&r2, "y1")]).unwrap());
        assert!(matches!(
            is_odd_parameter_system(&a, &[g(&r2, "x")]),
            Err(AlgebraError::Parity(_))
        ));
    }

    #[test]
    fn ksdim_examples() {
        let free = SuperAlgebra::free("F", ring(&["x1", "x2"], &["y1", "y2", "y3"]));
        assert_eq!(ksdim(&free, &seq()).unwrap().dim, SuperDim::new(2, 3));

        let r = ring(&["x"], &["y"]);
        let a = SuperAlgebra::new("A", r.clone(), vec![&g(&r, "x") * &g(&r, "y")]).unwrap();
        assert_eq!(ksdim(&a, &seq()).unwrap().dim, SuperDim::new(1, 0));

        let r2 = ring(&["x"], &["y1", "y2"]);
        let rel = &(&g(&r2, "x") * &g(&r2, "y1")) * &g(&r2, "y2");
        let b = SuperAlgebra::new("B", r2, vec![rel]).unwrap();
        let k = ksdim(&b, &seq()).unwrap();
        assert_eq!(k.dim, SuperDim::new(1, 1));
        assert_eq!(k.certificate.elements.len(), 1);
        assert_eq!(k.certificate.even_dim_witness, 1);
    }

    #[test]
    fn regular_sequence_examples() {
        let r = ring(&[], &["y1", "y2"]);
        let l = SuperAlgebra::free("L", r.clone());
        assert!(is_odd_regular_sequence(&l, &[g(&r, "y1"), g(&r, "y2")]).unwrap());
        assert!(is_odd_regular_sequence(&l, &[]).unwrap());
        let r2 = ring(&["x"], &["y"]);
        let a = SuperAlgebra::new("A", r2.clone(), vec![&g(&r2, "x") * &g(&r2, "y")]).unwrap();
        assert!(!is_odd_regular_sequence(&a, &[g(&r2, "y")]).unwrap());
    }

    #[test]
    fn phi_examples() {
        let r = ring(&["x"], &["y"]);
        let a = SuperAlgebra::new("A", r.clone(), vec![&g(&r, "x") * &g(&r, "y")]).unwrap();
        assert_eq!(phi_dim_at_point(&a, &pt(&a, &[0])).unwrap(), 1);
        assert!(!check_oddly_regular_at_point(&a, &pt(&a, &[0])).unwrap());

        let l3 = SuperAlgebra::free("L", ring(&[], &["y1", "y2", "y3"]));
        assert_eq!(phi_dim_at_point(&l3, &pt(&l3, &[])).unwrap(), 3);

        let f = SuperAlgebra::free("F", ring(&["x"], &["y1", "y2"]));
        assert_eq!(phi_dim_at_point(&f, &pt(&f, &[5])).unwrap(), 2);
        assert!(check_oddly_regular_at_point(&f, &pt(&f, &[0])).unwrap());

        let e = SuperAlgebra::free("E", ring(&["x"], &[]));
        assert!(check_oddly_regular_at_point(&e, &pt(&e, &[0])).unwrap());
    }

    #[test]
    fn gr_examples() {
        let r = ring(&["x"], &["y1", "y2"]);
        let rel = &g(&r, "x").pow(2) - &(&g(&r, "y1") * &g(&r, "y2"));
        let a = SuperAlgebra::new("A", r.clone(), vec![rel]).unwrap();
        let gr = gr_presentation(&a);
        let rels: Vec<String> = gr.relations().iter().map(|p| p.to_string()).collect();
        assert_eq!(rels, ["x^2"]);
        assert!(is_odd_weight_homogeneous(&gr));
        assert!(gr_slices_agree(&a, &gr, 6));

        let f = SuperAlgebra::free("F", r.clone());
        assert!(gr_presentation(&f).relations().is_empty());

        let r1 = ring(&["x"], &["y"]);
        let xy = SuperAlgebra::new("A", r1.clone(), vec![&g(&r1, "x") * &g(&r1, "y")]).unwrap();
        let grxy = gr_presentation(&xy);
        assert_eq!(grxy.relations(), xy.relations());
    }

    #[test]
    fn cover_examples() {
        let r = ring(&["x"], &["y"]);
        let (x, y) = (g(&r, "x"), g(&r, "y"));
        let a = SuperAlgebra::new("A", r.clone(), vec![&x * &y]).unwrap();
        let rep = verify_cover(&a, &[x.clone(), &x - &SuperPoly::one(&r)], &seq()).unwrap();
        assert!(rep.agrees());
        assert_eq!(rep.global, SuperDim::new(1, 0));
        let triv = verify_cover(&a, &[SuperPoly::one(&r)], &seq()).unwrap();
        assert!(triv.agrees());
        assert!(matches!(
            verify_cover(&a, std::slice::from_ref(&x), &seq()),
            Err(AlgebraError::NotACover)
        ));

        let r2 = ring(&["x"], &["y1", "y2"]);
        let x2 = g(&r2, "x");
        let f = SuperAlgebra::free("F", r2.clone());
        let rep2 = verify_cover(&f, &[x2.clone(), &x2 + &SuperPoly::one(&r2)], &seq()).unwrap();
        assert_eq!(rep2.local, vec![Some(SuperDim::new(1, 2)); 2]);
        assert!(rep2.agrees());
    }

    #[test]
    fn superdim_is_lexicographic() {
        assert!(SuperDim::new(1, 0) > SuperDim::new(0, 5));
        assert!(SuperDim::new(1, 2) > SuperDim::new(1, 1));
        assert_eq!(SuperDim::new(0, 1).to_string(), "0|1");
    }
}
