//! Ideal theory in finitely presented supercommutative superalgebras.
//!
//! A superideal of `F = k[x | y]` is handled as a `k[x]`-submodule of the free
//! module `⊕_S k[x] e_S` (one basis vector per square-free odd monomial
//! `y_S`). Closing a generating set under multiplication by the odd monomials
//! turns the two-sided superideal into such a submodule, after which ordinary
//! module Gröbner bases decide membership.

mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use engine::{TermOrder, Vector};

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::poly::{point_values, Mono, Parity, Ring, SuperPoly};

pub(crate) use engine::BLOCK_BIT;

/// A reduced module Gröbner basis for a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    order: TermOrder,
    elems: Vec<Vector>,
}

impl ModuleBasis {
    pub fn compute(order: TermOrder, gens: impl IntoIterator<Item = Vector>) -> ModuleBasis {
        ModuleBasis {
            order,
            elems: engine::groebner(order, gens),
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elems
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        let v = self.order.sort(v);
        engine::reduce(self.order, &v, &self.elems)
    }

    /// Whether the constant `1` (at position `e_∅`) lies in the module.
    pub fn contains_one(&self) -> bool {
        self.elems
            .iter()
            .any(|g| g[0].0.odd == 0 && g[0].0.even.iter().all(|&e| e == 0))
    }

    pub fn leading_monos(&self) -> impl Iterator<Item = &Mono> {
        self.elems.iter().map(|g| &g[0].0)
    }

    pub fn to_polys(&self, ring: &Arc<Ring>) -> Vec<SuperPoly> {
        self.elems
            .iter()
            .map(|v| SuperPoly::from_terms(ring, v.iter().cloned()))
            .collect()
    }
}

fn vector_of(p: &SuperPoly) -> Vector {
    p.terms().to_vec()
}

/// Adds `y_T * g` for every nonempty odd monomial `y_T`, dropping zeros. The
/// `k[x]`-span of the output is the superideal generated by `gens`.
pub fn superideal_closure(gens: &[SuperPoly]) -> Vec<SuperPoly> {
    let mut out: Vec<SuperPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        out.push(g.clone());
        let ring = g.ring();
        let n = ring.num_odd();
        for t in 1u64..(1u64 << n) {
            let prod = g.mul_term(
                &Mono {
                    even: vec![0; ring.num_even()],
                    odd: t,
                },
                &ring.field().one(),
            );
            if !prod.is_zero() {
                out.push(prod);
            }
        }
    }
    out
}

/// Reduced module basis of the superideal generated by `gens`.
pub fn module_groebner(gens: &[SuperPoly], order: TermOrder) -> ModuleBasis {
    ModuleBasis::compute(order, gens.iter().map(vector_of))
}

/// `k[x | y] / J` with the Gröbner basis of `J` cached.
#[derive(Clone)]
pub struct SuperAlgebra {
    name: String,
    ring: Arc<Ring>,
    relations: Vec<SuperPoly>,
    basis: ModuleBasis,
}

impl SuperAlgebra {
    /// Splits each relation into its homogeneous components and computes the
    /// reduced basis of the closure.
    pub fn new(
        name: impl Into<String>,
        ring: Arc<Ring>,
        relations: Vec<SuperPoly>,
    ) -> Result<SuperAlgebra> {
        let mut rels = Vec::new();
        for r in relations {
            if r.ring() != &ring {
                return Err(AlgebraError::RingMismatch);
            }
            let (e, o) = r.split();
            for part in [e, o] {
                if !part.is_zero() && !rels.contains(&part) {
                    rels.push(part);
                }
            }
        }
        let basis = module_groebner(&superideal_closure(&rels), TermOrder::Standard);
        Ok(SuperAlgebra {
            name: name.into(),
            ring,
            relations: rels,
            basis,
        })
    }

    pub fn free(name: impl Into<String>, ring: Arc<Ring>) -> SuperAlgebra {
        SuperAlgebra::new(name, ring, Vec::new()).expect("no relations to check")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn relations(&self) -> &[SuperPoly] {
        &self.relations
    }

    pub fn basis(&self) -> &ModuleBasis {
        &self.basis
    }

    pub fn basis_polys(&self) -> Vec<SuperPoly> {
        self.basis.to_polys(&self.ring)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.basis.contains_one()
    }

    pub fn normal_form(&self, f: &SuperPoly) -> SuperPoly {
        SuperPoly::from_terms(&self.ring, self.basis.reduce(vector_of(f)))
    }

    pub fn is_zero(&self, f: &SuperPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn mul(&self, a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
        self.normal_form(&(a * b))
    }

    /// Presentation with extra relations.
    pub fn quotient(&self, name: impl Into<String>, extra: &[SuperPoly]) -> Result<SuperAlgebra> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        SuperAlgebra::new(name, self.ring.clone(), rels)
    }

    /// Superideal of this algebra generated by `gens` (homogeneous parts are
    /// taken separately).
    pub fn ideal(&self, gens: &[SuperPoly]) -> SuperIdeal {
        let mut parts = Vec::new();
        for g in gens {
            let (e, o) = g.split();
            for p in [e, o] {
                if !p.is_zero() {
                    parts.push(p);
                }
            }
        }
        let mut all: Vec<Vector> = superideal_closure(&parts).iter().map(vector_of).collect();
        all.extend(self.basis.elements().iter().cloned());
        let basis = ModuleBasis::compute(TermOrder::Standard, all);
        SuperIdeal {
            ring: self.ring.clone(),
            generators: parts,
            basis,
        }
    }

    pub fn zero_ideal(&self) -> SuperIdeal {
        SuperIdeal {
            ring: self.ring.clone(),
            generators: Vec::new(),
            basis: self.basis.clone(),
        }
    }

    /// Standard monomials of the presentation with at most `max_total`
    /// total degree.
    pub fn standard_monomials(&self, max_total: u32) -> Vec<Mono> {
        standard_monomials(&self.ring, &self.basis, max_total)
    }
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({self})")
    }
}

impl fmt::Display for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k[{} | {}]",
            self.ring.even_names().join(","),
            self.ring.odd_names().join(",")
        )?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

/// Monomials of bounded total degree not divisible (in the module sense) by
/// any leading term of `basis`.
pub fn standard_monomials(ring: &Ring, basis: &ModuleBasis, max_total: u32) -> Vec<Mono> {
    let m = ring.num_even();
    let n = ring.num_odd();
    let mut out = Vec::new();
    let leads: Vec<&Mono> = basis.leading_monos().collect();
    for s in 0u64..(1u64 << n) {
        let w = s.count_ones();
        if w > max_total {
            continue;
        }
        for even in exponents_up_to(m, max_total - w) {
            let mono = Mono { even, odd: s };
            if !leads.iter().any(|l| l.divides_in_module(&mono)) {
                out.push(mono);
            }
        }
    }
    out.sort();
    out.reverse();
    out
}

/// All exponent vectors of length `m` with sum at most `d`.
pub fn exponents_up_to(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(m, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, &mut Vec::new(), &mut out);
    out
}

/// A superideal of a presented superalgebra, as the submodule of `F` it
/// pulls back to (it always contains the relations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperIdeal {
    ring: Arc<Ring>,
    generators: Vec<SuperPoly>,
    basis: ModuleBasis,
}

impl SuperIdeal {
    pub fn generators(&self) -> &[SuperPoly] {
        &self.generators
    }

    pub fn basis(&self) -> &ModuleBasis {
        &self.basis
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn basis_polys(&self) -> Vec<SuperPoly> {
        self.basis.to_polys(&self.ring)
    }

    pub fn normal_form(&self, f: &SuperPoly) -> SuperPoly {
        SuperPoly::from_terms(&self.ring, self.basis.reduce(vector_of(f)))
    }

    pub fn contains(&self, f: &SuperPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.contains_one()
    }

    /// Module generators of the even part.
    pub fn even_generators(&self) -> Vec<SuperPoly> {
        self.basis_polys()
            .into_iter()
            .filter(|p| p.is_homogeneous(Parity::Even))
            .collect()
    }

    /// Generators that are not already in the superideal spanned by the
    /// previously kept ones, scanning the reduced basis from small to large.
    pub fn minimal_generators(&self, ambient: &SuperAlgebra) -> Vec<SuperPoly> {
        let mut polys = self.basis_polys();
        polys.reverse();
        let mut kept: Vec<SuperPoly> = Vec::new();
        let mut current = ambient.zero_ideal();
        for p in polys {
            if !current.contains(&p) {
                kept.push(p);
                current = ambient.ideal(&kept);
            }
        }
        kept
    }
}

/// Equality of superideals of the same algebra.
pub fn ideal_equal(a: &SuperIdeal, b: &SuperIdeal) -> bool {
    a.basis_polys().iter().all(|g| b.contains(g)) && b.basis_polys().iter().all(|g| a.contains(g))
}

/// `Ann_A(p)` together with a flag raised when `p = 0` in `A`.
#[derive(Clone, Debug)]
pub struct Annihilator {
    pub ideal: SuperIdeal,
    pub of_zero: bool,
}

/// `Ann_A(p) = { f : f p ∈ J }`, computed as the kernel of right
/// multiplication by `p` on `F / J` via an elimination-order basis of the
/// graph module `{ (e_S, y_S p) } + (0, J)`.
pub fn annihilator(p: &SuperPoly, a: &SuperAlgebra) -> Result<Annihilator> {
    if p.parity().is_none() {
        return Err(AlgebraError::Parity(format!("`{p}` is not homogeneous")));
    }
    let ring = a.ring();
    if a.is_zero(p) {
        let one = SuperPoly::one(ring);
        return Ok(Annihilator {
            ideal: a.ideal(&[one]),
            of_zero: true,
        });
    }
    let m = ring.num_even();
    let n = ring.num_odd();
    let tag = |v: Vector| -> Vector {
        v.into_iter()
            .map(|(mo, c)| {
                (
                    Mono {
                        even: mo.even,
                        odd: mo.odd | BLOCK_BIT,
                    },
                    c,
                )
            })
            .collect()
    };
    let mut gens: Vec<Vector> = Vec::new();
    for s in 0u64..(1u64 << n) {
        let e_s = Mono {
            even: vec![0; m],
            odd: s,
        };
        let image = p.mul_term(&e_s, &ring.field().one());
        let mut v = vec![(e_s, ring.field().one())];
        v.extend(tag(image.into_terms()));
        gens.push(v);
    }
    for g in a.basis().elements() {
        gens.push(tag(g.clone()));
    }
    let full = ModuleBasis::compute(TermOrder::Standard, gens);
    let kernel: Vec<Vector> = full
        .elements()
        .iter()
        .filter(|v| v[0].0.odd & BLOCK_BIT == 0)
        .cloned()
        .collect();
    let basis = ModuleBasis {
        order: TermOrder::Standard,
        elems: kernel,
    };
    let generators = basis.to_polys(ring);
    Ok(Annihilator {
        ideal: SuperIdeal {
            ring: ring.clone(),
            generators,
            basis,
        },
        of_zero: false,
    })
}

/// `A_a = A[t] / (t a - 1)` for an even `a`. The second component flags the
/// zero ring.
pub fn localize_at_even(a: &SuperAlgebra, elem: &SuperPoly) -> Result<(SuperAlgebra, bool)> {
    if !elem.is_homogeneous(Parity::Even) {
        return Err(AlgebraError::Parity(format!(
            "localization needs an even element, got `{elem}`"
        )));
    }
    let t_name = a.ring().fresh_name("t");
    let ring = a.ring().with_extra_even(std::slice::from_ref(&t_name))?;
    let t = SuperPoly::even_var(&ring, ring.num_even() - 1);
    let mut rels: Vec<SuperPoly> = a.relations().iter().map(|r| r.extend_even(&ring)).collect();
    rels.push(&(&t * &elem.extend_even(&ring)) - &SuperPoly::one(&ring));
    let loc = SuperAlgebra::new(format!("{}_({})", a.name(), elem), ring, rels)?;
    let zero = loc.is_zero_ring();
    Ok((loc, zero))
}

/// A superalgebra morphism `A -> B` given by generator images (even
/// generators of `A` first).
#[derive(Clone, Debug)]
pub struct Morphism<'a> {
    pub source: &'a SuperAlgebra,
    pub target: &'a SuperAlgebra,
    pub images: Vec<SuperPoly>,
}

impl<'a> Morphism<'a> {
    pub fn new(
        source: &'a SuperAlgebra,
        target: &'a SuperAlgebra,
        images: Vec<SuperPoly>,
    ) -> Result<Self> {
        let r = source.ring();
        if images.len() != r.num_even() + r.num_odd() {
            return Err(AlgebraError::Shape(format!(
                "morphism needs {} images, got {}",
                r.num_even() + r.num_odd(),
                images.len()
            )));
        }
        for (k, img) in images.iter().enumerate() {
            if img.ring() != target.ring() {
                return Err(AlgebraError::RingMismatch);
            }
            let want = Parity::of_len(usize::from(k >= r.num_even()));
            if !img.is_homogeneous(want) {
                return Err(AlgebraError::Parity(format!(
                    "image `{img}` of generator {k} has the wrong parity"
                )));
            }
        }
        let m = Morphism {
            source,
            target,
            images,
        };
        for rel in source.relations() {
            if !target.is_zero(&m.apply(rel)) {
                return Err(AlgebraError::IllDefinedMorphism(rel.to_string()));
            }
        }
        Ok(m)
    }

    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        f.substitute(&self.images, self.target.ring())
    }
}

/// Tests `B_1 = B_0 φ(A_1)`: every odd generator of `B` must lie in the
/// superideal generated by the images of the odd generators of `A`.
pub fn check_mono_necessary(phi: &Morphism<'_>) -> bool {
    let m = phi.source.ring().num_even();
    let odd_images: Vec<SuperPoly> = phi.images[m..].to_vec();
    let ideal = phi.target.ideal(&odd_images);
    let ring = phi.target.ring();
    (0..ring.num_odd()).all(|i| ideal.contains(&SuperPoly::odd_var(ring, i)))
}

/// A rational point of `SSpec(A)` and its maximal superideal
/// `𝔐 = (x_i - c_i) + A_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointIdeal {
    values: Vec<Scalar>,
}

impl PointIdeal {
    /// Checks that every relation of `a` vanishes at the point.
    pub fn new(a: &SuperAlgebra, point: &BTreeMap<String, Scalar>) -> Result<PointIdeal> {
        let values = point_values(a.ring(), point)?;
        PointIdeal::from_values(a, values)
    }

    pub fn from_values(a: &SuperAlgebra, values: Vec<Scalar>) -> Result<PointIdeal> {
        if values.len() != a.ring().num_even() {
            return Err(AlgebraError::Shape(
                "point has the wrong number of coordinates".into(),
            ));
        }
        for r in a.relations() {
            if !r.evaluate_at(&values).is_zero() {
                return Err(AlgebraError::NotOnScheme(r.to_string()));
            }
        }
        Ok(PointIdeal { values })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// `x_i - c_i`.
    pub fn linear_generators(&self, ring: &Arc<Ring>) -> Vec<SuperPoly> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, c)| &SuperPoly::even_var(ring, i) - &SuperPoly::constant(ring, c.clone()))
            .collect()
    }

    /// Generators of the even maximal ideal `𝔪`: `x_i - c_i` and `y_a y_b`.
    pub fn even_maximal_generators(&self, ring: &Arc<Ring>) -> Vec<SuperPoly> {
        let mut g = self.linear_generators(ring);
        let n = ring.num_odd();
        for a in 0..n {
            for b in a + 1..n {
                g.push(&SuperPoly::odd_var(ring, a) * &SuperPoly::odd_var(ring, b));
            }
        }
        g
    }

    /// Generators of `𝔐`.
    pub fn maximal_generators(&self, ring: &Arc<Ring>) -> Vec<SuperPoly> {
        let mut g = self.linear_generators(ring);
        g.extend((0..ring.num_odd()).map(|i| SuperPoly::odd_var(ring, i)));
        g
    }

    pub fn render(&self, ring: &Ring) -> String {
        ring.even_names()
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring(even: &[&str], odd: &[&str]) -> Arc<Ring> {
        Ring::new(even, odd, Field::Rational).unwrap()
    }

    fn gen(r: &Arc<Ring>, name: &str) -> SuperPoly {
        r.generator(name).unwrap()
    }

    #[test]
    fn closure_of_x_minus_y1y2() {
        let r = ring(&["x"], &["y1", "y2"]);
        let f = &gen(&r, "x") - &(&gen(&r, "y1") * &gen(&r, "y2"));
        let c: Vec<String> = superideal_closure(&[f])
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(c, ["x - y1y2", "x*y1", "x*y2", "x*y1y2"]);
        assert!(superideal_closure(&[]).is_empty());
        let r1 = ring(&[], &["y1"]);
        let c1 = superideal_closure(&[gen(&r1, "y1")]);
        assert_eq!(c1, vec![gen(&r1, "y1")]);
    }

    #[test]
    fn module_basis_of_x_minus_y1y2() {
        let r = ring(&["x"], &["y1", "y2"]);
        let f = &gen(&r, "x") - &(&gen(&r, "y1") * &gen(&r, "y2"));
        let a = SuperAlgebra::new("A", r.clone(), vec![f.clone()]).unwrap();
        let got: Vec<String> = a.basis_polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["x*y1y2", "x*y1", "x*y2", "x - y1y2"]);
        assert!(a.is_zero(&f));
        assert!(a.is_zero(&(&gen(&r, "x") * &gen(&r, "x"))));
        let b = SuperAlgebra::new("B", r.clone(), vec![gen(&r, "x")]).unwrap();
        assert_eq!(b.normal_form(&gen(&r, "y1")), gen(&r, "y1"));
    }

    #[test]
    fn monomial_generators_are_reduced() {
        let r = ring(&[], &["y1", "y2"]);
        let a = SuperAlgebra::new("A", r.clone(), vec![gen(&r, "y1"), gen(&r, "y2")]).unwrap();
        let got: Vec<String> = a.basis_polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["y1y2", "y1", "y2"]);
        let rx = ring(&["x"], &[]);
        let b = SuperAlgebra::new("B", rx.clone(), vec![gen(&rx, "x").pow(2)]).unwrap();
        assert_eq!(b.basis_polys(), vec![gen(&rx, "x").pow(2)]);
    }

    #[test]
    fn annihilator_in_exterior_algebra() {
        let r = ring(&[], &["y1", "y2"]);
        let a = SuperAlgebra::free("L", r.clone());
        let p = &gen(&r, "y1") * &gen(&r, "y2");
        let ann = annihilator(&p, &a).unwrap();
        assert!(!ann.of_zero);
        let expected = a.ideal(&[gen(&r, "y1"), gen(&r, "y2")]);
        assert!(ideal_equal(&ann.ideal, &expected));
        let ann1 = annihilator(&SuperPoly::one(&r), &a).unwrap();
        assert!(ideal_equal(&ann1.ideal, &a.zero_ideal()));
        let ann0 = annihilator(&SuperPoly::zero(&r), &a).unwrap();
        assert!(ann0.of_zero && ann0.ideal.is_unit());
    }

    #[test]
    fn annihilator_of_y_mod_xy() {
        let r = ring(&["x"], &["y"]);
        let (x, y) = (gen(&r, "x"), gen(&r, "y"));
        let a = SuperAlgebra::new("A", r.clone(), vec![&x * &y]).unwrap();
        let ann = annihilator(&y, &a).unwrap();
        assert!(ideal_equal(&ann.ideal, &a.ideal(&[x.clone(), y.clone()])));
    }

    #[test]
    fn ideal_equality_cases() {
        let r = ring(&["x"], &[]);
        let x = gen(&r, "x");
        let a = SuperAlgebra::free("A", r.clone());
        assert!(!ideal_equal(
            &a.ideal(std::slice::from_ref(&x)),
            &a.ideal(&[x.pow(2)])
        ));
        assert!(ideal_equal(&a.zero_ideal(), &a.ideal(&[])));
    }

    #[test]
    fn localization_examples() {
        let r = ring(&["x"], &["y"]);
        let (x, y) = (gen(&r, "x"), gen(&r, "y"));
        let a = SuperAlgebra::new("A", r.clone(), vec![&x * &y]).unwrap();
        let (ax, zero) = localize_at_even(&a, &x).unwrap();
        assert!(!zero);
        assert!(ax.is_zero(&y.extend_even(ax.ring())));
        let (a1, _) = localize_at_even(&a, &SuperPoly::one(&r)).unwrap();
        assert!(!a1.is_zero(&y.extend_even(a1.ring())));

        let rx = ring(&["x"], &[]);
        let xx = gen(&rx, "x");
        let b =
            SuperAlgebra::new("B", rx.clone(), vec![&xx * &(&xx - &SuperPoly::one(&rx))]).unwrap();
        let (bx, _) = localize_at_even(&b, &xx).unwrap();
        let x_loc = xx.extend_even(bx.ring());
        assert!(bx.is_zero(&(&x_loc - &SuperPoly::one(bx.ring()))));

        let (z, zero) = localize_at_even(&b, &SuperPoly::zero(&rx)).unwrap();
        assert!(zero && z.is_zero_ring());
    }

    #[test]
    fn mono_necessary_examples() {
        let rk = ring(&["x"], &[]);
        let rb = ring(&["x"], &["y"]);
        let k = SuperAlgebra::free("K", rk.clone());
        let b = SuperAlgebra::free("B", rb.clone());
        let incl = Morphism::new(&k, &b, vec![gen(&rb, "x")]).unwrap();
        assert!(!check_mono_necessary(&incl));
        let id = Morphism::new(&b, &b, rb.generators()).unwrap();
        assert!(check_mono_necessary(&id));
        let q = SuperAlgebra::new("Q", rb.clone(), vec![&gen(&rb, "x") * &gen(&rb, "y")]).unwrap();
        let surj = Morphism::new(&b, &q, rb.generators()).unwrap();
        assert!(check_mono_necessary(&surj));
        let bad = Morphism::new(&q, &b, rb.generators());
        assert!(matches!(bad, Err(AlgebraError::IllDefinedMorphism(_))));
    }

    #[test]
    fn point_off_the_scheme_is_rejected() {
        let r = ring(&["x"], &[]);
        let x = gen(&r, "x");
        let a = SuperAlgebra::new("A", r.clone(), vec![&x - &SuperPoly::int(&r, 1)]).unwrap();
        let pt: BTreeMap<String, Scalar> = [("x".into(), Field::Rational.int(2))].into();
        assert!(matches!(
            PointIdeal::new(&a, &pt),
            Err(AlgebraError::NotOnScheme(_))
        ));
    }
}
