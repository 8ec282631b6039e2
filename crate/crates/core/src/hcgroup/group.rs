//! The group `G(A)` of a Harish-Chandra pair over a coefficient superalgebra
//! `A`, with elements kept in the normal form `g e(a_1, v_1) ⋯ e(a_t, v_t)`.
//!
//! Words are normalized by four rules:
//! * R1: `e(a, v) h -> h e(a, ρ(h^{-1}) v)`;
//! * R2: `e(a, Σ c_j v_j) -> Π_j e(c_j a, v_j)`;
//! * R3: `e(a, v_i) e(b, v_j) -> f(-ab, [v_i, v_j]) e(b, v_j) e(a, v_i)` for `i > j`;
//! * R4: `e(a, v_i) e(b, v_i) -> f(-ab, [v_i, v_i]/2) e(a + b, v_i)`.
//!
//! Every correction `f(-ab, x)` carries a coefficient of higher odd degree,
//! and the odd part of `A` is nilpotent, so rewriting terminates.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{
    point_images, poly_adjugate, poly_det, poly_mat_mul, render_poly_mat, HcPair, ScalarMat,
};
use crate::error::{AlgebraError, Result};
use crate::groebner::{Morphism, SuperAlgebra};
use crate::poly::{Mono, Parity, SuperPoly};

/// A point of `G(A_0)` stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElem {
    pub m: Vec<Vec<SuperPoly>>,
    pub inv: Vec<Vec<SuperPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Group(GroupElem),
    /// `e(a, v)` with `v` given by coordinates in `A_0`.
    Odd {
        a: SuperPoly,
        v: Vec<SuperPoly>,
    },
}

/// `g e(a_1, v_1) ⋯ e(a_t, v_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcElement {
    pub g: GroupElem,
    pub odd: Vec<SuperPoly>,
}

impl fmt::Display for HcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let odd: Vec<String> = self.odd.iter().map(|a| a.to_string()).collect();
        write!(
            f,
            "(g = {}, a = [{}])",
            render_poly_mat(&self.g.m),
            odd.join(", ")
        )
    }
}

/// Which redex to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    pub steps: usize,
    /// Nontrivial `f(b, x)` factors emitted by R3 and R4.
    pub corrections: usize,
}

/// `G(A)` for a pair and a coefficient algebra.
#[derive(Clone, Debug)]
pub struct HcGroup {
    pair: HcPair,
    coeff: SuperAlgebra,
}

enum Redex {
    DropZero(usize),
    Expand(usize),
    Merge(usize),
    Conjugate(usize),
    Swap(usize),
    Combine(usize),
}

impl HcGroup {
    pub fn new(pair: HcPair, coeff: SuperAlgebra) -> Result<HcGroup> {
        if pair.field() != coeff.ring().field() {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(HcGroup { pair, coeff })
    }

    pub fn pair(&self) -> &HcPair {
        &self.pair
    }

    pub fn coeff(&self) -> &SuperAlgebra {
        &self.coeff
    }

    fn nf(&self, p: &SuperPoly) -> SuperPoly {
        self.coeff.normal_form(p)
    }

    fn n(&self) -> usize {
        self.pair.group.size()
    }

    fn constant(&self, c: &crate::field::Scalar) -> SuperPoly {
        SuperPoly::constant(self.coeff.ring(), c.clone())
    }

    fn identity_matrix(&self) -> Vec<Vec<SuperPoly>> {
        let ring = self.coeff.ring();
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            SuperPoly::one(ring)
                        } else {
                            SuperPoly::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn mat_mul(&self, a: &[Vec<SuperPoly>], b: &[Vec<SuperPoly>]) -> Vec<Vec<SuperPoly>> {
        poly_mat_mul(a, b, self.coeff.ring())
            .into_iter()
            .map(|r| r.iter().map(|p| self.nf(p)).collect())
            .collect()
    }

    pub fn identity_elem(&self) -> GroupElem {
        GroupElem {
            m: self.identity_matrix(),
            inv: self.identity_matrix(),
        }
    }

    pub fn identity(&self) -> HcElement {
        HcElement {
            g: self.identity_elem(),
            odd: vec![SuperPoly::zero(self.coeff.ring()); self.pair.t],
        }
    }

    pub fn is_identity_elem(&self, g: &GroupElem) -> bool {
        g.m == self.identity_matrix()
    }

    /// Inverse of an even element `u = c + n` with `c` a nonzero constant and
    /// `n` nilpotent.
    pub fn invert_unit(&self, u: &SuperPoly) -> Result<SuperPoly> {
        let ring = self.coeff.ring();
        let u = self.nf(u);
        let c = u.constant_term();
        if c.is_zero() {
            return Err(AlgebraError::NotInvertible(format!(
                "{u} has no constant term"
            )));
        }
        let cinv = c.inv();
        // u^{-1} = c^{-1} Σ (-n/c)^k
        let q = &SuperPoly::one(ring) - &u.scale(&cinv);
        let mut out = SuperPoly::one(ring);
        let mut power = SuperPoly::one(ring);
        let bound = 2 * (ring.num_even() + ring.num_odd()) + 4;
        for _ in 0..bound {
            power = self.nf(&(&power * &q));
            if power.is_zero() {
                return Ok(out.scale(&cinv));
            }
            out = &out + &power;
        }
        Err(AlgebraError::NotInvertible(format!(
            "{u} is not a constant plus a nilpotent"
        )))
    }

    /// A point of `G(A_0)`, with the inverse computed from the adjugate.
    pub fn group_elem(&self, m: Vec<Vec<SuperPoly>>) -> Result<GroupElem> {
        let n = self.n();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Shape(format!(
                "group elements are {n} x {n} matrices"
            )));
        }
        for p in m.iter().flatten() {
            if **p.ring() != **self.coeff.ring() {
                return Err(AlgebraError::RingMismatch);
            }
            if !p.is_homogeneous(Parity::Even) {
                return Err(AlgebraError::Parity(format!(
                    "matrix entry `{p}` is not even"
                )));
            }
        }
        let ring = self.coeff.ring();
        let m: Vec<Vec<SuperPoly>> = m
            .iter()
            .map(|r| r.iter().map(|p| self.nf(&p.with_ring(ring))).collect())
            .collect();
        let det = self.nf(&poly_det(&m, ring));
        let dinv = self.invert_unit(&det)?;
        let inv: Vec<Vec<SuperPoly>> = poly_adjugate(&m, ring)
            .iter()
            .map(|r| r.iter().map(|p| self.nf(&(p * &dinv))).collect())
            .collect();
        let g = GroupElem { m, inv };
        self.check_in_group(&g)?;
        Ok(g)
    }

    pub fn check_in_group(&self, g: &GroupElem) -> Result<()> {
        let ring = self.coeff.ring();
        let d = self.nf(&poly_det(&g.inv, ring));
        match self.pair.group.failing_equation(&g.m, &d, &self.coeff) {
            Some(w) => Err(AlgebraError::NotInGroup(w)),
            None => Ok(()),
        }
    }

    /// `f(b, x) = 1 + b x` for even `b` with `b^2 = 0`.
    pub fn f_of(&self, b: &SuperPoly, x: &ScalarMat) -> Result<GroupElem> {
        if !b.is_homogeneous(Parity::Even) {
            return Err(AlgebraError::Parity(format!("`{b}` is not even")));
        }
        let b = self.nf(b);
        if !self.nf(&(&b * &b)).is_zero() {
            return Err(AlgebraError::SquareNotZero(b.to_string()));
        }
        let g = self.f_unchecked(&b, x);
        self.check_in_group(&g)?;
        Ok(g)
    }

    fn f_unchecked(&self, b: &SuperPoly, x: &ScalarMat) -> GroupElem {
        let mut m = self.identity_matrix();
        let mut inv = self.identity_matrix();
        for (i, row) in x.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = self.nf(&b.scale(c));
                m[i][j] = &m[i][j] + &t;
                inv[i][j] = &inv[i][j] - &t;
            }
        }
        GroupElem { m, inv }
    }

    pub fn group_mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        GroupElem {
            m: self.mat_mul(&a.m, &b.m),
            inv: self.mat_mul(&b.inv, &a.inv),
        }
    }

    pub fn group_inv(&self, a: &GroupElem) -> GroupElem {
        GroupElem {
            m: a.inv.clone(),
            inv: a.m.clone(),
        }
    }

    /// `ρ(h^{-1})`, evaluated with `g := h^{-1}` and `d := det h`.
    fn rho_inverse(&self, h: &GroupElem) -> Vec<Vec<SuperPoly>> {
        let ring = self.coeff.ring();
        let d = self.nf(&poly_det(&h.m, ring));
        let images = point_images(&h.inv, &d);
        self.pair
            .rho
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| self.nf(&p.substitute(&images, ring)))
                    .collect()
            })
            .collect()
    }

    /// Checks parities and builds an element from its normal-form data.
    pub fn element(&self, g: GroupElem, odd: Vec<SuperPoly>) -> Result<HcElement> {
        if odd.len() != self.pair.t {
            return Err(AlgebraError::Shape(format!(
                "expected {} odd coefficients",
                self.pair.t
            )));
        }
        let ring = self.coeff.ring();
        let mut out = Vec::with_capacity(odd.len());
        for a in odd {
            if **a.ring() != **ring {
                return Err(AlgebraError::RingMismatch);
            }
            if !a.is_homogeneous(Parity::Odd) {
                return Err(AlgebraError::Parity(format!(
                    "odd coefficient `{a}` is not odd"
                )));
            }
            out.push(self.nf(&a.with_ring(ring)));
        }
        Ok(HcElement { g, odd: out })
    }

    fn unit(&self, i: usize) -> Vec<SuperPoly> {
        let ring = self.coeff.ring();
        (0..self.pair.t)
            .map(|j| {
                if i == j {
                    SuperPoly::one(ring)
                } else {
                    SuperPoly::zero(ring)
                }
            })
            .collect()
    }

    fn basis_index(v: &[SuperPoly]) -> Option<usize> {
        let mut found = None;
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || !c.is_one() {
                return None;
            }
            found = Some(j);
        }
        found
    }

    pub fn to_word(&self, e: &HcElement) -> Vec<Factor> {
        let mut w = vec![Factor::Group(e.g.clone())];
        for (i, a) in e.odd.iter().enumerate() {
            if !a.is_zero() {
                w.push(Factor::Odd {
                    a: a.clone(),
                    v: self.unit(i),
                });
            }
        }
        w
    }

    fn single_redex(&self, w: &[Factor], i: usize) -> Option<Redex> {
        match &w[i] {
            Factor::Odd { a, v } if a.is_zero() || v.iter().all(SuperPoly::is_zero) => {
                Some(Redex::DropZero(i))
            }
            Factor::Odd { v, .. } if Self::basis_index(v).is_none() => Some(Redex::Expand(i)),
            _ => None,
        }
    }

    fn pair_redex(&self, w: &[Factor], i: usize) -> Option<Redex> {
        match (&w[i], &w[i + 1]) {
            (Factor::Group(_), Factor::Group(_)) => Some(Redex::Merge(i)),
            (Factor::Odd { .. }, Factor::Group(_)) => Some(Redex::Conjugate(i)),
            (Factor::Odd { v: v1, .. }, Factor::Odd { v: v2, .. }) => {
                match (Self::basis_index(v1), Self::basis_index(v2)) {
                    (Some(p), Some(q)) if p > q => Some(Redex::Swap(i)),
                    (Some(p), Some(q)) if p == q => Some(Redex::Combine(i)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn find_redex(&self, w: &[Factor], strategy: Strategy) -> Option<Redex> {
        let at = |i: usize| -> Option<Redex> {
            self.single_redex(w, i).or_else(|| {
                if i + 1 < w.len() {
                    self.pair_redex(w, i)
                } else {
                    None
                }
            })
        };
        match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(at),
            Strategy::Rightmost => (0..w.len()).rev().find_map(|i| {
                // prefer the pair starting here, then the single factor
                (if i + 1 < w.len() {
                    self.pair_redex(w, i)
                } else {
                    None
                })
                .or_else(|| self.single_redex(w, i))
            }),
        }
    }

    /// `f(c, x)` as a factor, or nothing when it is the identity.
    fn correction(
        &self,
        c: &SuperPoly,
        x: &ScalarMat,
        stats: &mut NormalizeStats,
    ) -> Result<Option<Factor>> {
        let c = self.nf(c);
        if c.is_zero() || super::is_zero_mat(x) {
            return Ok(None);
        }
        let g = self.f_unchecked(&c, x);
        self.check_in_group(&g)?;
        stats.corrections += 1;
        Ok(Some(Factor::Group(g)))
    }

    pub fn normalize(
        &self,
        word: Vec<Factor>,
        strategy: Strategy,
    ) -> Result<(HcElement, NormalizeStats)> {
        let mut w = word;
        let mut stats = NormalizeStats::default();
        let field = self.pair.field();
        let half = field.int(2).inv();
        while let Some(redex) = self.find_redex(&w, strategy) {
            stats.steps += 1;
            match redex {
                Redex::DropZero(i) => {
                    w.remove(i);
                }
                Redex::Expand(i) => {
                    let Factor::Odd { a, v } = w.remove(i) else {
                        unreachable!()
                    };
                    let parts: Vec<Factor> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| Factor::Odd {
                            a: self.nf(&(c * &a)),
                            v: self.unit(j),
                        })
                        .collect();
                    w.splice(i..i, parts);
                }
                Redex::Merge(i) => {
                    let Factor::Group(b) = w.remove(i + 1) else {
                        unreachable!()
                    };
                    let Factor::Group(a) = &w[i] else {
                        unreachable!()
                    };
                    w[i] = Factor::Group(self.group_mul(a, &b));
                }
                Redex::Conjugate(i) => {
                    let Factor::Group(h) = w.remove(i + 1) else {
                        unreachable!()
                    };
                    let Factor::Odd { a, v } = w.remove(i) else {
                        unreachable!()
                    };
                    let r = self.rho_inverse(&h);
                    let ring = self.coeff.ring();
                    let v2: Vec<SuperPoly> = r
                        .iter()
                        .map(|row| {
                            self.nf(&row
                                .iter()
                                .zip(&v)
                                .fold(SuperPoly::zero(ring), |acc, (x, y)| &acc + &(x * y)))
                        })
                        .collect();
                    w.splice(i..i, [Factor::Group(h), Factor::Odd { a, v: v2 }]);
                }
                Redex::Swap(i) => {
                    let Factor::Odd { a: b, v: vb } = w.remove(i + 1) else {
                        unreachable!()
                    };
                    let Factor::Odd { a, v: va } = w.remove(i) else {
                        unreachable!()
                    };
                    let (p, q) = (
                        Self::basis_index(&va).unwrap(),
                        Self::basis_index(&vb).unwrap(),
                    );
                    let c = -&(&a * &b);
                    let mut repl = Vec::new();
                    if let Some(f) = self.correction(&c, &self.pair.bracket[p][q], &mut stats)? {
                        repl.push(f);
                    }
                    repl.push(Factor::Odd { a: b, v: vb });
                    repl.push(Factor::Odd { a, v: va });
                    w.splice(i..i, repl);
                }
                Redex::Combine(i) => {
                    let Factor::Odd { a: b, .. } = w.remove(i + 1) else {
                        unreachable!()
                    };
                    let Factor::Odd { a, v } = w.remove(i) else {
                        unreachable!()
                    };
                    let p = Self::basis_index(&v).unwrap();
                    let c = -&(&a * &b);
                    let x: ScalarMat = self.pair.bracket[p][p]
                        .iter()
                        .map(|r| r.iter().map(|e| e * &half).collect())
                        .collect();
                    let mut repl = Vec::new();
                    if let Some(f) = self.correction(&c, &x, &mut stats)? {
                        repl.push(f);
                    }
                    repl.push(Factor::Odd {
                        a: self.nf(&(&a + &b)),
                        v,
                    });
                    w.splice(i..i, repl);
                }
            }
        }
        let mut iter = w.into_iter().peekable();
        let g = match iter.peek() {
            Some(Factor::Group(_)) => {
                let Some(Factor::Group(g)) = iter.next() else {
                    unreachable!()
                };
                g
            }
            _ => self.identity_elem(),
        };
        let mut odd = vec![SuperPoly::zero(self.coeff.ring()); self.pair.t];
        for f in iter {
            match f {
                Factor::Odd { a, v } => odd[Self::basis_index(&v).expect("normalized")] = a,
                Factor::Group(_) => unreachable!("normalized words have one group factor"),
            }
        }
        Ok((HcElement { g, odd }, stats))
    }

    pub fn mul_with(
        &self,
        x: &HcElement,
        y: &HcElement,
        strategy: Strategy,
    ) -> Result<(HcElement, NormalizeStats)> {
        let mut w = self.to_word(x);
        w.extend(self.to_word(y));
        self.normalize(w, strategy)
    }

    pub fn mul(&self, x: &HcElement, y: &HcElement) -> Result<HcElement> {
        Ok(self.mul_with(x, y, Strategy::Leftmost)?.0)
    }

    /// Reverses the word with inverted factors and normalizes.
    pub fn inv(&self, x: &HcElement) -> Result<HcElement> {
        let mut w: Vec<Factor> = Vec::new();
        for (i, a) in x.odd.iter().enumerate().rev() {
            if !a.is_zero() {
                w.push(Factor::Odd {
                    a: -a,
                    v: self.unit(i),
                });
            }
        }
        w.push(Factor::Group(self.group_inv(&x.g)));
        Ok(self.normalize(w, Strategy::Leftmost)?.0)
    }

    /// A random point of `G(A_0)`: a sample `k`-point times a few factors
    /// `f(c y_i y_j, x)` with `x` from the Lie algebra basis.
    pub fn random_group_elem<R: Rng>(&self, rng: &mut R) -> Result<GroupElem> {
        let ring = self.coeff.ring();
        let k_point = self
            .pair
            .k_points
            .choose(rng)
            .expect("at least the identity")
            .clone();
        let m: Vec<Vec<SuperPoly>> = k_point
            .iter()
            .map(|r| r.iter().map(|c| self.constant(c)).collect())
            .collect();
        let mut g = self.group_elem(m)?;
        let n_odd = ring.num_odd();
        let lie = self.pair.group.lie_basis();
        if n_odd >= 2 && !lie.is_empty() {
            for _ in 0..rng.gen_range(0..=2) {
                let i = rng.gen_range(0..n_odd);
                let j = (i + rng.gen_range(1..n_odd)) % n_odd;
                let c = nonzero(rng);
                let b = SuperPoly::monomial(
                    ring,
                    Mono {
                        even: vec![0; ring.num_even()],
                        odd: (1 << i) | (1 << j),
                    },
                    self.pair.field().int(c),
                );
                let x = lie.choose(rng).unwrap();
                g = self.group_mul(&g, &self.f_of(&b, x)?);
            }
        }
        Ok(g)
    }

    /// A random odd element: a combination of odd generators and of
    /// products of three of them.
    pub fn random_odd<R: Rng>(&self, rng: &mut R) -> SuperPoly {
        let ring = self.coeff.ring();
        let n = ring.num_odd();
        let field = self.pair.field();
        let mut a = SuperPoly::zero(ring);
        for i in 0..n {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                a = &a + &SuperPoly::odd_var(ring, i).scale(&field.int(c));
            }
        }
        if n >= 3 && rng.gen_bool(0.5) {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(rng);
            let mask = idx[..3].iter().fold(0u64, |acc, &i| acc | 1 << i);
            let mono = Mono {
                even: vec![0; ring.num_even()],
                odd: mask,
            };
            a = &a + &SuperPoly::monomial(ring, mono, field.int(nonzero(rng)));
        }
        self.nf(&a)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Result<HcElement> {
        let g = self.random_group_elem(rng)?;
        let odd = (0..self.pair.t).map(|_| self.random_odd(rng)).collect();
        self.element(g, odd)
    }

    /// Applies a coefficient morphism `β: A -> A'` entrywise; `target` must be
    /// the group over `A'`.
    pub fn map_element(&self, beta: &Morphism<'_>, target: &HcGroup, e: &HcElement) -> HcElement {
        let map = |p: &SuperPoly| target.nf(&beta.apply(p));
        let mm = |m: &[Vec<SuperPoly>]| -> Vec<Vec<SuperPoly>> {
            m.iter().map(|r| r.iter().map(map).collect()).collect()
        };
        HcElement {
            g: GroupElem {
                m: mm(&e.g.m),
                inv: mm(&e.g.inv),
            },
            odd: e.odd.iter().map(map).collect(),
        }
    }

    /// Maps every factor of a word through `β`.
    pub fn map_word(&self, beta: &Morphism<'_>, target: &HcGroup, w: &[Factor]) -> Vec<Factor> {
        let map = |p: &SuperPoly| target.nf(&beta.apply(p));
        let mm = |m: &[Vec<SuperPoly>]| -> Vec<Vec<SuperPoly>> {
            m.iter().map(|r| r.iter().map(map).collect()).collect()
        };
        w.iter()
            .map(|f| match f {
                Factor::Group(g) => Factor::Group(GroupElem {
                    m: mm(&g.m),
                    inv: mm(&g.inv),
                }),
                Factor::Odd { a, v } => Factor::Odd {
                    a: map(a),
                    v: v.iter().map(map).collect(),
                },
            })
            .collect()
    }
}

fn nonzero<R: Rng>(rng: &mut R) -> i64 {
    let c: i64 = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

#[cfg(test)]
mod tests {
    use super::super::{gl1_weight, unipotent};
    use super::*;
    use crate::field::Field;
    use crate::poly::Ring;

    fn lambda(names: &[&str]) -> SuperAlgebra {
        SuperAlgebra::free(
            "L",
            Ring::new(&[] as &[&str], names, Field::Rational).unwrap(),
        )
    }

    #[test]
    fn f_of_examples() {
        let a = lambda(&["s", "t"]);
        let grp = HcGroup::new(unipotent(Field::Rational), a.clone()).unwrap();
        let r = a.ring();
        let f = Field::Rational;
        let e12 = vec![vec![f.zero(), f.one()], vec![f.zero(), f.zero()]];
        let st = &r.generator("s").unwrap() * &r.generator("t").unwrap();
        let g = grp.f_of(&st, &e12).unwrap();
        assert_eq!(g.m[0][1], st);
        assert!(grp.is_identity_elem(&grp.f_of(&SuperPoly::zero(r), &e12).unwrap()));
        let s = r.generator("s").unwrap();
        assert!(matches!(grp.f_of(&s, &e12), Err(AlgebraError::Parity(_))));
    }

    #[test]
    fn square_must_vanish() {
        let a = SuperAlgebra::free(
            "L",
            Ring::new(&[] as &[&str], &["s", "t", "u", "w"], Field::Rational).unwrap(),
        );
        let grp = HcGroup::new(unipotent(Field::Rational), a.clone()).unwrap();
        let r = a.ring();
        let g = |n: &str| r.generator(n).unwrap();
        let b = &(&g("s") * &g("t")) + &(&g("u") * &g("w"));
        let f = Field::Rational;
        let e12 = vec![vec![f.zero(), f.one()], vec![f.zero(), f.zero()]];
        assert!(matches!(
            grp.f_of(&b, &e12),
            Err(AlgebraError::SquareNotZero(_))
        ));
    }

    #[test]
    fn unipotent_product_example() {
        let a = lambda(&["s", "t"]);
        let r = a.ring().clone();
        let grp = HcGroup::new(unipotent(Field::Rational), a).unwrap();
        let s = r.generator("s").unwrap();
        let t = r.generator("t").unwrap();
        let x = grp.element(grp.identity_elem(), vec![s.clone()]).unwrap();
        let y = grp.element(grp.identity_elem(), vec![t.clone()]).unwrap();
        let (p, stats) = grp.mul_with(&x, &y, Strategy::Leftmost).unwrap();
        assert_eq!(p.odd, vec![&s + &t]);
        assert_eq!(p.g.m[0][1], -&(&s * &t));
        assert_eq!(stats.corrections, 1);
        let inv = grp.inv(&x).unwrap();
        assert_eq!(inv.odd, vec![-&s]);
        assert!(grp.is_identity_elem(&inv.g));
        assert_eq!(grp.mul(&x, &inv).unwrap(), grp.identity());
    }

    #[test]
    fn gl1_conjugation_example() {
        let a = lambda(&["s", "t"]);
        let r = a.ring().clone();
        let grp = HcGroup::new(gl1_weight(Field::Rational, 1), a).unwrap();
        let f = Field::Rational;
        let s = r.generator("s").unwrap();
        let t = r.generator("t").unwrap();
        let g = grp.group_elem(vec![vec![SuperPoly::int(&r, 2)]]).unwrap();
        let h = grp.group_elem(vec![vec![SuperPoly::int(&r, 3)]]).unwrap();
        let x = grp.element(g, vec![s.clone()]).unwrap();
        let y = grp.element(h, vec![t.clone()]).unwrap();
        let (p, stats) = grp.mul_with(&x, &y, Strategy::Rightmost).unwrap();
        assert_eq!(p.g.m, vec![vec![SuperPoly::int(&r, 6)]]);
        assert_eq!(p.odd, vec![&s.scale(&f.int(3).inv()) + &t]);
        assert_eq!(stats.corrections, 0);
    }
}
