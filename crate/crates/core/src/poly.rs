//! The free supercommutative algebra `k[x_1..x_m | y_1..y_n]`.
//!
//! A monomial is an exponent vector on the even generators together with a
//! square-free set of odd generators, stored as a bitmask. The odd factors of a
//! monomial are always read in ascending index order; the sign produced by
//! reordering a product is folded into the coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};

/// Bit 63 of a position label is reserved by the module engine.
pub const MAX_ODD: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn bit(self) -> usize {
        self as usize
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Parity) -> Parity {
        Parity::of_len(self.bit() + other.bit())
    }
}

/// Generator names and the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    even: Vec<String>,
    odd: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: AsRef<str>>(even: &[S], odd: &[S], field: Field) -> Result<Arc<Ring>> {
        let even: Vec<String> = even.iter().map(|s| s.as_ref().to_string()).collect();
        let odd: Vec<String> = odd.iter().map(|s| s.as_ref().to_string()).collect();
        if odd.len() > MAX_ODD {
            return Err(AlgebraError::TooManyOdd(odd.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in even.iter().chain(odd.iter()) {
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(Ring { even, odd, field }))
    }

    pub fn even_names(&self) -> &[String] {
        &self.even
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd
    }

    pub fn num_even(&self) -> usize {
        self.even.len()
    }

    pub fn num_odd(&self) -> usize {
        self.odd.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn even_index(&self, name: &str) -> Option<usize> {
        self.even.iter().position(|n| n == name)
    }

    pub fn odd_index(&self, name: &str) -> Option<usize> {
        self.odd.iter().position(|n| n == name)
    }

    /// Generator by name, with its parity.
    pub fn generator(self: &Arc<Self>, name: &str) -> Option<SuperPoly> {
        if let Some(i) = self.even_index(name) {
            Some(SuperPoly::even_var(self, i))
        } else {
            self.odd_index(name).map(|i| SuperPoly::odd_var(self, i))
        }
    }

    /// All generators, even ones first.
    pub fn generators(self: &Arc<Self>) -> Vec<SuperPoly> {
        (0..self.num_even())
            .map(|i| SuperPoly::even_var(self, i))
            .chain((0..self.num_odd()).map(|i| SuperPoly::odd_var(self, i)))
            .collect()
    }

    /// A fresh even generator name not clashing with existing ones.
    pub fn fresh_name(&self, base: &str) -> String {
        let taken = |s: &str| self.even.iter().chain(self.odd.iter()).any(|n| n == s);
        if !taken(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|s| !taken(s))
            .expect("unbounded search")
    }

    /// Same odd generators, `extra` even generators appended.
    pub fn with_extra_even(&self, extra: &[String]) -> Result<Arc<Ring>> {
        let mut even = self.even.clone();
        even.extend(extra.iter().cloned());
        Ring::new(&even, &self.odd, self.field)
    }

    /// Same even generators, no odd ones.
    pub fn even_only(&self) -> Arc<Ring> {
        Arc::new(Ring {
            even: self.even.clone(),
            odd: Vec::new(),
            field: self.field,
        })
    }
}

/// `x^even * y_odd` with the odd factors in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub even: Vec<u32>,
    pub odd: u64,
}

impl Mono {
    pub fn one(m: usize) -> Mono {
        Mono {
            even: vec![0; m],
            odd: 0,
        }
    }

    pub fn odd_len(&self) -> usize {
        self.odd.count_ones() as usize
    }

    pub fn even_degree(&self) -> u32 {
        self.even.iter().sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.even_degree() + self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.odd_len())
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    /// Product of two monomials with its sign, or `None` when an odd
    /// generator repeats.
    pub fn mul(&self, other: &Mono) -> Option<(Mono, bool)> {
        let negative = merge_sign(self.odd, other.odd)?;
        let even = self
            .even
            .iter()
            .zip(&other.even)
            .map(|(a, b)| a + b)
            .collect();
        Some((
            Mono {
                even,
                odd: self.odd | other.odd,
            },
            negative,
        ))
    }

    /// Componentwise divisibility of the even parts with equal odd sets.
    pub fn divides_in_module(&self, other: &Mono) -> bool {
        self.odd == other.odd && self.even.iter().zip(&other.even).all(|(a, b)| a <= b)
    }

    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |i| self.odd >> i & 1 == 1)
    }
}

/// Sign of `y_s * y_t` brought to ascending order: `Some(true)` for a minus
/// sign, `None` when the sets overlap.
pub fn merge_sign(s: u64, t: u64) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        // elements of s above j sit to the left of y_j and must pass it
        let above = if j >= 63 {
            0
        } else {
            s & !((1u64 << (j + 1)) - 1)
        };
        inversions += above.count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

/// Graded reverse lexicographic comparison of exponent vectors.
pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Odd sets: more factors is larger, then the set holding the smallest
/// differing index is larger (`y1 > y2`).
pub fn odd_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else {
            let low = diff & diff.wrapping_neg();
            if a & low != 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    })
}

/// The global order: grevlex on the even part, refined by the odd set.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.even, &other.even).then_with(|| odd_cmp(self.odd, other.odd))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the free superalgebra; terms sorted by decreasing monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPoly {
    ring: Arc<Ring>,
    terms: Vec<(Mono, Scalar)>,
}

impl SuperPoly {
    pub fn zero(ring: &Arc<Ring>) -> SuperPoly {
        SuperPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> SuperPoly {
        SuperPoly::monomial(ring, Mono::one(ring.num_even()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> SuperPoly {
        SuperPoly::constant(ring, ring.field().one())
    }

    pub fn int(ring: &Arc<Ring>, n: i64) -> SuperPoly {
        SuperPoly::constant(ring, ring.field().int(n))
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Mono, c: Scalar) -> SuperPoly {
        debug_assert_eq!(mono.even.len(), ring.num_even());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(mono, c)]
        };
        SuperPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn even_var(ring: &Arc<Ring>, i: usize) -> SuperPoly {
        let mut m = Mono::one(ring.num_even());
        m.even[i] = 1;
        SuperPoly::monomial(ring, m, ring.field().one())
    }

    pub fn odd_var(ring: &Arc<Ring>, i: usize) -> SuperPoly {
        let mut m = Mono::one(ring.num_even());
        m.odd = 1 << i;
        SuperPoly::monomial(ring, m, ring.field().one())
    }

    /// Builds from unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Mono, Scalar)>,
    ) -> SuperPoly {
        let mut acc: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SuperPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the global order.
    pub fn leading(&self) -> Option<&(Mono, Scalar)> {
        self.terms.first()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn coefficient(&self, mono: &Mono) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// `Some(p)` when every monomial has parity `p`; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.iter().map(|(m, _)| m.parity());
        let first = match it.next() {
            Some(p) => p,
            None => return Some(Parity::Even),
        };
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self, p: Parity) -> bool {
        self.is_zero() || self.parity() == Some(p)
    }

    pub fn part(&self, p: Parity) -> SuperPoly {
        SuperPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity() == p)
                .cloned()
                .collect(),
        }
    }

    /// Even and odd components.
    pub fn split(&self) -> (SuperPoly, SuperPoly) {
        (self.part(Parity::Even), self.part(Parity::Odd))
    }

    /// Terms whose odd set has exactly `k` elements.
    pub fn odd_weight_part(&self, k: usize) -> SuperPoly {
        SuperPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.odd_len() == k)
                .cloned()
                .collect(),
        }
    }

    pub fn min_odd_weight(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.odd_len()).min()
    }

    fn check_ring(&self, other: &SuperPoly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &SuperPoly, subtract: bool) -> SuperPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SuperPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Scalar) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(&self.ring);
        }
        SuperPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a single term from the left.
    pub fn mul_term(&self, mono: &Mono, c: &Scalar) -> SuperPoly {
        let terms = self.terms.iter().filter_map(|(m, a)| {
            let (prod, neg) = mono.mul(m)?;
            let v = c * a;
            Some((prod, if neg { -v } else { v }))
        });
        SuperPoly::from_terms(&self.ring, terms)
    }

    pub fn checked_mul(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_ring(other)?;
        let mut acc: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2) {
                    let v = c1 * c2;
                    let v = if neg { -v } else { v };
                    match acc.get_mut(&m) {
                        Some(x) => *x = &*x + &v,
                        None => {
                            acc.insert(m, v);
                        }
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(SuperPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> SuperPoly {
        let mut out = SuperPoly::one(&self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes rational values for the even generators; odd generators go to 0.
    pub fn evaluate_at_point(&self, point: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let values = point_values(&self.ring, point)?;
        Ok(self.evaluate_at(&values))
    }

    /// Same as [`evaluate_at_point`](Self::evaluate_at_point) with values in
    /// generator order.
    pub fn evaluate_at(&self, values: &[Scalar]) -> Scalar {
        let field = self.field();
        let mut total = field.zero();
        for (m, c) in &self.terms {
            if m.odd != 0 {
                continue;
            }
            let mut v = c.clone();
            for (e, x) in m.even.iter().zip(values) {
                for _ in 0..*e {
                    v = &v * x;
                }
            }
            total = &total + &v;
        }
        total
    }

    /// Partial derivative in an even generator.
    pub fn d_even(&self, i: usize) -> SuperPoly {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.even[i] > 0)
            .map(|(m, c)| {
                let mut m2 = m.clone();
                m2.even[i] -= 1;
                (m2, c * &field.int(m.even[i] as i64))
            });
        SuperPoly::from_terms(&self.ring, terms)
    }

    /// Extends generator images `images` (even generators first) to a
    /// superderivation of the given parity via the signed Leibniz rule.
    pub fn apply_derivation(&self, images: &[SuperPoly], parity: Parity) -> Result<SuperPoly> {
        check_derivation_images(&self.ring, images, parity)?;
        Ok(self.derive_unchecked(images, parity))
    }

    #[allow(clippy::needless_range_loop)]
    pub(crate) fn derive_unchecked(&self, images: &[SuperPoly], parity: Parity) -> SuperPoly {
        let ring = &self.ring;
        let m = ring.num_even();
        let mut out = SuperPoly::zero(ring);
        for (mono, c) in &self.terms {
            let odd_part = SuperPoly::monomial(
                ring,
                Mono {
                    even: vec![0; m],
                    odd: mono.odd,
                },
                ring.field().one(),
            );
            for i in 0..m {
                let e = mono.even[i];
                if e == 0 || images[i].is_zero() {
                    continue;
                }
                let mut rest = mono.clone();
                rest.even[i] -= 1;
                rest.odd = 0;
                let coeff = c * &ring.field().int(e as i64);
                let t = images[i].mul_term(&rest, &coeff);
                out = &out + &(&t * &odd_part);
            }
            let even_mono = Mono {
                even: mono.even.clone(),
                odd: 0,
            };
            let idx: Vec<usize> = mono.odd_indices().collect();
            for (pos, &k) in idx.iter().enumerate() {
                let img = &images[m + k];
                if img.is_zero() {
                    continue;
                }
                let before = idx[..pos].iter().fold(0u64, |acc, &j| acc | 1 << j);
                let after = idx[pos + 1..].iter().fold(0u64, |acc, &j| acc | 1 << j);
                let sign_neg = parity == Parity::Odd && pos % 2 == 1;
                let coeff = if sign_neg { -c } else { c.clone() };
                let left = SuperPoly::monomial(
                    ring,
                    Mono {
                        even: even_mono.even.clone(),
                        odd: before,
                    },
                    coeff,
                );
                let right = SuperPoly::monomial(
                    ring,
                    Mono {
                        even: vec![0; m],
                        odd: after,
                    },
                    ring.field().one(),
                );
                out = &out + &(&(&left * img) * &right);
            }
        }
        out
    }

    /// The superalgebra morphism from the free algebra sending the
    /// generators (even first) to `images`, all living in `target`.
    pub fn substitute(&self, images: &[SuperPoly], target: &Arc<Ring>) -> SuperPoly {
        let m = self.ring.num_even();
        let mut out = SuperPoly::zero(target);
        let mut powers: Vec<Vec<SuperPoly>> = vec![vec![SuperPoly::one(target)]; m];
        for (mono, c) in &self.terms {
            let mut t = SuperPoly::constant(target, c.clone());
            for i in 0..m {
                let e = mono.even[i] as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            for k in mono.odd_indices() {
                t = &t * &images[m + k];
            }
            out = &out + &t;
        }
        out
    }

    /// Re-embeds into a ring with the same odd generators and more even ones
    /// appended.
    pub fn extend_even(&self, target: &Arc<Ring>) -> SuperPoly {
        let m = target.num_even();
        debug_assert!(m >= self.ring.num_even());
        debug_assert_eq!(target.num_odd(), self.ring.num_odd());
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let mut even = mono.even.clone();
                even.resize(m, 0);
                (
                    Mono {
                        even,
                        odd: mono.odd,
                    },
                    c.clone(),
                )
            })
            .collect();
        SuperPoly {
            ring: target.clone(),
            terms,
        }
    }

    /// Drops every term containing an odd generator and moves to `target`,
    /// which must have the same even generators.
    pub fn bar_into(&self, target: &Arc<Ring>) -> SuperPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.odd == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        SuperPoly {
            ring: target.clone(),
            terms,
        }
    }

    /// Moves into another ring with identical generator layout.
    pub fn with_ring(&self, target: &Arc<Ring>) -> SuperPoly {
        SuperPoly {
            ring: target.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> SuperPoly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }
}

pub(crate) fn check_derivation_images(
    ring: &Arc<Ring>,
    images: &[SuperPoly],
    parity: Parity,
) -> Result<()> {
    if images.len() != ring.num_even() + ring.num_odd() {
        return Err(AlgebraError::Shape(format!(
            "derivation needs {} generator images, got {}",
            ring.num_even() + ring.num_odd(),
            images.len()
        )));
    }
    for (k, img) in images.iter().enumerate() {
        let (name, gen_parity) = if k < ring.num_even() {
            (&ring.even_names()[k], Parity::Even)
        } else {
            (&ring.odd_names()[k - ring.num_even()], Parity::Odd)
        };
        let want = gen_parity.add(parity);
        if !img.is_homogeneous(want) {
            return Err(AlgebraError::Parity(format!(
                "image of `{name}` must be {} but is `{img}`",
                match want {
                    Parity::Even => "even",
                    Parity::Odd => "odd",
                }
            )));
        }
    }
    Ok(())
}

pub(crate) fn point_values(ring: &Ring, point: &BTreeMap<String, Scalar>) -> Result<Vec<Scalar>> {
    let missing: Vec<String> = ring
        .even_names()
        .iter()
        .filter(|n| !point.contains_key(*n))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(AlgebraError::Unassigned(missing));
    }
    for name in point.keys() {
        if ring.even_index(name).is_none() {
            return Err(AlgebraError::UnknownName(name.clone()));
        }
    }
    Ok(ring.even_names().iter().map(|n| point[n].clone()).collect())
}

impl<'a> std::ops::Add<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> std::ops::Sub<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> std::ops::Mul<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_mul(rhs)
            .expect("ring mismatch in multiplication")
    }
}

impl std::ops::Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Writes a monomial without its coefficient, e.g. `x1^2*y1y3`.
pub fn render_mono(ring: &Ring, mono: &Mono) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (name, &e) in ring.even_names().iter().zip(&mono.even) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if mono.odd != 0 {
        parts.push(
            mono.odd_indices()
                .map(|k| ring.odd_names()[k].as_str())
                .collect(),
        );
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", render_mono(&self.ring, m))?;
            } else {
                write!(f, "{mag}*{}", render_mono(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPoly({self})")
    }
}
