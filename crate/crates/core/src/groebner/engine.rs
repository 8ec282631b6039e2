//! Buchberger completion for submodules of a free `k[x]`-module.
//!
//! A basis element of the free module is labelled by a `u64` position. For
//! superideals the position is the odd set `S` of the basis vector `e_S`, so a
//! module term `x^a e_S` is exactly the super-monomial `x^a y_S` and no
//! conversion is needed. Bit 63 of a position marks a second copy of the
//! module; every order compares that bit first, which makes it an
//! elimination order for kernel computations.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::field::Scalar;
use crate::poly::{grevlex, odd_cmp, Mono};

pub(crate) const BLOCK_BIT: u64 = 1 << 63;

/// A module element as terms sorted by decreasing order.
pub type Vector = Vec<(Mono, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Grevlex on the even part, then the odd set (more factors is larger).
    Standard,
    /// Fewer odd factors is larger; ties broken as in `Standard`. Leading
    /// terms then lie in the lowest odd-weight component.
    LowOddWeight,
}

impl TermOrder {
    pub fn cmp(self, a: &Mono, b: &Mono) -> Ordering {
        let (ba, bb) = (a.odd & BLOCK_BIT, b.odd & BLOCK_BIT);
        if ba != bb {
            return ba.cmp(&bb);
        }
        let (sa, sb) = (a.odd & !BLOCK_BIT, b.odd & !BLOCK_BIT);
        match self {
            TermOrder::Standard => grevlex(&a.even, &b.even).then_with(|| odd_cmp(sa, sb)),
            TermOrder::LowOddWeight => sb
                .count_ones()
                .cmp(&sa.count_ones())
                .then_with(|| grevlex(&a.even, &b.even))
                .then_with(|| odd_cmp(sa, sb)),
        }
    }

    pub fn sort(self, mut v: Vector) -> Vector {
        v.sort_by(|a, b| self.cmp(&b.0, &a.0));
        v
    }
}

fn shift(m: &Mono, by: &[u32]) -> Mono {
    Mono {
        even: m.even.iter().zip(by).map(|(a, b)| a + b).collect(),
        odd: m.odd,
    }
}

/// `f - c * x^by * g`, keeping the order.
fn sub_scaled(
    order: TermOrder,
    f: &[(Mono, Scalar)],
    c: &Scalar,
    by: &[u32],
    g: &[(Mono, Scalar)],
) -> Vector {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        let gm = g.get(j).map(|(m, _)| shift(m, by));
        let ord = match (f.get(i), &gm) {
            (Some(a), Some(b)) => order.cmp(&a.0, b),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &f[i].1 - &(c * &g[j].1);
                if !v.is_zero() {
                    out.push((f[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn monic(v: Vector) -> Vector {
    match v.first() {
        Some((_, c)) if !c.is_one() => {
            let inv = c.inv();
            v.into_iter().map(|(m, a)| (m, &a * &inv)).collect()
        }
        _ => v,
    }
}

fn exp_diff(big: &Mono, small: &Mono) -> Vec<u32> {
    big.even
        .iter()
        .zip(&small.even)
        .map(|(a, b)| a - b)
        .collect()
}

fn lcm(a: &Mono, b: &Mono) -> Mono {
    Mono {
        even: a.even.iter().zip(&b.even).map(|(x, y)| *x.max(y)).collect(),
        odd: a.odd,
    }
}

/// Fully reduces `f` modulo `basis`, which must be sorted by `order` and
/// have nonzero elements.
pub fn reduce(order: TermOrder, f: &[(Mono, Scalar)], basis: &[Vector]) -> Vector {
    let mut rem: Vector = Vec::new();
    let mut p: Vector = f.to_vec();
    while !p.is_empty() {
        let (lm, lc) = p[0].clone();
        let hit = basis.iter().find(|g| g[0].0.divides_in_module(&lm));
        match hit {
            Some(g) => {
                let c = &lc / &g[0].1;
                let by = exp_diff(&lm, &g[0].0);
                p = sub_scaled(order, &p, &c, &by, g);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    rem
}

/// Unique reduced Gröbner basis of the module generated by `gens`.
pub fn groebner(order: TermOrder, gens: impl IntoIterator<Item = Vector>) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();

    let mut input: Vec<Vector> = gens
        .into_iter()
        .map(|v| order.sort(v))
        .filter(|v| !v.is_empty())
        .collect();
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    let add = |basis: &mut Vec<Vector>, pairs: &mut BTreeSet<(usize, usize)>, v: Vector| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if g[0].0.odd == v[0].0.odd {
                pairs.insert((i, k));
            }
        }
        basis.push(v);
    };

    for v in input {
        let r = reduce(order, &v, &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, monic(r));
        }
    }

    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
        let la = lcm(&basis[a.0][0].0, &basis[a.1][0].0);
        let lb = lcm(&basis[b.0][0].0, &basis[b.1][0].0);
        la.total_degree()
            .cmp(&lb.total_degree())
            .then_with(|| order.cmp(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pairs.remove(&(i, j));
        let l = lcm(&basis[i][0].0, &basis[j][0].0);
        if chain_skip(&basis, &pairs, i, j, &l) {
            continue;
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        let left: Vector = {
            let by = exp_diff(&l, &fi[0].0);
            let inv = fi[0].1.inv();
            fi.iter().map(|(m, c)| (shift(m, &by), c * &inv)).collect()
        };
        let by = exp_diff(&l, &fj[0].0);
        let c = fj[0].1.inv();
        let s = sub_scaled(order, &left, &c, &by, fj);
        let r = reduce(order, &s, &basis);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, monic(r));
        }
    }

    interreduce(order, basis)
}

/// Buchberger's chain criterion: the pair is redundant if some third leading
/// term divides the lcm and both companion pairs were already treated.
fn chain_skip(
    basis: &[Vector],
    pending: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    l: &Mono,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, g)| {
        k != i
            && k != j
            && g[0].0.divides_in_module(l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn interreduce(order: TermOrder, basis: Vec<Vector>) -> Vec<Vector> {
    // drop elements whose leading term is divisible by another leading term
    let mut minimal: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h[0].0.divides_in_module(&g[0].0) && (h[0].0 != g[0].0 || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Vector> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vector> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let head = vec![minimal[i][0].clone()];
        let tail = reduce(order, &minimal[i][1..], &others);
        let mut v = head;
        v.extend(tail);
        out.push(monic(v));
    }
    out.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    out
}
