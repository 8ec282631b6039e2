//! Exact linear algebra over a [`Field`]: incremental echelon forms on sparse
//! rows, kernels and span membership.

use std::collections::{BTreeMap, HashMap};

use crate::field::{Field, Scalar};

pub type SparseVec = BTreeMap<usize, Scalar>;

fn axpy(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    for (k, x) in w {
        let delta = c * x;
        let entry = v.entry(*k).or_insert_with(|| x.field().zero());
        *entry = &*entry + &delta;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

/// Row echelon basis built one vector at a time. Each stored row is monic
/// at its pivot and zero at every earlier pivot, so reducing in insertion
/// order yields a canonical residue.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseVec, Vec<Scalar>)>,
    pivots: HashMap<usize, usize>,
    tags: Option<usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    /// Tracks, for every stored row, its expression in the inserted vectors.
    pub fn with_tags(count: usize) -> Echelon {
        Echelon {
            tags: Some(count),
            ..Default::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tagged(&self, v: &mut SparseVec, tag: &mut [Scalar]) {
        for (p, row, rtag) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                let neg = -c;
                axpy(v, &neg, row);
                for (t, r) in tag.iter_mut().zip(rtag) {
                    *t = &*t + &(&neg * r);
                }
            }
        }
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, row, _) in &self.rows {
            if let Some(c) = out.get(p).cloned() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tagged(v, None).is_none()
    }

    /// Inserts the `index`-th vector of a tagged run. When it reduces to
    /// zero the returned combination of inserted vectors is a kernel element.
    pub fn insert_indexed(&mut self, v: SparseVec, index: usize) -> Option<Vec<Scalar>> {
        self.insert_tagged(v, Some(index))
    }

    fn insert_tagged(&mut self, mut v: SparseVec, index: Option<usize>) -> Option<Vec<Scalar>> {
        let field = v.values().next().map(|c| c.field());
        let mut tag: Vec<Scalar> = match (self.tags, index, field.or_else(|| self.field())) {
            (Some(n), Some(i), Some(f)) => {
                let mut t = vec![f.zero(); n];
                t[i] = f.one();
                t
            }
            _ => Vec::new(),
        };
        self.reduce_tagged(&mut v, &mut tag);
        let Some((&p, c)) = v.iter().next() else {
            return Some(tag);
        };
        let inv = c.inv();
        let v: SparseVec = v.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        let tag: Vec<Scalar> = tag.iter().map(|t| t * &inv).collect();
        // clear the new pivot from the older rows
        for (_, row, rtag) in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                let neg = -c;
                axpy(row, &neg, &v);
                for (t, r) in rtag.iter_mut().zip(&tag) {
                    *t = &*t + &(&neg * r);
                }
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push((p, v, tag));
        None
    }

    fn field(&self) -> Option<Field> {
        self.rows
            .first()
            .and_then(|(_, r, _)| r.values().next())
            .map(|c| c.field())
    }
}

/// Basis of `{ c : Σ c_i v_i = 0 }`.
pub fn kernel(vectors: &[SparseVec], field: Field) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::with_tags(vectors.len());
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.is_empty() {
            let mut t = vec![field.zero(); vectors.len()];
            t[i] = field.one();
            out.push(t);
            continue;
        }
        if let Some(t) = ech.insert_indexed(v.clone(), i) {
            out.push(t);
        }
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Null space of a dense matrix given by rows.
pub fn null_space(rows: &[Vec<Scalar>], ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    // columns as vectors; a kernel of the column family is the null space
    let cols: Vec<SparseVec> = (0..ncols)
        .map(|j| {
            rows.iter()
                .enumerate()
                .filter(|(_, r)| !r[j].is_zero())
                .map(|(i, r)| (i, r[j].clone()))
                .collect()
        })
        .collect();
    kernel(&cols, field)
}

pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v.clone());
    }
    ech.rank()
}
