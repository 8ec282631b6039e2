//! Harish-Chandra pairs `(G, V)` with `G ⊆ GL_N` cut out by polynomial
//! equations, and the group of `A`-points they determine.
//!
//! Coordinates on `GL_N` are `g11 .. gNN` and `d = det^{-1}`; the ideal of
//! `G` always contains `d * det - 1`.

#![allow(clippy::needless_range_loop)]

mod builtin;
mod group;

use std::fmt;
use std::sync::Arc;

pub use builtin::{
    gl11, gl1_bad, gl1_weight, gl2_std, sl2_trivial, trivial_group, unipotent,
    unipotent_from_model, unipotent_model,
};
pub use group::{Factor, GroupElem, HcElement, HcGroup, NormalizeStats, Strategy};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::groebner::SuperAlgebra;
use crate::linalg::null_space;
use crate::poly::{Parity, Ring, SuperPoly};
use crate::sdim::{krull_dim_of_basis, SuperDim};

/// A square matrix over the ground field.
pub type ScalarMat = Vec<Vec<Scalar>>;

pub fn scalar_identity(field: Field, n: usize) -> ScalarMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

pub fn scalar_zero(field: Field, n: usize) -> ScalarMat {
    vec![vec![field.zero(); n]; n]
}

pub fn is_zero_mat(m: &ScalarMat) -> bool {
    m.iter().flatten().all(Scalar::is_zero)
}

pub fn render_scalar_mat(m: &ScalarMat) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn render_poly_mat(m: &[Vec<SuperPoly>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub(crate) fn poly_mat_mul(
    a: &[Vec<SuperPoly>],
    b: &[Vec<SuperPoly>],
    ring: &Arc<Ring>,
) -> Vec<Vec<SuperPoly>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    b.iter()
                        .enumerate()
                        .fold(SuperPoly::zero(ring), |acc, (k, row)| {
                            &acc + &(&a[i][k] * &row[j])
                        })
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion; entries must commute.
pub(crate) fn poly_det(m: &[Vec<SuperPoly>], ring: &Arc<Ring>) -> SuperPoly {
    let n = m.len();
    if n == 0 {
        return SuperPoly::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = SuperPoly::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SuperPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &poly_det(&minor, ring);
        out = if j % 2 == 0 {
            &out + &term
        } else {
            &out - &term
        };
    }
    out
}

/// Adjugate, so that `m * adj(m) = det(m) * I`.
pub(crate) fn poly_adjugate(m: &[Vec<SuperPoly>], ring: &Arc<Ring>) -> Vec<Vec<SuperPoly>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![SuperPoly::one(ring)]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // cofactor C_{ji}
                    let minor: Vec<Vec<SuperPoly>> = m
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| *r != j)
                        .map(|(_, row)| {
                            row.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != i)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let d = poly_det(&minor, ring);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        -&d
                    }
                })
                .collect()
        })
        .collect()
}

/// An even matrix group `G ⊆ GL_N` given by equations in `g11 .. gNN, d`.
#[derive(Clone, Debug)]
pub struct EvenGroupSpec {
    n: usize,
    ring: Arc<Ring>,
    equations: Vec<SuperPoly>,
    coord: SuperAlgebra,
    jacobian: Vec<Vec<Scalar>>,
    lie_basis: Vec<ScalarMat>,
}

impl EvenGroupSpec {
    /// The coordinate ring `k[g11 .. gNN, d]` of `GL_N`.
    pub fn ring_for(n: usize, field: Field) -> Result<Arc<Ring>> {
        if n == 0 || n > 9 {
            return Err(AlgebraError::Shape(format!(
                "matrix size {n} is not in 1..=9"
            )));
        }
        let mut names: Vec<String> = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                names.push(format!("g{i}{j}"));
            }
        }
        names.push("d".to_string());
        Ring::new(&names, &[] as &[String], field)
    }

    pub fn new(ring: Arc<Ring>, equations: Vec<SuperPoly>) -> Result<EvenGroupSpec> {
        if ring.num_odd() != 0 || ring.num_even() < 2 {
            return Err(AlgebraError::Shape(
                "group coordinates must be g11 .. gNN, d".into(),
            ));
        }
        let n = ((ring.num_even() - 1) as f64).sqrt().round() as usize;
        if n * n + 1 != ring.num_even() {
            return Err(AlgebraError::Shape(
                "group coordinates must be g11 .. gNN, d".into(),
            ));
        }
        for e in &equations {
            if !Arc::ptr_eq(e.ring(), &ring) && **e.ring() != *ring {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let generic = generic_matrix(&ring, n);
        let d = SuperPoly::even_var(&ring, n * n);
        let unit = &(&d * &poly_det(&generic, &ring)) - &SuperPoly::one(&ring);
        let mut rels = equations.clone();
        rels.push(unit);
        let coord = SuperAlgebra::new("k[G]", ring.clone(), rels)?;
        let field = ring.field();
        let mut identity = vec![field.zero(); n * n + 1];
        for i in 0..n {
            identity[i * n + i] = field.one();
        }
        identity[n * n] = field.one();
        for e in &equations {
            if !e.evaluate_at(&identity).is_zero() {
                return Err(AlgebraError::NotInGroup(format!("identity: {e}")));
            }
        }
        let jacobian: Vec<Vec<Scalar>> = equations
            .iter()
            .map(|f| {
                let dd = f.d_even(n * n).evaluate_at(&identity);
                (0..n * n)
                    .map(|k| {
                        let mut v = f.d_even(k).evaluate_at(&identity);
                        if k / n == k % n {
                            v = &v - &dd;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let lie_basis = null_space(&jacobian, n * n, field)
            .into_iter()
            .map(|v| (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect())
            .collect();
        Ok(EvenGroupSpec {
            n,
            ring,
            equations,
            coord,
            jacobian,
            lie_basis,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn equations(&self) -> &[SuperPoly] {
        &self.equations
    }

    /// `k[G]` including `d * det - 1`.
    pub fn coordinate_algebra(&self) -> &SuperAlgebra {
        &self.coord
    }

    pub fn lie_basis(&self) -> &[ScalarMat] {
        &self.lie_basis
    }

    /// `x ∈ Lie(G)`: the linearized equations vanish on `x`.
    pub fn in_lie(&self, x: &ScalarMat) -> bool {
        let flat: Vec<&Scalar> = x.iter().flatten().collect();
        self.jacobian.iter().all(|row| {
            row.iter()
                .zip(&flat)
                .fold(self.field().zero(), |acc, (a, b)| &acc + &(a * *b))
                .is_zero()
        })
    }

    /// `Kdim k[G]`.
    pub fn dimension(&self) -> usize {
        krull_dim_of_basis(self.coord.basis(), self.ring.num_even())
            .expect("the identity is a point of G")
    }

    /// Evaluates every equation at `(m, d)` with entries in `target`,
    /// returning the first equation that does not vanish in `coeff`.
    pub(crate) fn failing_equation(
        &self,
        m: &[Vec<SuperPoly>],
        d: &SuperPoly,
        coeff: &SuperAlgebra,
    ) -> Option<String> {
        let images = point_images(m, d);
        self.equations.iter().find_map(|e| {
            let v = coeff.normal_form(&e.substitute(&images, coeff.ring()));
            (!v.is_zero()).then(|| format!("{e} evaluates to {v}"))
        })
    }
}

pub(crate) fn point_images(m: &[Vec<SuperPoly>], d: &SuperPoly) -> Vec<SuperPoly> {
    let mut images: Vec<SuperPoly> = m.iter().flatten().cloned().collect();
    images.push(d.clone());
    images
}

fn generic_matrix(ring: &Arc<Ring>, n: usize) -> Vec<Vec<SuperPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| SuperPoly::even_var(ring, i * n + j))
                .collect()
        })
        .collect()
}

/// `Lie(G)` as the kernel of the Jacobian of the equations at the identity.
pub fn lie_algebra_of(g: &EvenGroupSpec) -> &[ScalarMat] {
    g.lie_basis()
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub checks: Vec<AxiomCheck>,
}

impl PairReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for PairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{}: {}", c.axiom, if c.ok { "ok" } else { "FAILED" })?;
            if let Some(w) = &c.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A Harish-Chandra pair with `V = k^t`, `ρ` given by polynomial entries in
/// the coordinates of `GL_N`, and the bracket by its values on basis pairs.
#[derive(Clone, Debug)]
pub struct HcPair {
    pub name: String,
    pub group: EvenGroupSpec,
    pub t: usize,
    pub rho: Vec<Vec<SuperPoly>>,
    /// `dρ` on the basis of `Lie(G)`, each a `t × t` matrix.
    pub drho: Vec<ScalarMat>,
    pub bracket: Vec<Vec<ScalarMat>>,
    /// Sample `k`-points of `G` used to seed random elements.
    pub k_points: Vec<ScalarMat>,
}

impl HcPair {
    /// Builds a pair with `dρ` taken as the linearization of `ρ`.
    pub fn new(
        name: impl Into<String>,
        group: EvenGroupSpec,
        rho: Vec<Vec<SuperPoly>>,
        bracket: Vec<Vec<ScalarMat>>,
    ) -> Result<HcPair> {
        let t = rho.len();
        let n = group.size();
        if rho.iter().any(|r| r.len() != t) {
            return Err(AlgebraError::Shape("rho must be square".into()));
        }
        if bracket.len() != t || bracket.iter().any(|r| r.len() != t) {
            return Err(AlgebraError::Shape(format!("bracket must be {t} x {t}")));
        }
        if bracket
            .iter()
            .flatten()
            .any(|m| m.len() != n || m.iter().any(|r| r.len() != n))
        {
            return Err(AlgebraError::Shape(format!(
                "bracket values must be {n} x {n} matrices"
            )));
        }
        for p in rho.iter().flatten() {
            if **p.ring() != **group.ring() {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let rho: Vec<Vec<SuperPoly>> = rho
            .into_iter()
            .map(|r| r.into_iter().map(|p| p.with_ring(group.ring())).collect())
            .collect();
        let mut pair = HcPair {
            name: name.into(),
            group,
            t,
            rho,
            drho: Vec::new(),
            bracket,
            k_points: Vec::new(),
        };
        pair.drho = pair
            .group
            .lie_basis()
            .iter()
            .map(|x| pair.linearize(x))
            .collect();
        pair.k_points = vec![scalar_identity(pair.field(), n)];
        Ok(pair)
    }

    pub fn with_k_points(mut self, points: Vec<ScalarMat>) -> Result<HcPair> {
        let field = self.field();
        let n = self.group.size();
        let ring = self.group.ring().clone();
        for p in &points {
            let m: Vec<Vec<SuperPoly>> = p
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| SuperPoly::constant(&ring, c.clone()))
                        .collect()
                })
                .collect();
            let det = poly_det(&m, &ring).constant_term();
            if det.is_zero() {
                return Err(AlgebraError::NotInvertible(render_scalar_mat(p)));
            }
            let d = SuperPoly::constant(&ring, det.inv());
            let free = SuperAlgebra::free("k", ring.clone());
            if let Some(w) = self.group.failing_equation(&m, &d, &free) {
                return Err(AlgebraError::NotInGroup(w));
            }
        }
        let mut all = vec![scalar_identity(field, n)];
        all.extend(points);
        self.k_points = all;
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.group.field()
    }

    /// `dρ(x) = Σ x_ab ∂ρ/∂g_ab (1) - tr(x) ∂ρ/∂d (1)`.
    pub fn linearize(&self, x: &ScalarMat) -> ScalarMat {
        let n = self.group.size();
        let field = self.field();
        let mut identity = vec![field.zero(); n * n + 1];
        for i in 0..n {
            identity[i * n + i] = field.one();
        }
        identity[n * n] = field.one();
        let trace = (0..n).fold(field.zero(), |acc, i| &acc + &x[i][i]);
        self.rho
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let mut v = &-&trace * &p.d_even(n * n).evaluate_at(&identity);
                        for a in 0..n {
                            for b in 0..n {
                                if !x[a][b].is_zero() {
                                    v = &v
                                        + &(&x[a][b] * &p.d_even(a * n + b).evaluate_at(&identity));
                                }
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn validate(&self) -> PairReport {
        let checks = vec![
            self.check_rho_unital(),
            self.check_symmetry(),
            self.check_bracket_in_lie(),
            self.check_equivariance(),
            self.check_drho(),
            self.check_cubic(),
        ];
        PairReport { checks }
    }

    fn check_rho_unital(&self) -> AxiomCheck {
        let n = self.group.size();
        let field = self.field();
        let mut identity = vec![field.zero(); n * n + 1];
        for i in 0..n {
            identity[i * n + i] = field.one();
        }
        identity[n * n] = field.one();
        let witness = self.rho.iter().enumerate().find_map(|(i, row)| {
            row.iter().enumerate().find_map(|(j, p)| {
                let v = p.evaluate_at(&identity);
                let want = if i == j { field.one() } else { field.zero() };
                (v != want).then(|| format!("rho(1)[{}][{}] = {v}", i + 1, j + 1))
            })
        });
        AxiomCheck {
            axiom: "rho(1) = 1",
            ok: witness.is_none(),
            witness,
        }
    }

    fn check_symmetry(&self) -> AxiomCheck {
        let mut witness = None;
        'outer: for i in 0..self.t {
            for j in 0..i {
                if self.bracket[i][j] != self.bracket[j][i] {
                    witness = Some(format!(
                        "[v{}, v{}] != [v{}, v{}]",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ));
                    break 'outer;
                }
            }
        }
        AxiomCheck {
            axiom: "symmetric bracket",
            ok: witness.is_none(),
            witness,
        }
    }

    fn check_bracket_in_lie(&self) -> AxiomCheck {
        let witness = (0..self.t)
            .flat_map(|i| (0..self.t).map(move |j| (i, j)))
            .find_map(|(i, j)| {
                (!self.group.in_lie(&self.bracket[i][j])).then(|| {
                    format!(
                        "[v{}, v{}] = {} is not in Lie(G)",
                        i + 1,
                        j + 1,
                        render_scalar_mat(&self.bracket[i][j])
                    )
                })
            });
        AxiomCheck {
            axiom: "bracket values in Lie(G)",
            ok: witness.is_none(),
            witness,
        }
    }

    /// `Σ ρ_ki ρ_lj [v_k, v_l] = g [v_i, v_j] g^{-1}` modulo the ideal of `G`.
    fn check_equivariance(&self) -> AxiomCheck {
        let ring = self.group.ring();
        let n = self.group.size();
        let coord = self.group.coordinate_algebra();
        let g = generic_matrix(ring, n);
        let d = SuperPoly::even_var(ring, n * n);
        let ginv: Vec<Vec<SuperPoly>> = poly_adjugate(&g, ring)
            .into_iter()
            .map(|r| r.into_iter().map(|p| &p * &d).collect())
            .collect();
        let lift = |m: &ScalarMat| -> Vec<Vec<SuperPoly>> {
            m.iter()
                .map(|r| {
                    r.iter()
                        .map(|c| SuperPoly::constant(ring, c.clone()))
                        .collect()
                })
                .collect()
        };
        let mut witness = None;
        'outer: for i in 0..self.t {
            for j in 0..self.t {
                let ad = poly_mat_mul(
                    &poly_mat_mul(&g, &lift(&self.bracket[i][j]), ring),
                    &ginv,
                    ring,
                );
                for a in 0..n {
                    for b in 0..n {
                        let mut lhs = SuperPoly::zero(ring);
                        for k in 0..self.t {
                            for l in 0..self.t {
                                let c = &self.bracket[k][l][a][b];
                                if c.is_zero() {
                                    continue;
                                }
                                lhs = &lhs + (&(&self.rho[k][i] * &self.rho[l][j]).scale(c));
                            }
                        }
                        let diff = coord.normal_form(&(&lhs - &ad[a][b]));
                        if !diff.is_zero() {
                            witness = Some(format!(
                                "entry ({}, {}) for (v{}, v{}): {} mod I(G)",
                                a + 1,
                                b + 1,
                                i + 1,
                                j + 1,
                                diff
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        AxiomCheck {
            axiom: "equivariance",
            ok: witness.is_none(),
            witness,
        }
    }

    fn check_drho(&self) -> AxiomCheck {
        let witness = self
            .group
            .lie_basis()
            .iter()
            .zip(&self.drho)
            .enumerate()
            .find_map(|(k, (x, given))| {
                let lin = self.linearize(x);
                (&lin != given).then(|| {
                    format!(
                        "basis element {}: drho = {}, linearization = {}",
                        k + 1,
                        render_scalar_mat(given),
                        render_scalar_mat(&lin)
                    )
                })
            });
        let shape = self.drho.len() == self.group.lie_basis().len();
        AxiomCheck {
            axiom: "drho linearizes rho",
            ok: shape && witness.is_none(),
            witness: if shape {
                witness
            } else {
                Some("drho has the wrong number of entries".into())
            },
        }
    }

    /// `[v, v] · v = 0` for `v = Σ t_i v_i` with indeterminate `t_i`.
    fn check_cubic(&self) -> AxiomCheck {
        let t = self.t;
        let field = self.field();
        let acts: Vec<Vec<ScalarMat>> = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| self.linearize(&self.bracket[i][j]))
                    .collect()
            })
            .collect();
        let mut witness = None;
        'outer: for i in 0..t {
            for j in i..t {
                for k in j..t {
                    let mut perms = vec![
                        [i, j, k],
                        [i, k, j],
                        [j, i, k],
                        [j, k, i],
                        [k, i, j],
                        [k, j, i],
                    ];
                    perms.sort();
                    perms.dedup();
                    for l in 0..t {
                        let coeff = perms
                            .iter()
                            .fold(field.zero(), |acc, p| &acc + &acts[p[0]][p[1]][l][p[2]]);
                        if !coeff.is_zero() {
                            witness = Some(format!(
                                "coefficient of t{}*t{}*t{} in component {} is {}",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                coeff
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        AxiomCheck {
            axiom: "[v,v]v = 0",
            ok: witness.is_none(),
            witness,
        }
    }

    pub fn is_graded(&self) -> bool {
        self.bracket.iter().flatten().all(is_zero_mat)
    }

    /// The same pair with the bracket replaced by zero.
    pub fn gr_pair(&self) -> HcPair {
        let n = self.group.size();
        let mut out = self.clone();
        out.name = format!("gr({})", self.name);
        out.bracket = vec![vec![scalar_zero(self.field(), n); self.t]; self.t];
        out
    }

    /// `(Kdim k[G] | dim V)`.
    pub fn sdim(&self) -> SuperDim {
        SuperDim::new(self.group.dimension(), self.t)
    }

    pub fn rho_parity_ok(&self) -> bool {
        self.rho
            .iter()
            .flatten()
            .all(|p| p.is_homogeneous(Parity::Even))
    }
}

pub fn validate_hc_pair(p: &HcPair) -> PairReport {
    p.validate()
}

pub fn is_graded_pair(p: &HcPair) -> bool {
    p.is_graded()
}

pub fn gr_pair(p: &HcPair) -> HcPair {
    p.gr_pair()
}

pub fn sdim_of_pair(p: &HcPair) -> SuperDim {
    p.sdim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_algebras() {
        let f = Field::Rational;
        let r = EvenGroupSpec::ring_for(2, f).unwrap();
        let g = |n: &str| r.generator(n).unwrap();
        let det = &(&g("g11") * &g("g22")) - &(&g("g12") * &g("g21"));
        let sl2 = EvenGroupSpec::new(r.clone(), vec![&det - &SuperPoly::one(&r)]).unwrap();
        assert_eq!(sl2.lie_basis().len(), 3);
        let gl2 = EvenGroupSpec::new(r.clone(), vec![]).unwrap();
        assert_eq!(gl2.lie_basis().len(), 4);
        let torus = EvenGroupSpec::new(r.clone(), vec![g("g12"), g("g21")]).unwrap();
        assert_eq!(torus.lie_basis().len(), 2);
        for x in torus.lie_basis() {
            assert!(x[0][1].is_zero() && x[1][0].is_zero());
        }
        assert_eq!(sl2.dimension(), 3);
        assert_eq!(torus.dimension(), 2);
    }

    #[test]
    fn identity_must_lie_in_group() {
        let r = EvenGroupSpec::ring_for(1, Field::Rational).unwrap();
        let bad = r.generator("g11").unwrap();
        assert!(matches!(
            EvenGroupSpec::new(r, vec![bad]),
            Err(AlgebraError::NotInGroup(_))
        ));
    }

    #[test]
    fn validation_examples() {
        assert!(unipotent(Field::Rational).validate().is_valid());
        let bad = gl1_bad(Field::Rational).validate();
        assert!(!bad.is_valid());
        let failed: Vec<&str> = bad.failed().map(|c| c.axiom).collect();
        assert!(failed.contains(&"equivariance"));
        let w = bad
            .checks
            .iter()
            .find(|c| c.axiom == "equivariance")
            .unwrap()
            .witness
            .clone()
            .unwrap();
        assert!(w.contains("g11^2"), "{w}");
        assert!(gl1_weight(Field::Rational, 1).validate().is_valid());
        assert!(gl11(Field::Rational).validate().is_valid());
        assert!(gl2_std(Field::Rational).validate().is_valid());
    }

    #[test]
    fn nonzero_cubic_term_is_caught() {
        // GL_1 on two copies of the weight-1 module with [v1, v1] = 1
        let f = Field::Rational;
        let p = gl1_weight(f, 2);
        let mut bad = p.clone();
        bad.bracket[0][1] = vec![vec![f.one()]];
        bad.bracket[1][0] = vec![vec![f.one()]];
        let rep = bad.validate();
        assert!(rep.failed().any(|c| c.axiom == "[v,v]v = 0"));
    }

    #[test]
    fn graded_and_dimensions() {
        let f = Field::Rational;
        assert!(!unipotent(f).is_graded());
        assert!(gl1_weight(f, 1).is_graded());
        let g = unipotent(f).gr_pair();
        assert!(g.is_graded() && g.validate().is_valid());
        assert_eq!(gl1_weight(f, 2).sdim(), SuperDim::new(1, 2));
        assert_eq!(sl2_trivial(f, 3).sdim(), SuperDim::new(3, 3));
        assert_eq!(trivial_group(f).sdim(), SuperDim::new(0, 0));
    }
}
