//! Actions of the odd unipotent group `G_a^-` on affine superschemes.
//!
//! An action on `SSpec(A)` is an odd superderivation `φ` with `φ^2 = 0`
//! (coaction `f ↦ 1 ⊗ f + z ⊗ φ(f)`). The orbit of a rational point with
//! even maximal ideal `𝔪` is cut out by `I = 𝔪 ⊕ φ^{-1}(𝔪)`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::groebner::{ideal_equal, PointIdeal, SuperAlgebra, SuperIdeal};
use crate::poly::{Mono, Parity, Ring, SuperPoly};
use crate::sdim::{ksdim, KsdimOptions, SuperDim};

/// A validated odd superderivation with square zero.
#[derive(Clone, Debug)]
pub struct OddAction {
    algebra: SuperAlgebra,
    images: Vec<SuperPoly>,
}

impl OddAction {
    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    /// Generator images, even generators first.
    pub fn images(&self) -> &[SuperPoly] {
        &self.images
    }

    /// `φ(f)` reduced modulo the relations.
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        let d = f
            .apply_derivation(&self.images, Parity::Odd)
            .expect("validated images");
        self.algebra.normal_form(&d)
    }
}

/// Checks parity, `φ(J) ⊆ J` and `φ^2 = 0` on generators.
pub fn validate_action(a: &SuperAlgebra, images: Vec<SuperPoly>) -> Result<OddAction> {
    let ring = a.ring();
    if images.len() != ring.num_even() + ring.num_odd() {
        return Err(AlgebraError::Shape(format!(
            "derivation needs {} images, got {}",
            ring.num_even() + ring.num_odd(),
            images.len()
        )));
    }
    // apply_derivation checks the parity bookkeeping
    let probe = SuperPoly::one(ring);
    probe.apply_derivation(&images, Parity::Odd)?;
    let act = OddAction {
        algebra: a.clone(),
        images,
    };
    for r in a.relations() {
        let img = act.apply(r);
        if !img.is_zero() {
            return Err(AlgebraError::InvalidAction(format!(
                "phi does not preserve the relations: phi({r}) = {img} is not in the ideal"
            )));
        }
    }
    for g in ring.generators() {
        let twice = act.apply(&act.apply(&g));
        if !twice.is_zero() {
            return Err(AlgebraError::InvalidAction(format!(
                "phi^2({g}) = {twice} is not zero"
            )));
        }
    }
    Ok(act)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stabilizer {
    Full,
    Trivial,
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stabilizer::Full => "full",
            Stabilizer::Trivial => "trivial",
        })
    }
}

impl Stabilizer {
    pub fn sdim(self) -> SuperDim {
        match self {
            Stabilizer::Full => SuperDim::new(0, 1),
            Stabilizer::Trivial => SuperDim::new(0, 0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitResult {
    pub ideal: SuperIdeal,
    pub generators: Vec<SuperPoly>,
    pub quotient: SuperAlgebra,
    pub stabilizer: Stabilizer,
    pub sdim: SuperDim,
    pub lambdas: Vec<Scalar>,
}

/// Square-free odd monomials of odd degree that survive in `A`: module
/// generators of `A_1` over `A_0`.
pub fn odd_module_generators(a: &SuperAlgebra) -> Vec<SuperPoly> {
    let ring = a.ring();
    let n = ring.num_odd();
    let mut masks: Vec<u64> = (1u64..(1u64 << n))
        .filter(|s| s.count_ones() % 2 == 1)
        .collect();
    masks.sort_by_key(|s| (s.count_ones(), *s));
    masks
        .into_iter()
        .map(|s| {
            SuperPoly::monomial(
                ring,
                Mono {
                    even: vec![0; ring.num_even()],
                    odd: s,
                },
                ring.field().one(),
            )
        })
        .filter(|w| !a.is_zero(w))
        .collect()
}

/// `λ_i = φ(w_i)(x)`.
pub fn orbit_lambdas(act: &OddAction, pt: &PointIdeal) -> Vec<Scalar> {
    odd_module_generators(&act.algebra)
        .iter()
        .map(|w| act.apply(w).evaluate_at(pt.values()))
        .collect()
}

pub fn stabilizer_type(act: &OddAction, pt: &PointIdeal) -> Stabilizer {
    if orbit_lambdas(act, pt).iter().all(Scalar::is_zero) {
        Stabilizer::Full
    } else {
        Stabilizer::Trivial
    }
}

pub fn orbit_ideal(act: &OddAction, pt: &PointIdeal) -> Result<OrbitResult> {
    let lambdas = orbit_lambdas(act, pt);
    let pivot = lambdas.iter().position(|l| !l.is_zero());
    orbit_with_pivot(act, pt, pivot)
}

/// All admissible pivots, for checking that the ideal does not depend on
/// the choice.
pub fn admissible_pivots(act: &OddAction, pt: &PointIdeal) -> Vec<usize> {
    orbit_lambdas(act, pt)
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_zero())
        .map(|(i, _)| i)
        .collect()
}

pub fn orbit_with_pivot(
    act: &OddAction,
    pt: &PointIdeal,
    pivot: Option<usize>,
) -> Result<OrbitResult> {
    let a = &act.algebra;
    let ring = a.ring();
    let ws = odd_module_generators(a);
    let lambdas: Vec<Scalar> = ws
        .iter()
        .map(|w| act.apply(w).evaluate_at(pt.values()))
        .collect();
    let (mut gens, stabilizer) = match pivot {
        None => {
            if lambdas.iter().any(|l| !l.is_zero()) {
                return Err(AlgebraError::InvalidAction(
                    "a pivot is required when some lambda is nonzero".into(),
                ));
            }
            (pt.maximal_generators(ring), Stabilizer::Full)
        }
        Some(j) => {
            if lambdas.get(j).is_none_or(Scalar::is_zero) {
                return Err(AlgebraError::InvalidAction(format!(
                    "pivot {j} is not admissible"
                )));
            }
            let mut g = pt.even_maximal_generators(ring);
            for (i, w) in ws.iter().enumerate() {
                if i != j {
                    let c = &lambdas[i] / &lambdas[j];
                    g.push(w - &ws[j].scale(&c));
                }
            }
            for m in pt.linear_generators(ring) {
                g.push(&m * &ws[j]);
            }
            (g, Stabilizer::Trivial)
        }
    };
    gens.retain(|g| !g.is_zero());
    let ideal = a.ideal(&gens);
    for g in &gens {
        let img = act.apply(g);
        if !ideal.contains(&img) {
            return Err(AlgebraError::InvalidAction(format!(
                "orbit ideal is not phi-stable: phi({g}) = {img}"
            )));
        }
    }
    let generators = ideal.minimal_generators(a);
    let quotient = a.quotient(format!("{}/I", a.name()), &gens)?;
    let sdim = ksdim(&quotient, &KsdimOptions::default())?.dim;
    Ok(OrbitResult {
        ideal,
        generators,
        quotient,
        stabilizer,
        sdim,
        lambdas,
    })
}

/// `(gx)(f) = x(f) + s x(φ(f))` over `Λ(s)`: the right side, extended from
/// generators, is an algebra morphism `A -> Λ(s)` that agrees with the
/// formula on every monomial up to `degree`.
pub fn check_star(act: &OddAction, pt: &PointIdeal, degree: u32) -> Result<bool> {
    let a = &act.algebra;
    let ring = a.ring();
    let target_ring = Ring::new(&[] as &[&str], &["s"], ring.field())?;
    let target = SuperAlgebra::free("Λ(s)", target_ring.clone());
    let s = SuperPoly::odd_var(&target_ring, 0);
    let formula = |f: &SuperPoly| -> SuperPoly {
        let base = SuperPoly::constant(&target_ring, f.evaluate_at(pt.values()));
        let tail = s.scale(&act.apply(f).evaluate_at(pt.values()));
        &base + &tail
    };
    let images: Vec<SuperPoly> = ring.generators().iter().map(&formula).collect();
    for r in a.relations() {
        if !r.substitute(&images, &target_ring).is_zero() {
            return Ok(false);
        }
    }
    for mono in crate::oracle::monomials_up_to(ring, degree) {
        let f = SuperPoly::monomial(ring, mono, ring.field().one());
        if target.normal_form(&f.substitute(&images, &target_ring)) != formula(&f) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct PointReport {
    pub point: String,
    pub ideal: Vec<String>,
    pub stabilizer: Stabilizer,
    pub orbit_sdim: SuperDim,
    pub stabilizer_sdim: SuperDim,
    /// The orbit is the closed subscheme defined by an ideal.
    pub closed: bool,
    pub phi_stable: bool,
    pub identity_holds: bool,
    pub star_holds: bool,
    pub pivot_independent: bool,
}

impl PointReport {
    pub fn ok(&self) -> bool {
        self.closed
            && self.phi_stable
            && self.identity_holds
            && self.star_holds
            && self.pivot_independent
    }
}

pub const GROUP_SDIM: SuperDim = SuperDim { even: 0, odd: 1 };

pub fn verify_orbit_theorems(act: &OddAction, pts: &[PointIdeal]) -> Result<Vec<PointReport>> {
    let ring = act.algebra.ring();
    pts.iter()
        .map(|pt| {
            let res = orbit_ideal(act, pt)?;
            let pivot_independent = admissible_pivots(act, pt).into_iter().all(|j| {
                orbit_with_pivot(act, pt, Some(j)).is_ok_and(|o| ideal_equal(&o.ideal, &res.ideal))
            });
            let stab = res.stabilizer.sdim();
            Ok(PointReport {
                point: pt.render(ring),
                ideal: res.generators.iter().map(|g| g.to_string()).collect(),
                stabilizer: res.stabilizer,
                orbit_sdim: res.sdim,
                stabilizer_sdim: stab,
                closed: true,
                phi_stable: true,
                identity_holds: GROUP_SDIM.checked_sub(stab) == Some(res.sdim),
                star_holds: check_star(act, pt, 4)?,
                pivot_independent,
            })
        })
        .collect()
}
