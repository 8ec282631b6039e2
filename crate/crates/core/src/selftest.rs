//! Deterministic end-to-end checks over the bundled corpus.
//!
//! Each criterion returns the number of checks it ran, the failures it saw
//! and a few lines of detail. Nothing time-dependent enters the report, so
//! two runs with the same seed serialize identically.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus;
use crate::exec::Exec;
use crate::field::Field;
use crate::groebner::{check_mono_necessary, ideal_equal, Morphism, SuperAlgebra};
use crate::hcgroup::{
    gl1_weight, gl2_std, is_zero_mat, sl2_trivial, trivial_group, unipotent_from_model,
    unipotent_model, HcGroup, HcPair,
};
use crate::oracle::{self, monomials_up_to, TruncatedIdeal};
use crate::orbits::{orbit_ideal, verify_orbit_theorems, Stabilizer};
use crate::poly::{Mono, Parity, Ring, SuperPoly};
use crate::sdim::{
    bar, gr_presentation, gr_slices_agree, is_odd_weight_homogeneous, ksdim, verify_cover,
    KsdimOptions, SuperDim,
};

pub const CRITERIA: &[(u8, &str)] = &[
    (1, "free algebra super-dimension"),
    (2, "corpus Ksdim with certificates"),
    (3, "normal form agrees with the linear-algebra oracle"),
    (4, "Ksdim is local on covers"),
    (5, "gr presentation"),
    (6, "Harish-Chandra group axioms"),
    (7, "graded criterion"),
    (8, "orbit theorems"),
    (9, "monomorphism necessary condition"),
];

#[derive(Clone, Copy, Debug, Default)]
pub struct Config {
    pub seed: u64,
    pub exec: Exec,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    details: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }
}

/// Runs criteria `1..=9`.
pub fn run(cfg: &Config) -> Report {
    let ids: Vec<u8> = CRITERIA.iter().map(|(id, _)| *id).collect();
    // the criteria run side by side; each one is sequential inside
    let inner = Config {
        exec: Exec::Sequential,
        ..*cfg
    };
    let criteria = cfg.exec.map(&ids, |&id| run_criterion(id, &inner));
    Report {
        seed: cfg.seed,
        criteria,
    }
}

pub fn run_criterion(id: u8, cfg: &Config) -> CriterionReport {
    let title = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| t.to_string())
        .unwrap_or_default();
    let mut t = Tally::default();
    match id {
        1 => free_algebras(cfg, &mut t),
        2 => corpus_ksdim(cfg, &mut t),
        3 => oracle_equivalence(cfg, &mut t),
        4 => covers(cfg, &mut t),
        5 => gr(&mut t),
        6 => group_axioms(cfg, &mut t),
        7 => graded(&mut t),
        8 => orbits(&mut t),
        9 => mono(&mut t),
        _ => t.fail(format!("unknown criterion {id}")),
    }
    CriterionReport {
        id,
        title,
        passed: t.failures.is_empty() && t.checks > 0,
        checks: t.checks,
        failures: t.failures,
        details: t.details,
    }
}

fn opts(cfg: &Config) -> KsdimOptions {
    KsdimOptions {
        seed: cfg.seed,
        exec: cfg.exec,
        ..Default::default()
    }
}

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

fn free_algebras(cfg: &Config, t: &mut Tally) {
    for m in 1..=3 {
        for n in 1..=3 {
            let ring =
                Ring::new(&names("x", m), &names("y", n), Field::Rational).expect("small ring");
            let a = SuperAlgebra::free(format!("free{m}{n}"), ring);
            match ksdim(&a, &opts(cfg)) {
                Ok(k) => {
                    t.check(k.dim == SuperDim::new(m, n), || {
                        format!("k[{m}|{n}]: got {}", k.dim)
                    });
                    t.note(format!("k[x1..x{m} | y1..y{n}]: Ksdim = {}", k.dim));
                }
                Err(e) => t.fail(format!("k[{m}|{n}]: {e}")),
            }
        }
    }
}

fn product(a: &SuperAlgebra, ys: &[SuperPoly]) -> SuperPoly {
    ys.iter().fold(SuperPoly::one(a.ring()), |acc, y| &acc * y)
}

fn corpus_ksdim(cfg: &Config, t: &mut Tally) {
    const D: u32 = 6;
    for (file, want) in corpus::ksdim_expectations() {
        let a = corpus::algebra(file);
        let k = match ksdim(&a, &opts(cfg)) {
            Ok(k) => k,
            Err(e) => return t.fail(format!("{file}: {e}")),
        };
        t.check(k.dim == want, || {
            format!("{file}: Ksdim {} != {want}", k.dim)
        });
        let cert = &k.certificate;
        t.check(cert.elements.len() == want.odd, || {
            format!("{file}: certificate has {} elements", cert.elements.len())
        });
        t.check(cert.even_dim_witness == want.even, || {
            format!("{file}: witness {}", cert.even_dim_witness)
        });

        // the oracle never sees a Gröbner basis
        let b = bar(&a);
        let kd = oracle::krull_dim(b.ring(), b.relations(), D);
        t.check(kd == Some(want.even), || {
            format!("{file}: oracle Kdim(A_0) = {kd:?}")
        });

        let p = product(&a, &cert.elements);
        for s in oracle::annihilator_space(&p, a.relations(), 4) {
            t.check(cert.annihilator.contains(&s), || {
                format!("{file}: oracle annihilator element {s} missing")
            });
        }
        for g in cert
            .annihilator
            .basis_polys()
            .iter()
            .filter(|g| g.total_degree() <= 4)
        {
            let gp = g * &p;
            let trunc = TruncatedIdeal::new(a.ring(), a.relations(), gp.total_degree());
            t.check(gp.is_zero() || trunc.contains(&gp) == Some(true), || {
                format!("{file}: {g} does not kill {p}")
            });
        }
        let mut gens: Vec<SuperPoly> = b.relations().to_vec();
        gens.extend(
            cert.annihilator
                .even_generators()
                .iter()
                .map(|g| g.bar_into(b.ring()))
                .filter(|g| !g.is_zero()),
        );
        let kq = oracle::krull_dim(b.ring(), &gens, D);
        t.check(kq == Some(want.even), || {
            format!("{file}: oracle Kdim(A_0/Ann) = {kq:?}")
        });

        let elems: Vec<String> = cert.elements.iter().map(|e| e.to_string()).collect();
        t.note(format!(
            "{file}: Ksdim = {}, odd parameters [{}]",
            k.dim,
            elems.join(", ")
        ));
    }
}

fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &std::sync::Arc<Ring>,
    monos: &[Mono],
    terms: usize,
) -> SuperPoly {
    let f = ring.field();
    let mut p = SuperPoly::zero(ring);
    for _ in 0..terms {
        let m = monos.choose(rng).expect("nonempty").clone();
        let mut c: i64 = rng.gen_range(-3..=3);
        if c == 0 {
            c = 1;
        }
        p = &p + &SuperPoly::monomial(ring, m, f.int(c));
    }
    p
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &std::sync::Arc<Ring>,
    degree: u32,
    terms: usize,
) -> SuperPoly {
    let monos = monomials_up_to(ring, degree);
    random_homogeneous(rng, ring, &monos, terms)
}

/// Presentations with relations homogeneous in total degree, so the
/// truncated span is exactly the degree-`≤ D` part of the ideal.
fn random_presentation(rng: &mut ChaCha8Rng, idx: usize) -> SuperAlgebra {
    let total = rng.gen_range(1..=4usize);
    let m = rng.gen_range(0..=total);
    let n = total - m;
    let ring = Ring::new(&names("x", m), &names("y", n), Field::Rational).expect("small ring");
    let all = monomials_up_to(&ring, 4);
    let mut rels = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(1..=4u32);
        let parity = if n == 0 || rng.gen_bool(0.5) {
            Parity::Even
        } else {
            Parity::Odd
        };
        let monos: Vec<Mono> = all
            .iter()
            .filter(|mo| mo.total_degree() == d && mo.parity() == parity)
            .cloned()
            .collect();
        if monos.is_empty() {
            continue;
        }
        let terms = rng.gen_range(1..=3);
        let r = random_homogeneous(rng, &ring, &monos, terms);
        if !r.is_zero() {
            rels.push(r);
        }
    }
    SuperAlgebra::new(format!("P{idx}"), ring, rels).expect("homogeneous relations")
}

fn oracle_equivalence(cfg: &Config, t: &mut Tally) {
    const D: u32 = 8;
    const PRESENTATIONS: usize = 24;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x3);
    let mut compared = 0usize;
    for idx in 0..PRESENTATIONS {
        let a = random_presentation(&mut rng, idx);
        let ring = a.ring().clone();
        let trunc = TruncatedIdeal::new(&ring, a.relations(), D);
        let monos = monomials_up_to(&ring, D);
        let mut agree = |f: &SuperPoly, t: &mut Tally| {
            compared += 1;
            let nf = a.is_zero(f);
            let or = trunc.contains(f);
            t.check(or == Some(nf), || {
                format!("{a}: membership of {f}: normal form {nf}, oracle {or:?}")
            });
        };
        for m in &monos {
            agree(
                &SuperPoly::monomial(&ring, m.clone(), ring.field().one()),
                t,
            );
        }
        for _ in 0..10 {
            let mut member = SuperPoly::zero(&ring);
            for g in a.relations() {
                let h = random_poly(&mut rng, &ring, D - g.total_degree(), 3);
                member = &member + &(&h * g);
            }
            agree(&member, t);
            let noise = random_poly(&mut rng, &ring, D, 2);
            agree(&(&member + &noise), t);
        }
        // Hilbert function of A up to degree D
        let standard = a.standard_monomials(D).len();
        let expected = monos.len() - trunc.dimension();
        t.check(standard == expected, || {
            format!("{a}: {standard} standard monomials, oracle {expected}")
        });
    }
    t.note(format!(
        "{PRESENTATIONS} presentations, {compared} membership comparisons up to degree {D}"
    ));
}

fn covers(cfg: &Config, t: &mut Tally) {
    for (file, cover, want) in corpus::covers() {
        let a = corpus::algebra(file);
        let elems = corpus::cover_elements(&a, &cover);
        match verify_cover(&a, &elems, &opts(cfg)) {
            Ok(r) => {
                t.check(r.global == want, || {
                    format!("{file}: global Ksdim {} != {want}", r.global)
                });
                t.check(r.agrees(), || {
                    format!("{file}: cover gives {}, global {}", r.combined, r.global)
                });
                let local: Vec<String> = r
                    .local
                    .iter()
                    .map(|s| s.map_or_else(|| "zero".to_string(), |s| s.to_string()))
                    .collect();
                t.note(format!(
                    "{file}: cover [{}] -> [{}], combined {}",
                    cover.join(", "),
                    local.join(", "),
                    r.combined
                ));
            }
            Err(e) => t.fail(format!("{file}: {e}")),
        }
    }
}

fn gr(t: &mut Tally) {
    for (file, a) in corpus::all_algebras() {
        let g = gr_presentation(&a);
        t.check(is_odd_weight_homogeneous(&g), || {
            format!("{file}: gr relations are not weight-homogeneous")
        });
        t.check(gr_slices_agree(&a, &g, 6), || {
            format!("{file}: weight slices differ")
        });
        let rels: Vec<String> = g.relations().iter().map(|r| r.to_string()).collect();
        t.note(format!("{file}: gr relations [{}]", rels.join("; ")));
    }
    let cusp = gr_presentation(&corpus::algebra("cusp.salg"));
    let rels: Vec<String> = cusp.relations().iter().map(|r| r.to_string()).collect();
    t.check(rels == ["x^2"], || {
        format!("cusp.salg: gr relations {rels:?}, expected [x^2]")
    });
}

fn lambda4() -> SuperAlgebra {
    let r = Ring::new(&[] as &[&str], &["s", "t", "u", "w"], Field::Rational).expect("small ring");
    SuperAlgebra::free("L", r)
}

fn group_axioms(cfg: &Config, t: &mut Tally) {
    const TRIPLES: usize = 200;
    for (k, file) in ["unipotent.shc", "gl1.shc", "gl11.shc"]
        .into_iter()
        .enumerate()
    {
        let pair = corpus::pair(file);
        t.check(pair.validate().is_valid(), || {
            format!("{file}: pair does not validate")
        });
        let grp = match HcGroup::new(pair, lambda4()) {
            Ok(g) => g,
            Err(e) => return t.fail(format!("{file}: {e}")),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(100 + k as u64));
        let id = grp.identity();
        let before = t.failures.len();
        for i in 0..TRIPLES {
            let r = (|| -> crate::Result<()> {
                let x = grp.random_element(&mut rng)?;
                let y = grp.random_element(&mut rng)?;
                let z = grp.random_element(&mut rng)?;
                let assoc = grp.mul(&grp.mul(&x, &y)?, &z)? == grp.mul(&x, &grp.mul(&y, &z)?)?;
                t.check(assoc, || {
                    format!("{file}: associativity fails on triple {i}")
                });
                let ident = grp.mul(&id, &x)? == x && grp.mul(&x, &id)? == x;
                t.check(ident, || {
                    format!("{file}: identity law fails on triple {i}")
                });
                let xi = grp.inv(&x)?;
                let inverse = grp.mul(&x, &xi)? == id && grp.mul(&xi, &x)? == id;
                t.check(inverse, || {
                    format!("{file}: inverse law fails on triple {i}")
                });
                Ok(())
            })();
            if let Err(e) = r {
                t.fail(format!("{file}: triple {i}: {e}"));
            }
        }
        t.note(format!(
            "{file}: {TRIPLES} triples, {} failures",
            t.failures.len() - before
        ));
    }

    let grp = HcGroup::new(corpus::pair("unipotent.shc"), lambda4()).expect("valid pair");
    let ring = grp.coeff().ring().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(200));
    for i in 0..100 {
        let (x, y) = match (grp.random_element(&mut rng), grp.random_element(&mut rng)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return t.fail("unipotent: random element".into()),
        };
        let (mx, my) = (unipotent_model(&x), unipotent_model(&y));
        let prod: Vec<Vec<SuperPoly>> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| {
                        (0..3).fold(SuperPoly::zero(&ring), |acc, k| {
                            &acc + &(&mx[r][k] * &my[k][c])
                        })
                    })
                    .collect()
            })
            .collect();
        let ok = grp
            .mul(&x, &y)
            .is_ok_and(|p| p == unipotent_from_model(&prod));
        t.check(ok, || {
            format!("unipotent: product {i} differs from the matrix model")
        });
    }
    t.note("unipotent: 100 products against the 3x3 matrix model".into());
}

fn graded(t: &mut Tally) {
    let f = Field::Rational;
    let mut pairs: Vec<HcPair> = corpus::PAIRS
        .iter()
        .map(|(file, _)| corpus::pair(file))
        .filter(|p| p.validate().is_valid())
        .collect();
    pairs.extend([
        gl1_weight(f, 2),
        gl2_std(f),
        sl2_trivial(f, 2),
        trivial_group(f),
    ]);
    for p in pairs {
        let zero_bracket = p.bracket.iter().flatten().all(is_zero_mat);
        t.check(p.is_graded() == zero_bracket, || {
            format!("{}: is_graded = {}", p.name, p.is_graded())
        });
        let g = p.gr_pair();
        t.check(g.validate().is_valid(), || {
            format!("{}: gr pair does not validate", p.name)
        });
        t.check(g.is_graded(), || {
            format!("{}: gr pair is not graded", p.name)
        });
        t.note(format!(
            "{}: graded = {}, sdim = {}",
            p.name,
            p.is_graded(),
            p.sdim()
        ));
    }
}

fn orbits(t: &mut Tally) {
    for case in corpus::actions() {
        let a = &case.doc.algebra;
        let ring = a.ring();
        t.check(case.points.len() >= 5, || {
            format!("{}: only {} points", case.file, case.points.len())
        });
        let reports = match verify_orbit_theorems(&case.action, &case.points) {
            Ok(r) => r,
            Err(e) => return t.fail(format!("{}: {e}", case.file)),
        };
        for (pt, rep) in case.points.iter().zip(&reports) {
            t.check(rep.ok(), || {
                format!("{} at {}: {rep:?}", case.file, rep.point)
            });
            // one odd generator y: the orbit is the point iff φ(y) vanishes there
            let lambda = case.action.images()[ring.num_even()].evaluate_at(pt.values());
            let (expected, stab) = if lambda.is_zero() {
                (pt.maximal_generators(ring), Stabilizer::Full)
            } else {
                (pt.even_maximal_generators(ring), Stabilizer::Trivial)
            };
            match orbit_ideal(&case.action, pt) {
                Ok(o) => {
                    t.check(ideal_equal(&o.ideal, &a.ideal(&expected)), || {
                        format!("{} at {}: ideal {:?}", case.file, rep.point, rep.ideal)
                    });
                    t.check(o.stabilizer == stab, || {
                        format!(
                            "{} at {}: stabilizer {}",
                            case.file, rep.point, o.stabilizer
                        )
                    });
                    let dichotomy =
                        (o.stabilizer == Stabilizer::Full) == (o.sdim == SuperDim::new(0, 0));
                    t.check(dichotomy, || {
                        format!("{} at {}: sdim {}", case.file, rep.point, o.sdim)
                    });
                }
                Err(e) => t.fail(format!("{} at {}: {e}", case.file, rep.point)),
            }
            t.note(format!(
                "{} at {}: I = ({}), stabilizer {}, {} = 0|1 - {}",
                case.file,
                rep.point,
                rep.ideal.join(", "),
                rep.stabilizer,
                rep.orbit_sdim,
                rep.stabilizer_sdim
            ));
        }
    }
}

fn mono(t: &mut Tally) {
    let f = Field::Rational;
    let kx = SuperAlgebra::free("k[x]", Ring::new(&["x"], &[] as &[&str], f).expect("ring"));
    let a11 = corpus::algebra("a11.salg");
    let xy = corpus::algebra("xy.salg");
    let g = |a: &SuperAlgebra| a.ring().generators();

    let cases: Vec<(&str, &SuperAlgebra, &SuperAlgebra, Vec<SuperPoly>, bool)> = vec![
        ("k[x] -> k[x|y]", &kx, &a11, vec![g(&a11)[0].clone()], false),
        ("identity of k[x|y]", &a11, &a11, g(&a11), true),
        ("k[x|y] -> k[x|y]/(xy)", &a11, &xy, g(&xy), true),
    ];
    for (label, src, dst, images, want) in cases {
        match Morphism::new(src, dst, images) {
            Ok(m) => {
                let got = check_mono_necessary(&m);
                t.check(got == want, || format!("{label}: got {got}"));
                t.note(format!("{label}: {got}"));
            }
            Err(e) => t.fail(format!("{label}: {e}")),
        }
    }
}
