use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};
use superdim::dsl::{
    parse_derivation, parse_document, parse_point, parse_poly, parse_poly_list, parse_poly_matrix,
    render_algebra, render_pair, AlgebraDoc, Document,
};
use superdim::groebner::{
    annihilator, check_mono_necessary, localize_at_even, Morphism, PointIdeal,
};
use superdim::hcgroup::{HcElement, HcGroup, HcPair, Strategy};
use superdim::orbits::{
    odd_module_generators, orbit_ideal, validate_action, verify_orbit_theorems, OddAction,
    Stabilizer,
};
use superdim::sdim::{
    self, check_oddly_regular_at_point, gr_presentation, is_odd_regular_sequence,
    odd_parameter_certificate, phi_dim_at_point, verify_cover, KsdimOptions, OddParamCertificate,
};
use superdim::selftest::{self, Config};
use superdim::{Ring, Scalar, SuperAlgebra, SuperPoly};

use crate::{Global, HcCommand, HcOpts, StrategyArg};

pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub certificate: Option<Value>,
    pub text: String,
    /// `Some` for predicates; `Some(false)` exits with status 1.
    pub verdict: Option<bool>,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Outcome {
        Outcome {
            command,
            inputs,
            result,
            certificate: None,
            text,
            verdict: None,
        }
    }

    fn predicate(mut self, v: bool) -> Outcome {
        self.verdict = Some(v);
        self
    }

    fn with_certificate(mut self, c: Option<Value>) -> Outcome {
        self.certificate = c;
        self
    }

    pub fn json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("result".into(), self.result.clone());
        if let Some(c) = &self.certificate {
            m.insert("certificate".into(), c.clone());
        }
        serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize")
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn inputs(g: &Global, file: &Path, extra: &[(&str, Value)]) -> Result<Value> {
    let mut m = Map::new();
    m.insert("file".into(), json!(file.display().to_string()));
    m.insert("field".into(), json!(g.field()?.to_string()));
    m.insert("seed".into(), json!(g.seed));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    Ok(Value::Object(m))
}

fn load(g: &Global, path: &Path) -> Result<Document> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_document(&text, g.field()?).map_err(|e| anyhow!("{}:{e}", path.display()))
}

fn load_algebra(g: &Global, path: &Path) -> Result<AlgebraDoc> {
    match load(g, path)? {
        Document::Algebra(a) => Ok(a),
        Document::Pair(_) => bail!("{}: expected a superalgebra document", path.display()),
    }
}

fn load_pair(g: &Global, path: &Path) -> Result<HcPair> {
    match load(g, path)? {
        Document::Pair(p) => Ok(p),
        Document::Algebra(_) => bail!("{}: expected an hcpair document", path.display()),
    }
}

fn flag<T>(name: &str, r: superdim::dsl::DslResult<T>) -> Result<T> {
    r.map_err(|e| anyhow!("--{name}: {e}"))
}

fn ksdim_opts(g: &Global) -> KsdimOptions {
    KsdimOptions {
        seed: g.seed,
        exec: g.exec(),
        ..Default::default()
    }
}

fn certificate_json(c: &OddParamCertificate, a: &SuperAlgebra) -> Value {
    json!({
        "elements": strings(&c.elements),
        "annihilator": strings(&c.annihilator.minimal_generators(a)),
        "even_dim_witness": c.even_dim_witness,
    })
}

fn ideal_text(gens: &[SuperPoly]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", strings(gens).join(", "))
    }
}

fn certificate_text(c: &OddParamCertificate, a: &SuperAlgebra) -> String {
    let elems = if c.elements.is_empty() {
        "(none)".to_string()
    } else {
        strings(&c.elements).join(", ")
    };
    format!(
        "odd parameters: {elems}\nannihilator of their product: {}\nKdim(A_0 / Ann) = {}\n",
        ideal_text(&c.annihilator.minimal_generators(a)),
        c.even_dim_witness
    )
}

pub fn ksdim(g: &Global, file: &Path, extra: Option<&str>, random: usize) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    let extra_candidates = match extra {
        Some(s) => flag("extra", parse_poly_list(s, a.ring()))?,
        None => Vec::new(),
    };
    let opts = KsdimOptions {
        extra_candidates,
        random_combinations: random,
        ..ksdim_opts(g)
    };
    let k = sdim::ksdim(&a, &opts)?;
    let text = format!(
        "Ksdim = {}\n{}",
        k.dim,
        certificate_text(&k.certificate, &a)
    );
    let result = json!({"sdim": k.dim.to_string(), "even": k.dim.even, "odd": k.dim.odd});
    let inputs = inputs(g, file, &[("random", json!(random))])?;
    Ok(Outcome::new("ksdim", inputs, result, text)
        .with_certificate(Some(certificate_json(&k.certificate, &a))))
}

fn algebra_result(a: &SuperAlgebra) -> Value {
    json!({"algebra": a.to_string(), "relations": strings(a.relations())})
}

pub fn bar(g: &Global, file: &Path) -> Result<Outcome> {
    let b = sdim::bar(&load_algebra(g, file)?.algebra);
    Ok(Outcome::new(
        "bar",
        inputs(g, file, &[])?,
        algebra_result(&b),
        render_algebra(&b),
    ))
}

pub fn gr(g: &Global, file: &Path) -> Result<Outcome> {
    let b = gr_presentation(&load_algebra(g, file)?.algebra);
    Ok(Outcome::new(
        "gr",
        inputs(g, file, &[])?,
        algebra_result(&b),
        render_algebra(&b),
    ))
}

pub fn ann(g: &Global, file: &Path, elem: &str) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    let p = flag("elem", parse_poly(elem, a.ring()))?;
    let ann = annihilator(&p, &a)?;
    let min = ann.ideal.minimal_generators(&a);
    let gens = strings(&min);
    let text = if ann.of_zero {
        format!("{p} = 0 in A, so Ann = A\n")
    } else {
        format!("Ann({p}) = {}\n", ideal_text(&min))
    };
    let result = json!({"generators": gens, "of_zero": ann.of_zero});
    Ok(Outcome::new(
        "ann",
        inputs(g, file, &[("elem", json!(elem))])?,
        result,
        text,
    ))
}

pub fn odd_params(g: &Global, file: &Path, seq: &str) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    let ys = flag("seq", parse_poly_list(seq, a.ring()))?;
    let cert = odd_parameter_certificate(&a, &ys)?;
    let ok = cert.is_some();
    let mut text = format!("{ok}\n");
    if let Some(c) = &cert {
        text += &certificate_text(c, &a);
    }
    let inputs = inputs(g, file, &[("seq", json!(seq))])?;
    Ok(Outcome::new("odd-params", inputs, json!(ok), text)
        .with_certificate(cert.map(|c| certificate_json(&c, &a)))
        .predicate(ok))
}

pub fn odd_regular(g: &Global, file: &Path, seq: &str) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    let ys = flag("seq", parse_poly_list(seq, a.ring()))?;
    let ok = is_odd_regular_sequence(&a, &ys)?;
    let inputs = inputs(g, file, &[("seq", json!(seq))])?;
    Ok(Outcome::new("odd-regular", inputs, json!(ok), format!("{ok}\n")).predicate(ok))
}

fn point(a: &SuperAlgebra, text: &str) -> Result<PointIdeal> {
    let values = flag("point", parse_point(text, a.ring()))?;
    Ok(PointIdeal::new(a, &values)?)
}

pub fn phi_dim(g: &Global, file: &Path, pt: &str) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    let p = point(&a, pt)?;
    let dim = phi_dim_at_point(&a, &p)?;
    let regular = check_oddly_regular_at_point(&a, &p)?;
    let text = format!("dim Phi = {dim}\noddly regular (sufficient check): {regular}\n");
    let result = json!({"phi_dim": dim, "oddly_regular": regular});
    Ok(Outcome::new(
        "phi-dim",
        inputs(g, file, &[("point", json!(pt))])?,
        result,
        text,
    ))
}

pub fn localize(g: &Global, file: &Path, at: Option<&str>, cover: Option<&str>) -> Result<Outcome> {
    let a = load_algebra(g, file)?.algebra;
    match (at, cover) {
        (Some(at), None) => {
            let elem = flag("at", parse_poly(at, a.ring()))?;
            let (loc, zero) = localize_at_even(&a, &elem)?;
            let inputs = inputs(g, file, &[("at", json!(at))])?;
            if zero {
                let text = format!("A_({elem}) is the zero ring\n");
                return Ok(Outcome::new(
                    "localize",
                    inputs,
                    json!({"zero": true}),
                    text,
                ));
            }
            let k = sdim::ksdim(&loc, &ksdim_opts(g))?;
            let text = format!("{}Ksdim = {}\n", render_algebra(&loc), k.dim);
            let result =
                json!({"zero": false, "algebra": loc.to_string(), "sdim": k.dim.to_string()});
            Ok(Outcome::new("localize", inputs, result, text))
        }
        (None, Some(cover)) => {
            let elems = flag("cover", parse_poly_list(cover, a.ring()))?;
            let r = verify_cover(&a, &elems, &ksdim_opts(g))?;
            let local: Vec<String> = r
                .local
                .iter()
                .map(|s| s.map_or_else(|| "zero".to_string(), |s| s.to_string()))
                .collect();
            let mut text = String::new();
            for (e, s) in elems.iter().zip(&local) {
                writeln!(text, "Ksdim(A_({e})) = {s}").unwrap();
            }
            writeln!(
                text,
                "combined {} over {:?}, global {}: {}",
                r.combined,
                r.top_even,
                r.global,
                r.agrees()
            )
            .unwrap();
            let result = json!({
                "local": local,
                "top_even": r.top_even,
                "combined": r.combined.to_string(),
                "global": r.global.to_string(),
                "agrees": r.agrees(),
            });
            Ok(Outcome::new(
                "localize",
                inputs(g, file, &[("cover", json!(cover))])?,
                result,
                text,
            )
            .predicate(r.agrees()))
        }
        _ => bail!("give exactly one of --at and --cover"),
    }
}

pub fn mono_check(g: &Global, source: &Path, target: &Path, images: &str) -> Result<Outcome> {
    let a = load_algebra(g, source)?.algebra;
    let b = load_algebra(g, target)?.algebra;
    let imgs = flag("images", parse_poly_list(images, b.ring()))?;
    let phi = Morphism::new(&a, &b, imgs)?;
    let ok = check_mono_necessary(&phi);
    let extra = [
        ("target", json!(target.display().to_string())),
        ("images", json!(images)),
    ];
    Ok(Outcome::new(
        "mono-check",
        inputs(g, source, &extra)?,
        json!(ok),
        format!("{ok}\n"),
    )
    .predicate(ok))
}

fn lambda4(g: &Global) -> Result<SuperAlgebra> {
    let r = Ring::new(&[] as &[&str], &["s", "t", "u", "w"], g.field()?)?;
    Ok(SuperAlgebra::free("L", r))
}

fn coeff_algebra(g: &Global, coeff: Option<&Path>) -> Result<SuperAlgebra> {
    match coeff {
        Some(p) => Ok(load_algebra(g, p)?.algebra),
        None => lambda4(g),
    }
}

/// `[[..]] | a1, a2`: matrix entries and odd coordinates in the coefficients.
fn element(grp: &HcGroup, text: &str) -> Result<HcElement> {
    let ring = grp.coeff().ring();
    let (m, odd) = text.split_once('|').unwrap_or((text, ""));
    let m =
        parse_poly_matrix(m, ring).map_err(|e| anyhow!("element matrix `{}`: {e}", m.trim()))?;
    let odd = parse_poly_list(odd, ring)
        .map_err(|e| anyhow!("element coordinates `{}`: {e}", odd.trim()))?;
    let g = grp.group_elem(m)?;
    let odd = if odd.is_empty() {
        vec![SuperPoly::zero(ring); grp.pair().t]
    } else {
        odd
    };
    Ok(grp.element(g, odd)?)
}

fn element_json(e: &HcElement) -> Value {
    let m: Vec<Vec<String>> = e.g.m.iter().map(|r| strings(r)).collect();
    json!({"g": m, "a": strings(&e.odd)})
}

fn hc_inputs(
    g: &Global,
    file: &Path,
    opts: Option<&HcOpts>,
    extra: &[(&str, Value)],
) -> Result<Value> {
    let mut all: Vec<(&str, Value)> = extra.to_vec();
    if let Some(o) = opts {
        let coeff = o
            .coeff
            .as_ref()
            .map_or_else(|| "Λ(s, t, u, w)".to_string(), |p| p.display().to_string());
        all.push(("coeff", json!(coeff)));
        all.push((
            "strategy",
            json!(format!("{:?}", o.strategy).to_lowercase()),
        ));
    }
    inputs(g, file, &all)
}

pub fn hc(g: &Global, cmd: &HcCommand) -> Result<Outcome> {
    match cmd {
        HcCommand::Validate { file } => {
            let pair = load_pair(g, file)?;
            let report = pair.validate();
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"axiom": c.axiom, "ok": c.ok, "witness": c.witness}))
                .collect();
            let ok = report.is_valid();
            let text = format!("{report}valid: {ok}\n");
            Ok(Outcome::new(
                "hc validate",
                inputs(g, file, &[])?,
                json!({"valid": ok, "checks": checks}),
                text,
            )
            .predicate(ok))
        }
        HcCommand::Mul {
            file,
            left,
            right,
            opts,
        } => {
            let grp = HcGroup::new(
                load_pair(g, file)?,
                coeff_algebra(g, opts.coeff.as_deref())?,
            )?;
            let (x, y) = (element(&grp, left)?, element(&grp, right)?);
            let strategy = match opts.strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
            };
            let (p, stats) = grp.mul_with(&x, &y, strategy)?;
            let text = format!(
                "{p}\nsteps {}, corrections {}\n",
                stats.steps, stats.corrections
            );
            let result = json!({"product": element_json(&p), "steps": stats.steps, "corrections": stats.corrections});
            let inputs = hc_inputs(
                g,
                file,
                Some(opts),
                &[("left", json!(left)), ("right", json!(right))],
            )?;
            Ok(Outcome::new("hc mul", inputs, result, text))
        }
        HcCommand::Inv { file, elem, coeff } => {
            let grp = HcGroup::new(load_pair(g, file)?, coeff_algebra(g, coeff.as_deref())?)?;
            let x = element(&grp, elem)?;
            let inv = grp.inv(&x)?;
            let inputs = hc_inputs(g, file, None, &[("elem", json!(elem))])?;
            Ok(Outcome::new(
                "hc inv",
                inputs,
                json!({"inverse": element_json(&inv)}),
                format!("{inv}\n"),
            ))
        }
        HcCommand::Sdim { file } => {
            let s = load_pair(g, file)?.sdim();
            Ok(Outcome::new(
                "hc sdim",
                inputs(g, file, &[])?,
                json!(s.to_string()),
                format!("sdim = {s}\n"),
            ))
        }
        HcCommand::Graded { file, show_gr } => {
            let pair = load_pair(g, file)?;
            let ok = pair.is_graded();
            let mut text = format!("{ok}\n");
            let mut result = json!({"graded": ok});
            if *show_gr {
                let gr = render_pair(&pair.gr_pair());
                text += &gr;
                result["gr"] = json!(gr);
            }
            Ok(Outcome::new("hc graded", inputs(g, file, &[])?, result, text).predicate(ok))
        }
    }
}

fn action(doc: &AlgebraDoc, derivation: Option<&str>) -> Result<OddAction> {
    let a = &doc.algebra;
    let images = match (derivation, &doc.derivation) {
        (Some(d), _) => flag("derivation", parse_derivation(d, a.ring()))?,
        (None, Some(d)) => d.images.clone(),
        (None, None) => bail!("no derivation: pass --derivation or add a derivation block"),
    };
    Ok(validate_action(a, images)?)
}

fn points(doc: &AlgebraDoc, given: &[&str]) -> Result<Vec<PointIdeal>> {
    let a = &doc.algebra;
    if given.is_empty() {
        if doc.points.is_empty() {
            bail!("no points: pass --point or add point lines");
        }
        return doc
            .points
            .iter()
            .map(|p| Ok(PointIdeal::new(a, p)?))
            .collect();
    }
    given.iter().map(|p| point(a, p)).collect()
}

fn point_map(p: &PointIdeal, ring: &Ring) -> BTreeMap<String, String> {
    ring.even_names()
        .iter()
        .cloned()
        .zip(p.values().iter().map(Scalar::to_string))
        .collect()
}

pub fn orbit(
    g: &Global,
    file: &Path,
    derivation: Option<&str>,
    pt: Option<&str>,
) -> Result<Outcome> {
    let doc = load_algebra(g, file)?;
    let act = action(&doc, derivation)?;
    let given: Vec<&str> = pt.into_iter().collect();
    let pts = points(&doc, &given)?;
    let a = &doc.algebra;
    let ws = odd_module_generators(a);
    let mut text = String::new();
    let mut results = Vec::new();
    for p in &pts {
        let o = orbit_ideal(&act, p)?;
        let shape = match o.stabilizer {
            Stabilizer::Full => "k".to_string(),
            Stabilizer::Trivial => {
                let j = o
                    .lambdas
                    .iter()
                    .position(|l| !l.is_zero())
                    .expect("trivial stabilizer has a pivot");
                format!("Λ({})", ws[j])
            }
        };
        let ideal = strings(&o.generators);
        if pts.len() > 1 {
            write!(text, "at {}: ", p.render(a.ring())).unwrap();
        }
        writeln!(
            text,
            "I = ({}), orbit ≅ {shape}, sdim {}, stabilizer {}",
            ideal.join(", "),
            o.sdim,
            o.stabilizer
        )
        .unwrap();
        results.push(json!({
            "point": point_map(p, a.ring()),
            "ideal": ideal,
            "orbit": shape,
            "sdim": o.sdim.to_string(),
            "stabilizer": o.stabilizer.to_string(),
            "lambdas": strings(&o.lambdas),
        }));
    }
    let extra = [("derivation", json!(derivation)), ("point", json!(pt))];
    Ok(Outcome::new(
        "orbit",
        inputs(g, file, &extra)?,
        Value::Array(results),
        text,
    ))
}

pub fn verify_orbits(
    g: &Global,
    file: &Path,
    derivation: Option<&str>,
    pts: &[String],
) -> Result<Outcome> {
    let doc = load_algebra(g, file)?;
    let act = action(&doc, derivation)?;
    let given: Vec<&str> = pts.iter().map(String::as_str).collect();
    let pts = points(&doc, &given)?;
    let reports = verify_orbit_theorems(&act, &pts)?;
    let mut text = String::new();
    let mut results = Vec::new();
    for r in &reports {
        writeln!(
            text,
            "at {}: I = ({}), stabilizer {}, {} = 0|1 - {}, phi-stable {}, (*) {}, pivot-independent {}: {}",
            r.point,
            r.ideal.join(", "),
            r.stabilizer,
            r.orbit_sdim,
            r.stabilizer_sdim,
            r.phi_stable,
            r.star_holds,
            r.pivot_independent,
            if r.ok() { "ok" } else { "FAILED" }
        )
        .unwrap();
        results.push(json!({
            "point": r.point,
            "ideal": r.ideal,
            "stabilizer": r.stabilizer.to_string(),
            "orbit_sdim": r.orbit_sdim.to_string(),
            "stabilizer_sdim": r.stabilizer_sdim.to_string(),
            "closed": r.closed,
            "phi_stable": r.phi_stable,
            "identity_holds": r.identity_holds,
            "star_holds": r.star_holds,
            "pivot_independent": r.pivot_independent,
            "ok": r.ok(),
        }));
    }
    let ok = reports.iter().all(|r| r.ok());
    let extra = [("derivation", json!(derivation)), ("points", json!(given))];
    Ok(Outcome::new(
        "verify-orbits",
        inputs(g, file, &extra)?,
        Value::Array(results),
        text,
    )
    .predicate(ok))
}

pub fn selftest(g: &Global) -> Outcome {
    let report = selftest::run(&Config {
        seed: g.seed,
        exec: g.exec(),
    });
    let mut text = String::new();
    for c in &report.criteria {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        writeln!(
            text,
            "criterion {} ({}): {verdict}, {} checks",
            c.id, c.title, c.checks
        )
        .unwrap();
        for f in &c.failures {
            writeln!(text, "    {f}").unwrap();
        }
    }
    let ok = report.passed();
    writeln!(
        text,
        "{}",
        if ok {
            "all criteria passed"
        } else {
            "some criteria FAILED"
        }
    )
    .unwrap();
    let result = serde_json::to_value(&report).expect("report serializes");
    Outcome::new("selftest", json!({"seed": g.seed}), result, text).predicate(ok)
}
