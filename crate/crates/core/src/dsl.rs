//! The presentation language.
//!
//! ```text
//! superalgebra A
//!   even x
//!   odd y1 y2
//!   rel x^2 - y1y2
//! end
//! derivation phi: x -> 0; y1 -> 1; y2 -> x end
//! point x = 0
//!
//! hcpair unipotent
//!   n 2
//!   eq g11 - 1; g22 - 1; g21
//!   rho [[1]]
//!   bracket 1 1 = [[0, 2], [0, 0]]
//! end
//! ```
//!
//! Juxtaposed odd names (`y1y3`) denote products. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::AlgebraError;
use crate::field::{Field, Scalar};
use crate::groebner::SuperAlgebra;
use crate::hcgroup::{render_scalar_mat, EvenGroupSpec, HcPair, ScalarMat};
use crate::poly::{Ring, SuperPoly};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

pub type DslResult<T> = std::result::Result<T, DslError>;

const KEYWORDS: &[&str] = &[
    "superalgebra",
    "even",
    "odd",
    "rel",
    "end",
    "derivation",
    "point",
    "hcpair",
    "n",
    "eq",
    "rho",
    "bracket",
    "drho",
    "kpoint",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Arrow,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> DslResult<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            advance(1, &mut i, &mut col);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                col: c0,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().unwrap()),
                line: l0,
                col: c0,
            });
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            advance(2, &mut i, &mut col);
            out.push(Token {
                tok: Tok::Arrow,
                line: l0,
                col: c0,
            });
        } else if "+-*^/()[],;=:".contains(c) {
            advance(1, &mut i, &mut col);
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                col: c0,
            });
        } else {
            return Err(DslError {
                line,
                col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    field: Field,
}

impl Parser {
    fn new(text: &str, field: Field) -> DslResult<Parser> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            field,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_at(&self, t: &Token, message: impl Into<String>) -> DslError {
        DslError {
            line: t.line,
            col: t.col,
            message: message.into(),
        }
    }

    fn err(&self, message: impl Into<String>) -> DslError {
        self.err_at(self.peek(), message)
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn expect_sym(&mut self, c: char) -> DslResult<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`, found {}", self.peek().tok)))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> DslResult<()> {
        if self.is_kw(kw) {
            self.next();
            Ok(())
        } else {
            Err(self.err(format!("expected `{kw}`, found {}", self.peek().tok)))
        }
    }

    fn ident(&mut self) -> DslResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => Err(self.err_at(&t, format!("expected a name, found {other}"))),
        }
    }

    fn int(&mut self) -> DslResult<BigInt> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(n.clone()),
            other => Err(self.err_at(&t, format!("expected an integer, found {other}"))),
        }
    }

    fn small_int(&mut self) -> DslResult<usize> {
        let t = self.peek().clone();
        let n = self.int()?;
        usize::try_from(&n).map_err(|_| self.err_at(&t, format!("integer {n} is too large")))
    }

    /// `-? int ('/' int)?`
    fn scalar(&mut self) -> DslResult<Scalar> {
        let neg = if self.is_sym('-') {
            self.next();
            true
        } else {
            false
        };
        let t = self.peek().clone();
        let num = self.int()?;
        let den = if self.is_sym('/') {
            self.next();
            self.int()?
        } else {
            BigInt::from(1)
        };
        let v = self
            .field
            .ratio(&num, &den)
            .ok_or_else(|| self.err_at(&t, "denominator is zero in this field"))?;
        Ok(if neg { -v } else { v })
    }

    fn map_alg(&self, t: &Token, e: AlgebraError) -> DslError {
        self.err_at(t, e.to_string())
    }

    // polynomials

    fn poly(&mut self, ring: &Arc<Ring>) -> DslResult<SuperPoly> {
        let mut acc = if self.is_sym('-') {
            self.next();
            -&self.term(ring)?
        } else {
            if self.is_sym('+') {
                self.next();
            }
            self.term(ring)?
        };
        loop {
            if self.is_sym('+') {
                self.next();
                acc = &acc + &self.term(ring)?;
            } else if self.is_sym('-') {
                self.next();
                acc = &acc - &self.term(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &Arc<Ring>) -> DslResult<SuperPoly> {
        let mut acc = self.power(ring)?;
        while self.is_sym('*') {
            self.next();
            acc = &acc * &self.power(ring)?;
        }
        Ok(acc)
    }

    fn power(&mut self, ring: &Arc<Ring>) -> DslResult<SuperPoly> {
        let base = self.atom(ring)?;
        if self.is_sym('^') {
            self.next();
            let t = self.peek().clone();
            let e = self.int()?;
            let e = u32::try_from(&e)
                .map_err(|_| self.err_at(&t, format!("exponent {e} is too large")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self, ring: &Arc<Ring>) -> DslResult<SuperPoly> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(_) => Ok(SuperPoly::constant(ring, self.scalar()?)),
            Tok::Sym('(') => {
                self.next();
                let p = self.poly(ring)?;
                self.expect_sym(')')?;
                Ok(p)
            }
            Tok::Sym('-') => {
                self.next();
                Ok(-&self.atom(ring)?)
            }
            Tok::Ident(name) if KEYWORDS.contains(&name.as_str()) => {
                Err(self.err_at(&t, format!("expected a term, found keyword `{name}`")))
            }
            Tok::Ident(name) => {
                self.next();
                resolve_name(ring, name).map_err(|m| self.err_at(&t, m))
            }
            Tok::Eof => Err(self.err_at(&t, "expected a term, found end of input")),
            other => Err(self.err_at(&t, format!("expected a term, found {other}"))),
        }
    }

    fn poly_list(&mut self, ring: &Arc<Ring>) -> DslResult<Vec<SuperPoly>> {
        let mut out = vec![self.poly(ring)?];
        while self.is_sym(';') {
            self.next();
            out.push(self.poly(ring)?);
        }
        Ok(out)
    }

    fn names_until_keyword(&mut self) -> DslResult<Vec<(String, Token)>> {
        let mut out = Vec::new();
        while let Tok::Ident(s) = &self.peek().tok {
            if KEYWORDS.contains(&s.as_str()) {
                break;
            }
            out.push(self.ident()?);
            if self.is_sym(',') {
                self.next();
            }
        }
        Ok(out)
    }

    // blocks

    fn superalgebra(&mut self) -> DslResult<SuperAlgebra> {
        let head = self.peek().clone();
        self.expect_kw("superalgebra")?;
        let (name, _) = self.ident()?;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        if self.is_kw("even") {
            self.next();
            even = self.names_until_keyword()?;
        }
        if self.is_kw("odd") {
            self.next();
            odd = self.names_until_keyword()?;
        }
        let even_names: Vec<&str> = even.iter().map(|(s, _)| s.as_str()).collect();
        let odd_names: Vec<&str> = odd.iter().map(|(s, _)| s.as_str()).collect();
        let ring =
            Ring::new(&even_names, &odd_names, self.field).map_err(|e| self.map_alg(&head, e))?;
        check_odd_names(&odd).map_err(|(t, m)| self.err_at(&t, m))?;
        let mut rels = Vec::new();
        if self.is_kw("rel") {
            self.next();
            rels = self.poly_list(&ring)?;
        }
        self.expect_kw("end")?;
        SuperAlgebra::new(name, ring, rels).map_err(|e| self.map_alg(&head, e))
    }

    fn derivation_body(&mut self, ring: &Arc<Ring>) -> DslResult<Vec<SuperPoly>> {
        let mut images = vec![SuperPoly::zero(ring); ring.num_even() + ring.num_odd()];
        let mut seen = vec![false; images.len()];
        loop {
            if self.is_kw("end") || self.peek().tok == Tok::Eof {
                break;
            }
            let (name, t) = self.ident()?;
            let idx = ring
                .even_index(&name)
                .or_else(|| ring.odd_index(&name).map(|k| k + ring.num_even()))
                .ok_or_else(|| self.err_at(&t, format!("unknown generator `{name}`")))?;
            if seen[idx] {
                return Err(self.err_at(&t, format!("generator `{name}` is assigned twice")));
            }
            seen[idx] = true;
            if self.peek().tok != Tok::Arrow {
                return Err(self.err(format!("expected `->`, found {}", self.peek().tok)));
            }
            self.next();
            images[idx] = self.poly(ring)?;
            if self.is_sym(';') {
                self.next();
            } else {
                break;
            }
        }
        Ok(images)
    }

    fn derivation(&mut self, ring: &Arc<Ring>) -> DslResult<DerivationDecl> {
        self.expect_kw("derivation")?;
        let (name, _) = self.ident()?;
        self.expect_sym(':')?;
        let images = self.derivation_body(ring)?;
        self.expect_kw("end")?;
        Ok(DerivationDecl { name, images })
    }

    fn point_body(&mut self, ring: &Arc<Ring>) -> DslResult<BTreeMap<String, Scalar>> {
        let mut out = BTreeMap::new();
        loop {
            let (name, t) = self.ident()?;
            if ring.even_index(&name).is_none() {
                return Err(self.err_at(&t, format!("`{name}` is not an even generator")));
            }
            self.expect_sym('=')?;
            let v = self.scalar()?;
            if out.insert(name.clone(), v).is_some() {
                return Err(self.err_at(&t, format!("`{name}` is assigned twice")));
            }
            if self.is_sym(',') {
                self.next();
            } else {
                return Ok(out);
            }
        }
    }

    fn scalar_matrix(&mut self) -> DslResult<ScalarMat> {
        self.matrix(|p| p.scalar())
    }

    fn matrix<T>(
        &mut self,
        mut entry: impl FnMut(&mut Self) -> DslResult<T>,
    ) -> DslResult<Vec<Vec<T>>> {
        self.expect_sym('[')?;
        let mut rows = Vec::new();
        if self.is_sym(']') {
            self.next();
            return Ok(rows);
        }
        loop {
            self.expect_sym('[')?;
            let mut row = vec![entry(self)?];
            while self.is_sym(',') {
                self.next();
                row.push(entry(self)?);
            }
            self.expect_sym(']')?;
            rows.push(row);
            if self.is_sym(',') {
                self.next();
            } else {
                break;
            }
        }
        self.expect_sym(']')?;
        Ok(rows)
    }

    fn hcpair(&mut self) -> DslResult<HcPair> {
        let head = self.peek().clone();
        self.expect_kw("hcpair")?;
        let (name, _) = self.ident()?;
        self.expect_kw("n")?;
        let nt = self.peek().clone();
        let n = self.small_int()?;
        let ring = EvenGroupSpec::ring_for(n, self.field).map_err(|e| self.map_alg(&nt, e))?;
        let mut eqs = Vec::new();
        if self.is_kw("eq") {
            self.next();
            eqs = self.poly_list(&ring)?;
        }
        self.expect_kw("rho")?;
        let rt = self.peek().clone();
        let rho = self.matrix(|p| p.poly(&ring))?;
        let t = rho.len();
        if rho.iter().any(|r| r.len() != t) {
            return Err(self.err_at(&rt, "rho must be a square matrix"));
        }
        let group = EvenGroupSpec::new(ring.clone(), eqs).map_err(|e| self.map_alg(&head, e))?;
        let zero = crate::hcgroup::scalar_zero(self.field, n);
        let mut bracket = vec![vec![zero; t]; t];
        let mut drho: Vec<(usize, ScalarMat, Token)> = Vec::new();
        let mut kpoints = Vec::new();
        loop {
            if self.is_kw("bracket") {
                self.next();
                let it = self.peek().clone();
                let (i, j) = (self.small_int()?, self.small_int()?);
                if i == 0 || j == 0 || i > t || j > t {
                    return Err(self.err_at(&it, format!("bracket indices must lie in 1..={t}")));
                }
                self.expect_sym('=')?;
                let mt = self.peek().clone();
                let m = self.scalar_matrix()?;
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(self.err_at(&mt, format!("bracket values must be {n} x {n}")));
                }
                bracket[i - 1][j - 1] = m;
            } else if self.is_kw("drho") {
                self.next();
                let it = self.peek().clone();
                let k = self.small_int()?;
                self.expect_sym('=')?;
                drho.push((k, self.scalar_matrix()?, it));
            } else if self.is_kw("kpoint") {
                self.next();
                kpoints.push(self.scalar_matrix()?);
            } else {
                break;
            }
        }
        self.expect_kw("end")?;
        let mut pair =
            HcPair::new(name, group, rho, bracket).map_err(|e| self.map_alg(&head, e))?;
        for (k, m, t) in drho {
            if k == 0 || k > pair.drho.len() {
                return Err(self.err_at(
                    &t,
                    format!("drho index must lie in 1..={}", pair.drho.len()),
                ));
            }
            pair.drho[k - 1] = m;
        }
        if !kpoints.is_empty() {
            pair = pair
                .with_k_points(kpoints)
                .map_err(|e| self.map_alg(&head, e))?;
        }
        Ok(pair)
    }

    fn document(&mut self) -> DslResult<Document> {
        if self.is_kw("hcpair") {
            let pair = self.hcpair()?;
            self.expect_eof()?;
            return Ok(Document::Pair(pair));
        }
        if !self.is_kw("superalgebra") {
            return Err(self.err(format!(
                "expected `superalgebra` or `hcpair`, found {}",
                self.peek().tok
            )));
        }
        let algebra = self.superalgebra()?;
        let mut derivation = None;
        let mut points = Vec::new();
        loop {
            if self.is_kw("derivation") {
                if derivation.is_some() {
                    return Err(self.err("only one derivation per document"));
                }
                derivation = Some(self.derivation(algebra.ring())?);
            } else if self.is_kw("point") {
                self.next();
                points.push(self.point_body(algebra.ring())?);
                if self.is_kw("end") {
                    self.next();
                }
            } else {
                break;
            }
        }
        self.expect_eof()?;
        Ok(Document::Algebra(AlgebraDoc {
            algebra,
            derivation,
            points,
        }))
    }

    fn expect_eof(&self) -> DslResult<()> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.err(format!("unexpected {}", self.peek().tok)))
        }
    }
}

/// A generator name, or a juxtaposition of odd generator names.
fn resolve_name(ring: &Arc<Ring>, name: &str) -> std::result::Result<SuperPoly, String> {
    if let Some(p) = ring.generator(name) {
        return Ok(p);
    }
    let splits = split_odd(ring, name);
    match splits.len() {
        0 => Err(format!("unknown generator `{name}`")),
        1 => Ok(splits[0].iter().fold(SuperPoly::one(ring), |acc, &k| {
            &acc * &SuperPoly::odd_var(ring, k)
        })),
        _ => Err(format!(
            "`{name}` splits into odd generators in more than one way"
        )),
    }
}

fn split_odd(ring: &Ring, s: &str) -> Vec<Vec<usize>> {
    if s.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, n) in ring.odd_names().iter().enumerate() {
        if let Some(rest) = s.strip_prefix(n.as_str()) {
            for mut tail in split_odd(ring, rest) {
                tail.insert(0, k);
                out.push(tail);
                if out.len() > 1 {
                    return out;
                }
            }
        }
    }
    out
}

fn check_odd_names(odd: &[(String, Token)]) -> std::result::Result<(), (Token, String)> {
    for (name, t) in odd {
        if KEYWORDS.contains(&name.as_str()) {
            return Err((t.clone(), format!("`{name}` is a keyword")));
        }
    }
    // a name that is a concatenation of other odd names would make
    // juxtaposition ambiguous
    let names: Vec<&str> = odd.iter().map(|(s, _)| s.as_str()).collect();
    for (name, t) in odd {
        let others: Vec<&str> = names.iter().copied().filter(|n| n != name).collect();
        if concatenation_of(name, &others) {
            return Err((
                t.clone(),
                format!("odd name `{name}` is a concatenation of other odd names"),
            ));
        }
    }
    Ok(())
}

fn concatenation_of(s: &str, parts: &[&str]) -> bool {
    fn go(s: &str, parts: &[&str], depth: usize) -> bool {
        if s.is_empty() {
            return depth >= 2;
        }
        parts.iter().any(|p| {
            s.strip_prefix(p)
                .is_some_and(|rest| go(rest, parts, depth + 1))
        })
    }
    go(s, parts, 0)
}

#[derive(Clone, Debug)]
pub struct DerivationDecl {
    pub name: String,
    /// Generator images, even generators first.
    pub images: Vec<SuperPoly>,
}

#[derive(Clone, Debug)]
pub struct AlgebraDoc {
    pub algebra: SuperAlgebra,
    pub derivation: Option<DerivationDecl>,
    pub points: Vec<BTreeMap<String, Scalar>>,
}

#[derive(Clone, Debug)]
pub enum Document {
    Algebra(AlgebraDoc),
    Pair(HcPair),
}

pub fn parse_document(text: &str, field: Field) -> DslResult<Document> {
    Parser::new(text, field)?.document()
}

pub fn parse_algebra(text: &str, field: Field) -> DslResult<AlgebraDoc> {
    match parse_document(text, field)? {
        Document::Algebra(a) => Ok(a),
        Document::Pair(_) => Err(DslError {
            line: 1,
            col: 1,
            message: "expected a superalgebra document".into(),
        }),
    }
}

pub fn parse_pair(text: &str, field: Field) -> DslResult<HcPair> {
    match parse_document(text, field)? {
        Document::Pair(p) => Ok(p),
        Document::Algebra(_) => Err(DslError {
            line: 1,
            col: 1,
            message: "expected an hcpair document".into(),
        }),
    }
}

fn standalone<T>(
    text: &str,
    field: Field,
    f: impl FnOnce(&mut Parser) -> DslResult<T>,
) -> DslResult<T> {
    let mut p = Parser::new(text, field)?;
    let out = f(&mut p)?;
    p.expect_eof()?;
    Ok(out)
}

pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> DslResult<SuperPoly> {
    standalone(text, ring.field(), |p| p.poly(ring))
}

/// Polynomials separated by `,` or `;`.
pub fn parse_poly_list(text: &str, ring: &Arc<Ring>) -> DslResult<Vec<SuperPoly>> {
    standalone(text, ring.field(), |p| {
        let mut out = Vec::new();
        if p.peek().tok == Tok::Eof {
            return Ok(out);
        }
        out.push(p.poly(ring)?);
        while p.is_sym(',') || p.is_sym(';') {
            p.next();
            out.push(p.poly(ring)?);
        }
        Ok(out)
    })
}

/// `x -> 0; y -> x`.
pub fn parse_derivation(text: &str, ring: &Arc<Ring>) -> DslResult<Vec<SuperPoly>> {
    standalone(text, ring.field(), |p| p.derivation_body(ring))
}

/// `x = 1, z = -1/2`.
pub fn parse_point(text: &str, ring: &Arc<Ring>) -> DslResult<BTreeMap<String, Scalar>> {
    standalone(text, ring.field(), |p| p.point_body(ring))
}

/// Integer matrix such as `[[1, 0], [0, 2]]`.
pub fn parse_scalar_matrix(text: &str, field: Field) -> DslResult<ScalarMat> {
    standalone(text, field, |p| p.scalar_matrix())
}

/// Matrix of polynomials in `ring`.
pub fn parse_poly_matrix(text: &str, ring: &Arc<Ring>) -> DslResult<Vec<Vec<SuperPoly>>> {
    standalone(text, ring.field(), |p| p.matrix(|q| q.poly(ring)))
}

// rendering

pub fn render_algebra(a: &SuperAlgebra) -> String {
    let r = a.ring();
    let mut s = format!("superalgebra {}\n", a.name());
    if r.num_even() > 0 {
        s += &format!("  even {}\n", r.even_names().join(" "));
    }
    if r.num_odd() > 0 {
        s += &format!("  odd {}\n", r.odd_names().join(" "));
    }
    if !a.relations().is_empty() {
        let rels: Vec<String> = a.relations().iter().map(|p| p.to_string()).collect();
        s += &format!("  rel {}\n", rels.join("; "));
    }
    s += "end\n";
    s
}

pub fn render_derivation(ring: &Ring, d: &DerivationDecl) -> String {
    let names = ring.even_names().iter().chain(ring.odd_names());
    let parts: Vec<String> = names
        .zip(&d.images)
        .map(|(n, p)| format!("{n} -> {p}"))
        .collect();
    format!("derivation {}: {} end\n", d.name, parts.join("; "))
}

pub fn render_point(point: &BTreeMap<String, Scalar>, ring: &Ring) -> String {
    let parts: Vec<String> = ring
        .even_names()
        .iter()
        .filter_map(|n| point.get(n).map(|v| format!("{n} = {v}")))
        .collect();
    format!("point {}\n", parts.join(", "))
}

pub fn render_pair(p: &HcPair) -> String {
    let n = p.group.size();
    let mut s = format!("hcpair {}\n  n {n}\n", p.name);
    if !p.group.equations().is_empty() {
        let eqs: Vec<String> = p.group.equations().iter().map(|e| e.to_string()).collect();
        s += &format!("  eq {}\n", eqs.join("; "));
    }
    s += &format!("  rho {}\n", crate::hcgroup::render_poly_mat(&p.rho));
    for i in 0..p.t {
        for j in 0..p.t {
            if !crate::hcgroup::is_zero_mat(&p.bracket[i][j]) {
                s += &format!(
                    "  bracket {} {} = {}\n",
                    i + 1,
                    j + 1,
                    render_scalar_mat(&p.bracket[i][j])
                );
            }
        }
    }
    let derived: Vec<ScalarMat> = p.group.lie_basis().iter().map(|x| p.linearize(x)).collect();
    for (k, (given, lin)) in p.drho.iter().zip(&derived).enumerate() {
        if given != lin {
            s += &format!("  drho {} = {}\n", k + 1, render_scalar_mat(given));
        }
    }
    for kp in p.k_points.iter().skip(1) {
        s += &format!("  kpoint {}\n", render_scalar_mat(kp));
    }
    s += "end\n";
    s
}

pub fn render_document(doc: &Document) -> String {
    match doc {
        Document::Pair(p) => render_pair(p),
        Document::Algebra(a) => {
            let mut s = render_algebra(&a.algebra);
            if let Some(d) = &a.derivation {
                s += &render_derivation(a.algebra.ring(), d);
            }
            for pt in &a.points {
                s += &render_point(pt, a.algebra.ring());
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn algebra_examples() {
        let a = parse_algebra("superalgebra A even x odd y rel x*y end", Q)
            .unwrap()
            .algebra;
        assert_eq!(a.to_string(), "k[x | y]/(x*y)");
        let b = parse_algebra("superalgebra B odd y1 y2 end", Q)
            .unwrap()
            .algebra;
        assert_eq!(b.ring().num_odd(), 2);
        assert!(b.relations().is_empty());
    }

    #[test]
    fn dangling_operator_is_reported() {
        let e = parse_algebra("superalgebra A even x odd y\n  rel x* end", Q).unwrap_err();
        assert_eq!((e.line, e.col), (2, 10));
        assert!(e.message.contains("expected a term"), "{e}");
    }

    #[test]
    fn semantic_errors_carry_spans() {
        let e = parse_algebra("superalgebra A even x odd y\nrel x*z end", Q).unwrap_err();
        assert_eq!((e.line, e.col), (2, 7));
        // mixed-parity relations are split into their components
        let a = parse_algebra("superalgebra A even x odd y rel x + y end", Q)
            .unwrap()
            .algebra;
        assert_eq!(a.relations().len(), 2);
    }

    #[test]
    fn juxtaposed_odd_names() {
        let a = parse_algebra(
            "superalgebra A even x odd y1 y2 y3 rel x^2 - y1y2; 3*x*y3y1 end",
            Q,
        )
        .unwrap()
        .algebra;
        assert_eq!(a.relations()[0].to_string(), "x^2 - y1y2");
        assert_eq!(a.relations()[1].to_string(), "-3*x*y1y3");
        let e = parse_algebra("superalgebra A odd a b ab end", Q).unwrap_err();
        assert!(e.message.contains("concatenation"), "{e}");
    }

    #[test]
    fn rationals_and_prime_fields() {
        let a = parse_algebra("superalgebra A even x rel 1/2*x - 3 end", Q)
            .unwrap()
            .algebra;
        assert_eq!(a.relations()[0].to_string(), "1/2*x - 3");
        let f7 = Field::prime(7).unwrap();
        let b = parse_algebra("superalgebra A even x rel 1/2*x - 3 end", f7)
            .unwrap()
            .algebra;
        assert_eq!(b.relations()[0].to_string(), "4*x + 4");
        assert!(parse_algebra("superalgebra A even x rel 1/7*x end", f7).is_err());
    }

    #[test]
    fn action_document() {
        let text = "superalgebra A even x odd y end\nderivation phi: x -> 0; y -> x end\npoint x = 1\npoint x = -1/2";
        let doc = parse_algebra(text, Q).unwrap();
        let d = doc.derivation.as_ref().unwrap();
        assert_eq!(d.images[1].to_string(), "x");
        assert_eq!(doc.points.len(), 2);
        assert_eq!(
            doc.points[1]["x"],
            Q.ratio(&BigInt::from(-1), &BigInt::from(2)).unwrap()
        );
    }

    #[test]
    fn pair_document() {
        let text = "hcpair u\n n 2\n eq g11 - 1; g22 - 1; g21\n rho [[1]]\n bracket 1 1 = [[0, 2], [0, 0]]\nend";
        let p = parse_pair(text, Q).unwrap();
        assert!(p.validate().is_valid());
        assert!(!p.is_graded());
        let again = parse_pair(&render_pair(&p), Q).unwrap();
        assert_eq!(render_pair(&again), render_pair(&p));
    }

    #[test]
    fn round_trip() {
        let text = "superalgebra A\n  even x z\n  odd y1 y2\n  rel x^2 - y1y2; -x*y2 + z*y1\nend\nderivation phi: x -> 0; z -> 0; y1 -> 1; y2 -> 0 end\npoint x = 0, z = 0\n";
        let doc = parse_document(text, Q).unwrap();
        let rendered = render_document(&doc);
        assert_eq!(rendered, text);
    }

    #[test]
    fn flag_parsers() {
        let r = Ring::new(&["x"], &["y1", "y2"], Q).unwrap();
        assert_eq!(parse_poly_list("y1, y2", &r).unwrap().len(), 2);
        assert_eq!(
            parse_derivation("x->0; y1->1", &r).unwrap()[1].to_string(),
            "1"
        );
        assert!(parse_point("x=2", &r).is_ok());
        assert!(parse_point("y1=2", &r).is_err());
        assert!(parse_poly("x +", &r).is_err());
    }
}
