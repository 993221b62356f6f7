//! A line-oriented text format for algebras and a canonical JSON export.
//!
//! ```text
//! algebra Vir
//! basis L even
//! bracket L L = (d + 2*l) L
//! ```
//!
//! Expressions are polynomials in `d` (∂), `l` (λ), `i`, rationals,
//! declared parameters and basis names; juxtaposition multiplies.
//! Undeclared ordered pairs are filled from their mirror by skew-symmetry,
//! or are zero when neither is given.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value as Json};

use crate::conformal::{parity_name, skew_transform, Algebra, Combo};
use crate::cpoly::{CPoly, Mono, D, LAMBDA};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(line: usize, text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            out.push(Token {
                tok: Tok::Num(chars[start..k].iter().collect()),
                col,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len()
                && (chars[k].is_alphanumeric() || matches!(chars[k], '_' | '\'' | '.'))
            {
                k += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                col,
            });
        } else if "+-*/^()=,".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                col,
            });
            k += 1;
        } else {
            return Err(perr(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

/// `scalar + Σ labels`, each coefficient a polynomial in `∂, λ`.
#[derive(Clone, Debug, Default)]
struct Value {
    scalar: CPoly,
    labels: BTreeMap<usize, CPoly>,
}

impl Value {
    fn constant(p: CPoly) -> Value {
        Value {
            scalar: p,
            labels: BTreeMap::new(),
        }
    }

    fn label(k: usize) -> Value {
        Value {
            scalar: CPoly::zero(),
            labels: BTreeMap::from([(k, CPoly::one())]),
        }
    }

    fn add(mut self, o: Value) -> Value {
        self.scalar = self.scalar.add(&o.scalar);
        for (k, p) in o.labels {
            let e = self.labels.entry(k).or_default();
            *e = e.add(&p);
        }
        self.labels.retain(|_, p| !p.is_zero());
        self
    }

    fn neg(self) -> Value {
        Value {
            scalar: self.scalar.neg(),
            labels: self.labels.into_iter().map(|(k, p)| (k, p.neg())).collect(),
        }
    }

    fn is_scalar(&self) -> bool {
        self.labels.is_empty()
    }

    fn scale(self, q: &CPoly) -> Value {
        let mut v = Value {
            scalar: self.scalar.mul(q),
            labels: self
                .labels
                .into_iter()
                .map(|(k, p)| (k, p.mul(q)))
                .collect(),
        };
        v.labels.retain(|_, p| !p.is_zero());
        v
    }

    fn constant_scalar(&self) -> Option<Scalar> {
        if !self.is_scalar() {
            return None;
        }
        match self.scalar.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }
}

/// Names an expression may refer to.
struct Scope<'a> {
    params: &'a [String],
    basis: &'a HashMap<String, usize>,
    /// Unknown identifiers become parameters instead of errors.
    open: bool,
}

struct ExprParser<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
    scope: &'a Scope<'a>,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        perr(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<Value> {
        let mut v = self.term()?;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            v = if c == '+' { v.add(t) } else { v.add(t.neg()) };
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Value> {
        if let Some(Tok::Sym('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.term()?.neg());
        }
        let mut v = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                    let r = self.power()?;
                    v = self.mul(v, r)?;
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    let col = self.col();
                    let r = self.power()?;
                    let s = r
                        .constant_scalar()
                        .ok_or_else(|| perr(self.line, col, "divisor must be a scalar"))?;
                    let inv = s
                        .inv()
                        .map_err(|_| perr(self.line, col, "division by zero"))?;
                    v = v.scale(&CPoly::constant(inv));
                }
                Some(Tok::Ident(_) | Tok::Num(_) | Tok::Sym('(')) => {
                    let r = self.power()?;
                    v = self.mul(v, r)?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        match (a.is_scalar(), b.is_scalar()) {
            (true, _) => Ok(b.scale(&a.scalar)),
            (_, true) => Ok(a.scale(&b.scalar)),
            _ => Err(self.err("product of two basis elements")),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(self.err("expected an integer exponent"));
            };
            let e: u32 = n.parse().map_err(|_| self.err("exponent too large"))?;
            if !base.is_scalar() {
                return Err(self.err("power of a basis element"));
            }
            self.pos += 1;
            return Ok(Value::constant(base.scalar.pow(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value> {
        let col = self.col();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Value::constant(CPoly::constant(parse_integer(&n)))),
            Tok::Sym('(') => {
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            Tok::Ident(name) => match name.as_str() {
                "d" => Ok(Value::constant(CPoly::var(D))),
                "l" => Ok(Value::constant(CPoly::var(LAMBDA))),
                "i" => Ok(Value::constant(CPoly::constant(Scalar::i()))),
                _ if self.scope.params.contains(&name) || self.scope.open => {
                    Ok(Value::constant(CPoly::constant(Scalar::param(&name))))
                }
                _ => match self.scope.basis.get(&name) {
                    Some(&k) => Ok(Value::label(k)),
                    None => Err(perr(self.line, col, format!("unknown identifier '{name}'"))),
                },
            },
            Tok::Sym(c) => Err(perr(self.line, col, format!("unexpected '{c}'"))),
        }
    }
}

fn parse_integer(digits: &str) -> Scalar {
    let ten = Scalar::int(10);
    digits.chars().fold(Scalar::zero(), |acc, c| {
        acc.mul(&ten)
            .add(&Scalar::int(c.to_digit(10).unwrap_or(0) as i64))
    })
}

fn parse_expr(line: usize, end_col: usize, toks: &[Token], scope: &Scope) -> Result<Value> {
    let mut p = ExprParser {
        toks,
        pos: 0,
        line,
        end_col,
        scope,
    };
    let v = p.expr()?;
    if p.pos < toks.len() {
        return Err(p.err("unexpected token after expression"));
    }
    Ok(v)
}

/// Parses a scalar expression such as `-1/2*a + i`; unknown names are parameters.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let toks = lex(1, text)?;
    let basis = HashMap::new();
    let scope = Scope {
        params: &[],
        basis: &basis,
        open: true,
    };
    let v = parse_expr(1, text.chars().count() + 1, &toks, &scope)?;
    v.constant_scalar()
        .ok_or_else(|| perr(1, 1, "expected a scalar"))
}

/// The parsed contents of a source file, before table assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSource {
    pub name: String,
    pub params: Vec<String>,
    pub basis: Vec<(String, u8)>,
    /// Declared ordered pairs only.
    pub brackets: BTreeMap<(usize, usize), Combo>,
}

impl AlgebraSource {
    pub fn build(&self) -> Result<Algebra> {
        let mut table: HashMap<(usize, usize), Combo> = self.brackets.clone().into_iter().collect();
        for (&(i, j), c) in &self.brackets {
            if !self.brackets.contains_key(&(j, i)) {
                table.insert((j, i), skew_transform(c, self.basis[i].1, self.basis[j].1));
            }
        }
        let params: Vec<&str> = self.params.iter().map(String::as_str).collect();
        Ok(Algebra::from_table(&self.name, &self.basis, table)?.with_params(&params))
    }
}

const RESERVED: [&str; 7] = ["d", "l", "i", "algebra", "param", "basis", "bracket"];

fn ident_at(toks: &[Token], k: usize, line: usize, end: usize, what: &str) -> Result<String> {
    match toks.get(k) {
        Some(Token {
            tok: Tok::Ident(s), ..
        }) => Ok(s.clone()),
        Some(t) => Err(perr(line, t.col, format!("expected {what}"))),
        None => Err(perr(line, end, format!("expected {what}"))),
    }
}

pub fn parse_source(text: &str) -> Result<AlgebraSource> {
    let mut src = AlgebraSource {
        name: String::new(),
        params: vec![],
        basis: vec![],
        brackets: BTreeMap::new(),
    };
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut named = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let end = raw.chars().count() + 1;
        if raw.split_whitespace().next() == Some("algebra") {
            if named {
                return Err(perr(
                    line,
                    raw.find('a').unwrap_or(0) + 1,
                    "algebra declared twice",
                ));
            }
            let start = raw.find("algebra").unwrap_or(0) + "algebra".len();
            let name = raw[start..].split('#').next().unwrap_or("").trim();
            if name.is_empty() {
                return Err(perr(line, end, "expected an algebra name"));
            }
            src.name = name.to_string();
            named = true;
            continue;
        }
        let toks = lex(line, raw)?;
        let Some(first) = toks.first() else { continue };
        let Tok::Ident(kw) = &first.tok else {
            return Err(perr(line, first.col, "expected a keyword"));
        };
        let check_new =
            |name: &str, col: usize, src: &AlgebraSource, index: &HashMap<String, usize>| {
                if RESERVED.contains(&name) {
                    Err(perr(line, col, format!("'{name}' is reserved")))
                } else if index.contains_key(name) || src.params.iter().any(|p| p == name) {
                    Err(perr(line, col, format!("'{name}' is already declared")))
                } else {
                    Ok(())
                }
            };
        match kw.as_str() {
            "param" => {
                for t in &toks[1..] {
                    match &t.tok {
                        Tok::Sym(',') => {}
                        Tok::Ident(p) => {
                            check_new(p, t.col, &src, &index)?;
                            src.params.push(p.clone());
                        }
                        _ => return Err(perr(line, t.col, "expected a parameter name")),
                    }
                }
            }
            "basis" => {
                let mut k = 1;
                loop {
                    let name = ident_at(&toks, k, line, end, "a basis name")?;
                    check_new(&name, toks[k].col, &src, &index)?;
                    let parity = match ident_at(&toks, k + 1, line, end, "'even' or 'odd'")?
                        .as_str()
                    {
                        "even" => 0,
                        "odd" => 1,
                        _ => return Err(perr(line, toks[k + 1].col, "expected 'even' or 'odd'")),
                    };
                    index.insert(name.clone(), src.basis.len());
                    src.basis.push((name, parity));
                    k += 2;
                    match toks.get(k) {
                        None => break,
                        Some(Token {
                            tok: Tok::Sym(','), ..
                        }) => k += 1,
                        Some(t) => return Err(perr(line, t.col, "expected ','")),
                    }
                }
            }
            "bracket" => {
                let mut ends = [0usize; 2];
                for (slot, k) in [1usize, 2].into_iter().enumerate() {
                    let name = ident_at(&toks, k, line, end, "a basis name")?;
                    ends[slot] = *index.get(&name).ok_or_else(|| {
                        perr(line, toks[k].col, format!("unknown basis element '{name}'"))
                    })?;
                }
                match toks.get(3) {
                    Some(Token {
                        tok: Tok::Sym('='), ..
                    }) => {}
                    Some(t) => return Err(perr(line, t.col, "expected '='")),
                    None => return Err(perr(line, end, "expected '='")),
                }
                let (i, j) = (ends[0], ends[1]);
                if src.brackets.contains_key(&(i, j)) {
                    return Err(perr(line, first.col, "bracket declared twice"));
                }
                let scope = Scope {
                    params: &src.params,
                    basis: &index,
                    open: false,
                };
                let v = parse_expr(line, end, &toks[4..], &scope)?;
                let col = toks.get(4).map_or(end, |t| t.col);
                if !v.scalar.is_zero() {
                    return Err(perr(
                        line,
                        col,
                        "bracket value has a term without a basis element",
                    ));
                }
                let want = src.basis[i].1 ^ src.basis[j].1;
                if let Some((&k, _)) = v.labels.iter().find(|(k, _)| src.basis[**k].1 != want) {
                    return Err(perr(
                        line,
                        col,
                        format!(
                            "parity mismatch: '{}' is not {}",
                            src.basis[k].0,
                            parity_name(want)
                        ),
                    ));
                }
                src.brackets
                    .insert((i, j), Combo(v.labels.into_iter().collect()));
            }
            other => return Err(perr(line, first.col, format!("unknown keyword '{other}'"))),
        }
    }
    if !named {
        return Err(perr(1, 1, "missing 'algebra NAME'"));
    }
    Ok(src)
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    parse_source(text)?.build()
}

fn scalar_text(s: &Scalar) -> String {
    s.to_string()
}

/// Canonical JSON document: sorted keys, string scalars, pairs `i ≤ j` with
/// nonzero bracket.
pub fn export_structure(alg: &Algebra) -> String {
    let basis: Vec<Json> = alg
        .labels
        .iter()
        .map(|l| json!({"name": l.name, "parity": parity_name(l.parity)}))
        .collect();
    let mut brackets = Vec::new();
    for i in 0..alg.rank() {
        for j in i..alg.rank() {
            let c = alg.entry(i, j);
            if c.is_zero() {
                continue;
            }
            let mut terms = Vec::new();
            for (k, p) in &c.0 {
                for (m, s) in &p.terms {
                    terms.push(json!({
                        "dpow": m.exp(D),
                        "lpow": m.exp(LAMBDA),
                        "label": alg.labels[*k].name,
                        "scalar": scalar_text(s),
                    }));
                }
            }
            brackets.push(
                json!({"left": alg.labels[i].name, "right": alg.labels[j].name, "terms": terms}),
            );
        }
    }
    let mut params = alg.params.clone();
    params.sort();
    let doc = json!({"name": alg.name, "params": params, "basis": basis, "brackets": brackets});
    let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
    s.push('\n');
    s
}

fn export_err(msg: impl Into<String>) -> Error {
    Error::Export(msg.into())
}

fn field<'a>(v: &'a Json, key: &str) -> Result<&'a Json> {
    v.get(key)
        .ok_or_else(|| export_err(format!("missing field '{key}'")))
}

fn str_field<'a>(v: &'a Json, key: &str) -> Result<&'a str> {
    field(v, key)?
        .as_str()
        .ok_or_else(|| export_err(format!("'{key}' must be a string")))
}

fn arr_field<'a>(v: &'a Json, key: &str) -> Result<&'a Vec<Json>> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| export_err(format!("'{key}' must be an array")))
}

/// Inverse of [`export_structure`].
pub fn import_structure(text: &str) -> Result<Algebra> {
    let doc: Json = serde_json::from_str(text).map_err(|e| export_err(e.to_string()))?;
    let mut src = AlgebraSource {
        name: str_field(&doc, "name")?.to_string(),
        params: vec![],
        basis: vec![],
        brackets: BTreeMap::new(),
    };
    for p in arr_field(&doc, "params")? {
        src.params.push(
            p.as_str()
                .ok_or_else(|| export_err("parameter names must be strings"))?
                .to_string(),
        );
    }
    let mut index = HashMap::new();
    for b in arr_field(&doc, "basis")? {
        let parity = match str_field(b, "parity")? {
            "even" => 0,
            "odd" => 1,
            other => return Err(export_err(format!("unknown parity '{other}'"))),
        };
        let name = str_field(b, "name")?.to_string();
        index.insert(name.clone(), src.basis.len());
        src.basis.push((name, parity));
    }
    let look = |n: &str| {
        index
            .get(n)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(n.to_string()))
    };
    for b in arr_field(&doc, "brackets")? {
        let (i, j) = (look(str_field(b, "left")?)?, look(str_field(b, "right")?)?);
        let mut acc: BTreeMap<usize, CPoly> = BTreeMap::new();
        for t in arr_field(b, "terms")? {
            let pow = |k: &str| -> Result<u32> {
                field(t, k)?
                    .as_u64()
                    .map(|x| x as u32)
                    .ok_or_else(|| export_err(format!("'{k}' must be an integer")))
            };
            let s = parse_scalar(str_field(t, "scalar")?)?;
            let m = Mono::from_exps([pow("dpow")?, pow("lpow")?, 0, 0]);
            let e = acc.entry(look(str_field(t, "label")?)?).or_default();
            *e = e.add(&CPoly::term(m, s));
        }
        acc.retain(|_, p| !p.is_zero());
        src.brackets
            .insert((i, j), Combo(acc.into_iter().collect()));
    }
    src.build()
}

/// Renders an algebra in the source format, one bracket per pair `i ≤ j`.
pub fn to_source(alg: &Algebra) -> String {
    let mut out = format!("algebra {}\n", alg.name);
    if !alg.params.is_empty() {
        out += &format!("param {}\n", alg.params.join(", "));
    }
    for l in &alg.labels {
        out += &format!("basis {} {}\n", l.name, parity_name(l.parity));
    }
    for i in 0..alg.rank() {
        for j in i..alg.rank() {
            let c = alg.entry(i, j);
            if c.is_zero() {
                continue;
            }
            let mut terms = Vec::new();
            for (k, p) in &c.0 {
                for (m, s) in &p.terms {
                    terms.push(format!(
                        "({})*d^{}*l^{}*{}",
                        scalar_text(s),
                        m.exp(D),
                        m.exp(LAMBDA),
                        alg.labels[*k].name
                    ));
                }
            }
            out += &format!(
                "bracket {} {} = {}\n",
                alg.labels[i].name,
                alg.labels[j].name,
                terms.join(" + ")
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_parse() {
        assert_eq!(parse_scalar("-1/2").unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(
            parse_scalar("(1 + 2*i)").unwrap(),
            Scalar::int(1).add(&Scalar::i().mul(&Scalar::int(2)))
        );
        let a = Scalar::param("a");
        assert_eq!(
            parse_scalar("a^2 - 3/4*a").unwrap(),
            a.mul(&a).sub(&a.mul(&Scalar::ratio(3, 4)))
        );
        assert!(parse_scalar("1/0").is_err());
    }

    #[test]
    fn lexer_positions() {
        let t = lex(1, "bracket L G = x # c").unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t[4].col, 15);
    }
}
