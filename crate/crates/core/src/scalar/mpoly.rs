//! Sparse multivariate polynomials over `ℚ(i)` in named parameters.
//!
//! Terms are kept sorted by graded-lex order, leading term first. Variables
//! are ordered by name; the alphabetically first variable is the most
//! significant one in the lex tie-break.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::gauss::Gauss;

/// Exponent vector as a sorted list of `(name, exponent > 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PMono(pub Vec<(Arc<str>, u32)>);

impl PMono {
    pub fn one() -> Self {
        PMono(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        PMono(vec![(Arc::from(name), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(n, _)| &**n == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, o: &PMono) -> PMono {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            match self.0[i].0.cmp(&o.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(o.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + o.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        PMono(out)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &PMono) -> Option<PMono> {
        let mut out = Vec::new();
        let mut j = 0;
        for (n, e) in &self.0 {
            let mut e = *e;
            if j < o.0.len() && o.0[j].0 == *n {
                if o.0[j].1 > e {
                    return None;
                }
                e -= o.0[j].1;
                j += 1;
            } else if j < o.0.len() && o.0[j].0 < *n {
                return None;
            }
            if e > 0 {
                out.push((n.clone(), e));
            }
        }
        if j < o.0.len() {
            return None;
        }
        Some(PMono(out))
    }

    /// Removes `name` and returns its exponent.
    pub fn split_off(&self, name: &str) -> (u32, PMono) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|(n, x)| {
                if &**n == name {
                    e = *x;
                    false
                } else {
                    true
                }
            })
            .cloned()
            .collect();
        (e, PMono(rest))
    }
}

/// Graded lex: total degree first, then lex with alphabetical variable priority.
pub fn grlex(a: &PMono, b: &PMono) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() && j < b.0.len() {
        match a.0[i].0.cmp(&b.0[j].0) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => match a.0[i].1.cmp(&b.0[j].1) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                o => return o,
            },
        }
    }
    match (i < a.0.len(), j < b.0.len()) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => Ordering::Equal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    /// Descending grlex, no zero coefficients.
    pub terms: Vec<(PMono, Gauss)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn constant(c: Gauss) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(PMono::one(), c)],
            }
        }
    }

    pub fn one() -> Self {
        Self::constant(Gauss::one())
    }

    pub fn var(name: &str) -> Self {
        MPoly {
            terms: vec![(PMono::var(name), Gauss::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_const(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn const_value(&self) -> Option<Gauss> {
        match self.terms.as_slice() {
            [] => Some(Gauss::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(PMono, Gauss)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn vars(&self) -> Vec<Arc<str>> {
        let mut v: Vec<Arc<str>> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.0.iter().map(|(n, _)| n.clone()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(name))
            .max()
            .unwrap_or(0)
    }

    fn from_unsorted(mut terms: Vec<(PMono, Gauss)>) -> Self {
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        let mut out: Vec<(PMono, Gauss)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { terms: out }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match grlex(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&o.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        MPoly { terms: out }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Gauss) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &PMono, c: &Gauss) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        // Multiplying by a monomial preserves a monomial order.
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(a, x)| (a.mul(m), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        if self.is_zero() || o.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.const_value() {
            return o.scale(&c);
        }
        if let Some(c) = o.const_value() {
            return self.scale(&c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                terms.push((a.mul(b), x.mul(y)));
            }
        }
        Self::from_unsorted(terms)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut r = MPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact quotient, or `None` if `o` does not divide `self`.
    pub fn div_exact(&self, o: &MPoly) -> Option<MPoly> {
        assert!(!o.is_zero(), "division by zero polynomial");
        if let Some(c) = o.const_value() {
            return Some(self.scale(&c.inv()));
        }
        let (lm, lc) = o.leading().unwrap().clone();
        let lci = lc.inv();
        let mut q = Vec::new();
        let mut r = self.clone();
        while let Some((m, c)) = r.leading().cloned() {
            let t = m.div(&lm)?;
            let tc = c.mul(&lci);
            r = r.sub(&o.mul_term(&t, &tc));
            q.push((t, tc));
        }
        Some(Self::from_unsorted(q))
    }

    /// Coefficients with respect to `name`, indexed by exponent.
    pub fn to_univariate(&self, name: &str) -> Vec<MPoly> {
        let mut coeffs: Vec<Vec<(PMono, Gauss)>> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(name);
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Vec::new());
            }
            coeffs[e].push((rest, c.clone()));
        }
        coeffs.into_iter().map(Self::from_unsorted).collect()
    }

    pub fn from_univariate(coeffs: &[MPoly], name: &str) -> MPoly {
        let mut acc = MPoly::zero();
        let x = PMono::var(name);
        let mut xp = PMono::one();
        for c in coeffs {
            acc = acc.add(&c.mul_term(&xp, &Gauss::one()));
            xp = xp.mul(&x);
        }
        acc
    }

    /// Monic gcd (the zero polynomial only for `gcd(0, 0)`).
    pub fn gcd(&self, o: &MPoly) -> MPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_const() || o.is_const() {
            return MPoly::one();
        }
        if self == o {
            return self.monic();
        }
        let mut vars = self.vars();
        vars.extend(o.vars());
        vars.sort();
        let x = vars[0].clone();
        let fu = self.to_univariate(&x);
        let gu = o.to_univariate(&x);
        let cf = content(&fu);
        let cg = content(&gu);
        let c = cf.gcd(&cg);
        let mut a = trim(primitive(&fu, &cf));
        let mut b = trim(primitive(&gu, &cg));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = prem(&a, &b);
            a = b;
            b = if r.is_empty() {
                Vec::new()
            } else {
                let cr = content(&r);
                trim(primitive(&r, &cr))
            };
        }
        let cont_a = content(&a);
        let pa = primitive(&a, &cont_a);
        c.mul(&MPoly::from_univariate(&pa, &x)).monic()
    }

    pub fn substitute(&self, name: &str, value: &MPoly) -> MPoly {
        let u = self.to_univariate(name);
        let mut acc = MPoly::zero();
        for c in u.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, m: &PMono, c: &Gauss, first: bool) -> fmt::Result {
        let neg = c.is_real() && c.re.is_negative();
        let mag = if neg { c.neg() } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let vars: Vec<String> =
            m.0.iter()
                .map(|(n, e)| {
                    if *e == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
        if m.is_one() {
            write!(f, "{mag}")
        } else if mag.is_one() {
            write!(f, "{}", vars.join("*"))
        } else {
            write!(f, "{mag}*{}", vars.join("*"))
        }
    }
}

fn content(u: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_const() && !g.is_zero() {
            return MPoly::one();
        }
    }
    if g.is_zero() {
        MPoly::one()
    } else {
        g
    }
}

fn primitive(u: &[MPoly], cont: &MPoly) -> Vec<MPoly> {
    u.iter()
        .map(|c| c.div_exact(cont).expect("content divides"))
        .collect()
}

fn trim(mut v: Vec<MPoly>) -> Vec<MPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let n = b.len() - 1;
    let lb = b[n].clone();
    if r.len() < b.len() {
        return r;
    }
    let mut e = r.len() - b.len() + 1;
    while !r.is_empty() && r.len() > n {
        let d = r.len() - 1;
        let lr = r[d].clone();
        let shift = d - n;
        let mut next: Vec<MPoly> = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        r = trim(next);
        e -= 1;
    }
    let f = lb.pow(e as u32);
    r.iter().map(|c| c.mul(&f)).collect()
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            Self::fmt_term(f, m, c, k == 0)?;
        }
        Ok(())
    }
}
