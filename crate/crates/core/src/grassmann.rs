//! The Grassmann algebra `∧(N)` and its derivation superalgebra `W(N)`.
//!
//! Monomials `ξ_S` are bitmasks over `{1..N}`. Every Koszul sign is obtained
//! by counting the transpositions needed to sort an index list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_N: usize = 16;

/// Index set `S ⊆ {1..N}`; bit `k-1` set iff `k ∈ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GMono(pub u32);

impl GMono {
    pub const ONE: GMono = GMono(0);

    pub fn from_indices(idx: &[usize]) -> GMono {
        let mut m = 0;
        for &i in idx {
            assert!((1..=MAX_N).contains(&i));
            m |= 1 << (i - 1);
        }
        GMono(m)
    }

    pub fn xi(i: usize) -> GMono {
        Self::from_indices(&[i])
    }

    /// `ξ_1 ⋯ ξ_N`
    pub fn top(n: usize) -> GMono {
        GMono(((1u64 << n) - 1) as u32)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn parity(self) -> u8 {
        (self.degree() % 2) as u8
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=MAX_N).filter(|&i| self.contains(i)).collect()
    }

    /// All monomials of `∧(n)` in canonical (degree, lex) order.
    pub fn all(n: usize) -> Vec<GMono> {
        let mut v: Vec<GMono> = (0..(1u32 << n)).map(GMono).collect();
        v.sort();
        v
    }

    /// Label text used for basis names: `one`, `x1`, `x1x3`.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "one".into();
        }
        self.indices().iter().map(|i| format!("x{i}")).collect()
    }

    /// `ξ_S ξ_T = sign · ξ_{S∪T}`, or `None` when the sets meet.
    pub fn mul(self, o: GMono) -> Option<(i64, GMono)> {
        if self.0 & o.0 != 0 {
            return None;
        }
        // Inversions in the concatenated list S ++ T.
        let mut inv = 0;
        for s in self.indices() {
            inv += o.indices().iter().filter(|&&t| t < s).count();
        }
        Some((if inv % 2 == 0 { 1 } else { -1 }, GMono(self.0 | o.0)))
    }

    /// `∂_i ξ_S`, with sign `(-1)^(position of i in S - 1)`.
    pub fn partial(self, i: usize) -> Option<(i64, GMono)> {
        if !self.contains(i) {
            return None;
        }
        let before = self.indices().iter().filter(|&&s| s < i).count();
        Some((
            if before % 2 == 0 { 1 } else { -1 },
            GMono(self.0 & !(1 << (i - 1))),
        ))
    }
}

impl Ord for GMono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.indices().cmp(&o.indices()))
    }
}

impl PartialOrd for GMono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn check_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(a, b))
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, n })
    }
}

fn insert(map: &mut BTreeMap<GMono, Scalar>, m: GMono, c: Scalar) {
    let e = map.entry(m).or_default();
    e.add_assign(&c);
    if e.is_zero() {
        map.remove(&m);
    }
}

/// An element of `∧(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannElement {
    pub n: usize,
    pub terms: BTreeMap<GMono, Scalar>,
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Self {
        GrassmannElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, GMono::ONE, Scalar::one())
    }

    pub fn monomial(n: usize, m: GMono, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn xi(n: usize, i: usize) -> Self {
        Self::monomial(n, GMono::xi(i), Scalar::one())
    }

    /// `ν = ξ_1 ⋯ ξ_N`
    pub fn top(n: usize) -> Self {
        Self::monomial(n, GMono::top(n), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity if homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self.terms.keys().map(|m| m.parity());
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_n(self.n, o.n)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            insert(&mut r.terms, *m, c.clone());
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut r = Self::zero(self.n);
        for (m, x) in &self.terms {
            insert(&mut r.terms, *m, x.mul(c));
        }
        r
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*{}", c.paren_string(), m.name()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exterior product with Koszul signs.
pub fn gmul(f: &GrassmannElement, g: &GrassmannElement) -> Result<GrassmannElement> {
    check_n(f.n, g.n)?;
    let mut r = GrassmannElement::zero(f.n);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            if let Some((s, m)) = a.mul(*b) {
                insert(&mut r.terms, m, x.mul(y).mul(&Scalar::int(s)));
            }
        }
    }
    Ok(r)
}

/// The odd derivation `∂/∂ξ_i`.
pub fn gpartial(i: usize, f: &GrassmannElement) -> Result<GrassmannElement> {
    check_index(i, f.n)?;
    let mut r = GrassmannElement::zero(f.n);
    for (m, c) in &f.terms {
        if let Some((s, rest)) = m.partial(i) {
            insert(&mut r.terms, rest, c.mul(&Scalar::int(s)));
        }
    }
    Ok(r)
}

/// `(ξ_{i1} ξ_{i2} ⋯)* = ∂_{i1} ∂_{i2} ⋯ ν`, extended linearly.
pub fn hodge_star(f: &GrassmannElement, n: usize) -> Result<GrassmannElement> {
    check_n(f.n, n)?;
    let mut r = GrassmannElement::zero(n);
    for (m, c) in &f.terms {
        let mut v = GrassmannElement::top(n);
        for i in m.indices().into_iter().rev() {
            v = gpartial(i, &v)?;
        }
        r = r.add(&v.scale(c))?;
    }
    Ok(r)
}

/// An element `Σ c_{S,i} ξ_S ∂_i` of `W(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldElement {
    pub n: usize,
    pub terms: BTreeMap<(GMono, usize), Scalar>,
}

impl VectorFieldElement {
    pub fn zero(n: usize) -> Self {
        VectorFieldElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `c ξ_S ∂_i`
    pub fn monomial(n: usize, s: GMono, i: usize, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert((s, i), c);
        }
        e
    }

    /// `P ∂_i` for a Grassmann coefficient `P`.
    pub fn from_coefficient(p: &GrassmannElement, i: usize) -> Result<Self> {
        check_index(i, p.n)?;
        let mut e = Self::zero(p.n);
        for (m, c) in &p.terms {
            e.terms.insert((*m, i), c.clone());
        }
        Ok(e)
    }

    /// The Euler field `Σ ξ_i ∂_i`.
    pub fn euler(n: usize) -> Self {
        let mut e = Self::zero(n);
        for i in 1..=n {
            e.terms.insert((GMono::xi(i), i), Scalar::one());
        }
        e
    }

    /// Coefficient of `∂_i`.
    pub fn component(&self, i: usize) -> GrassmannElement {
        let mut g = GrassmannElement::zero(self.n);
        for ((m, j), c) in &self.terms {
            if *j == i {
                g.terms.insert(*m, c.clone());
            }
        }
        g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn parity(&self) -> Option<u8> {
        let mut ps = self.terms.keys().map(|(m, _)| 1 - m.parity());
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_n(self.n, o.n)?;
        let mut r = self.clone();
        for (k, c) in &o.terms {
            let e = r.terms.entry(*k).or_default();
            e.add_assign(c);
            if e.is_zero() {
                r.terms.remove(k);
            }
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        VectorFieldElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut r = Self::zero(self.n);
        for (k, x) in &self.terms {
            let v = x.mul(c);
            if !v.is_zero() {
                r.terms.insert(*k, v);
            }
        }
        r
    }

    fn homogeneous_parts(&self) -> Vec<(u8, VectorFieldElement)> {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for ((m, i), c) in &self.terms {
            let target = if m.parity() == 1 { &mut even } else { &mut odd };
            target.terms.insert((*m, *i), c.clone());
        }
        vec![(0, even), (1, odd)]
    }
}

impl fmt::Display for VectorFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, i), c)| {
                let m = if m.0 == 0 { String::new() } else { m.name() };
                format!("{}*{m}d{i}", c.paren_string())
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Grassmann scaling `f · (P ∂_i) = (f P) ∂_i`.
pub fn scale_field(f: &GrassmannElement, x: &VectorFieldElement) -> Result<VectorFieldElement> {
    check_n(f.n, x.n)?;
    let mut r = VectorFieldElement::zero(x.n);
    for i in 1..=x.n {
        let p = gmul(f, &x.component(i))?;
        r = r.add(&VectorFieldElement::from_coefficient(&p, i)?)?;
    }
    Ok(r)
}

/// `(P ∂_i)(f) = P · ∂_i f`
pub fn wapply(x: &VectorFieldElement, f: &GrassmannElement) -> Result<GrassmannElement> {
    check_n(x.n, f.n)?;
    let mut r = GrassmannElement::zero(f.n);
    for ((m, i), c) in &x.terms {
        let p = GrassmannElement::monomial(x.n, *m, c.clone());
        r = r.add(&gmul(&p, &gpartial(*i, f)?)?)?;
    }
    Ok(r)
}

/// Superbracket of vector fields:
/// `[P∂_i, Q∂_j] = P ∂_i(Q) ∂_j − (−1)^{p(P∂_i)p(Q∂_j)} Q ∂_j(P) ∂_i`.
pub fn wbracket(x: &VectorFieldElement, y: &VectorFieldElement) -> Result<VectorFieldElement> {
    check_n(x.n, y.n)?;
    let n = x.n;
    let mut r = VectorFieldElement::zero(n);
    for (px, hx) in x.homogeneous_parts() {
        for (py, hy) in y.homogeneous_parts() {
            if hx.is_zero() || hy.is_zero() {
                continue;
            }
            let sign = if px * py == 1 { -1 } else { 1 };
            for ((a, i), c) in &hx.terms {
                for ((b, j), e) in &hy.terms {
                    let coef = c.mul(e);
                    let p = GrassmannElement::monomial(n, *a, Scalar::one());
                    let q = GrassmannElement::monomial(n, *b, Scalar::one());
                    let t1 = gmul(&p, &gpartial(*i, &q)?)?;
                    let t2 = gmul(&q, &gpartial(*j, &p)?)?.scale(&Scalar::int(sign));
                    let v = VectorFieldElement::from_coefficient(&t1, *j)?
                        .sub(&VectorFieldElement::from_coefficient(&t2, *i)?)?;
                    r = r.add(&v.scale(&coef))?;
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(n: usize, i: usize) -> GrassmannElement {
        GrassmannElement::xi(n, i)
    }

    fn field(n: usize, s: &[usize], i: usize) -> VectorFieldElement {
        VectorFieldElement::monomial(n, GMono::from_indices(s), i, Scalar::one())
    }

    #[test]
    fn gmul_examples() {
        assert!(gmul(&xi(2, 1), &xi(2, 1)).unwrap().is_zero());
        let p = gmul(&xi(2, 2), &xi(2, 1)).unwrap();
        assert_eq!(
            p,
            GrassmannElement::monomial(2, GMono::from_indices(&[1, 2]), Scalar::int(-1))
        );
        let one = GrassmannElement::one(2);
        let a = one.add(&xi(2, 1)).unwrap();
        let b = one.sub(&xi(2, 1)).unwrap();
        assert_eq!(gmul(&a, &b).unwrap(), one);
        assert_eq!(
            gmul(&xi(2, 1), &xi(3, 1)),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn gpartial_examples() {
        let x12 = GrassmannElement::monomial(2, GMono::from_indices(&[1, 2]), Scalar::one());
        assert_eq!(gpartial(1, &x12).unwrap(), xi(2, 2));
        assert_eq!(gpartial(2, &x12).unwrap(), xi(2, 1).neg());
        assert!(gpartial(1, &GrassmannElement::one(2)).unwrap().is_zero());
        assert!(gpartial(3, &x12).is_err());
    }

    #[test]
    fn wbracket_examples() {
        let r = wbracket(&field(2, &[1], 2), &field(2, &[2], 1)).unwrap();
        let expect = field(2, &[1], 1).sub(&field(2, &[2], 2)).unwrap();
        assert_eq!(r, expect);
        assert!(wbracket(&field(1, &[], 1), &field(1, &[], 1))
            .unwrap()
            .is_zero());
        let e = VectorFieldElement::euler(3);
        assert!(wbracket(&e, &e).unwrap().is_zero());
    }

    #[test]
    fn wapply_examples() {
        assert_eq!(wapply(&field(2, &[1], 2), &xi(2, 2)).unwrap(), xi(2, 1));
        let x12 = GrassmannElement::monomial(2, GMono::from_indices(&[1, 2]), Scalar::one());
        assert_eq!(
            wapply(&VectorFieldElement::euler(2), &x12).unwrap(),
            x12.scale(&Scalar::int(2))
        );
        assert!(wapply(&field(2, &[1], 2), &GrassmannElement::one(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn hodge_star_examples() {
        assert_eq!(
            hodge_star(&GrassmannElement::one(6), 6).unwrap(),
            GrassmannElement::top(6)
        );
        let s = hodge_star(&xi(6, 1), 6).unwrap();
        assert_eq!(
            s,
            GrassmannElement::monomial(6, GMono::from_indices(&[2, 3, 4, 5, 6]), Scalar::one())
        );
        // ∂_1(∂_2(⋯∂_6 ν)): ∂_6 first contributes (-1)^5, then each later step sees
        // its index in leading position except for the accumulated reorderings.
        let mut oracle = GrassmannElement::top(6);
        for i in (1..=6).rev() {
            oracle = gpartial(i, &oracle).unwrap();
        }
        assert_eq!(hodge_star(&GrassmannElement::top(6), 6).unwrap(), oracle);
        assert!(oracle.terms.contains_key(&GMono::ONE));
    }

    #[test]
    fn monomial_order_is_degree_then_lex() {
        let all = GMono::all(3);
        let names: Vec<String> = all.iter().map(|m| m.name()).collect();
        assert_eq!(
            names,
            ["one", "x1", "x2", "x3", "x1x2", "x1x3", "x2x3", "x1x2x3"]
        );
    }
}
