//! Commutative polynomials in `∂` and up to three formal λ-variables.
//!
//! Slot 0 is always `∂`. λ-brackets are evaluated entirely in this ring;
//! the non-commutativity of the axioms is carried by explicit substitutions
//! such as `∂ ↦ ∂ + λ` or `∂ ↦ -λ - μ`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::scalar::Scalar;
use crate::upoly::UPoly;

pub const NVARS: usize = 4;
pub const D: usize = 0;
pub const LAMBDA: usize = 1;
pub const MU: usize = 2;
pub const NU: usize = 3;

/// Packed exponent vector, 8 bits per slot; slot 0 is the most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub u32);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(slot: usize) -> Mono {
        Mono(1 << (8 * (NVARS - 1 - slot)))
    }

    pub fn from_exps(e: [u32; NVARS]) -> Mono {
        let mut m = 0u32;
        for (k, x) in e.iter().enumerate() {
            assert!(*x < 128, "exponent overflow");
            m |= x << (8 * (NVARS - 1 - k));
        }
        Mono(m)
    }

    pub fn exp(self, slot: usize) -> u32 {
        (self.0 >> (8 * (NVARS - 1 - slot))) & 0xff
    }

    pub fn exps(self) -> [u32; NVARS] {
        [self.exp(0), self.exp(1), self.exp(2), self.exp(3)]
    }

    pub fn mul(self, o: Mono) -> Mono {
        debug_assert!((0..NVARS).all(|k| self.exp(k) + o.exp(k) < 128));
        Mono(self.0 + o.0)
    }

    pub fn without(self, slot: usize) -> Mono {
        Mono(self.0 & !(0xff << (8 * (NVARS - 1 - slot))))
    }
}

/// Sparse polynomial; terms sorted by [`Mono`], no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CPoly {
    pub terms: Vec<(Mono, Scalar)>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            CPoly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn var(slot: usize) -> Self {
        Self::term(Mono::var(slot), Scalar::one())
    }

    /// Sum of `coeff · var` over the given slots.
    pub fn linear(parts: &[(usize, i64)]) -> Self {
        let mut acc = CPoly::zero();
        for &(s, c) in parts {
            acc = acc.add(&Self::term(Mono::var(s), Scalar::int(c)));
        }
        acc
    }

    /// Embeds `p(∂)` with `∂` read as the polynomial `image`.
    pub fn from_upoly(p: &UPoly, image: &CPoly) -> Self {
        let mut acc = CPoly::zero();
        for c in p.coeffs.iter().rev() {
            acc = acc.mul(image).add(&CPoly::constant(c.clone()));
        }
        acc
    }

    pub fn from_map(map: HashMap<Mono, Scalar>) -> Self {
        let mut terms: Vec<(Mono, Scalar)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|(m, _)| *m);
        CPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, slot: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(slot))
            .max()
            .unwrap_or(0)
    }

    pub fn uses(&self, slot: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(slot) > 0)
    }

    pub fn coeff(&self, m: Mono) -> Scalar {
        self.terms
            .binary_search_by_key(&m, |(x, _)| *x)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn add(&self, o: &CPoly) -> CPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match self.terms[i].0.cmp(&o.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&o.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        CPoly { terms: out }
    }

    pub fn neg(&self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &CPoly) -> CPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        CPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    pub fn mul(&self, o: &CPoly) -> CPoly {
        if self.is_zero() || o.is_zero() {
            return CPoly::zero();
        }
        if self.terms.len() == 1 && self.terms[0].0 == Mono::ONE {
            return o.scale(&self.terms[0].1);
        }
        if o.terms.len() == 1 && o.terms[0].0 == Mono::ONE {
            return self.scale(&o.terms[0].1);
        }
        let mut acc: HashMap<Mono, Scalar> =
            HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                acc.entry(a.mul(*b)).or_default().add_assign(&x.mul(y));
            }
        }
        Self::from_map(acc)
    }

    /// Adds `c · m · self` into an accumulator.
    pub fn accumulate_into(&self, c: &Scalar, m: Mono, acc: &mut HashMap<Mono, Scalar>) {
        for (a, x) in &self.terms {
            acc.entry(a.mul(m)).or_default().add_assign(&x.mul(c));
        }
    }

    pub fn pow(&self, e: u32) -> CPoly {
        let mut r = CPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Simultaneous substitution `slot_k ↦ images[k]`; `None` keeps the slot.
    pub fn compose(&self, images: &[Option<&CPoly>; NVARS]) -> CPoly {
        let mut cache: [Vec<CPoly>; NVARS] = Default::default();
        let mut acc: HashMap<Mono, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = CPoly::constant(c.clone());
            let mut kept = Mono::ONE;
            for (k, img) in images.iter().enumerate() {
                let e = m.exp(k) as usize;
                if e == 0 {
                    continue;
                }
                match img {
                    None => {
                        kept = kept.mul(Mono::from_exps({
                            let mut x = [0; NVARS];
                            x[k] = e as u32;
                            x
                        }))
                    }
                    Some(p) => {
                        let pw = &mut cache[k];
                        if pw.is_empty() {
                            pw.push(CPoly::one());
                        }
                        while pw.len() <= e {
                            let next = pw.last().unwrap().mul(p);
                            pw.push(next);
                        }
                        term = term.mul(&pw[e]);
                    }
                }
            }
            for (tm, tc) in term.terms {
                acc.entry(tm.mul(kept)).or_default().add_assign(&tc);
            }
        }
        Self::from_map(acc)
    }

    /// Renames slot `from` to slot `to` (which must be unused).
    pub fn rename(&self, from: usize, to: usize) -> CPoly {
        if from == to {
            return self.clone();
        }
        let mut terms: Vec<(Mono, Scalar)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exps();
                debug_assert_eq!(e[to], 0);
                e[to] = e[from];
                e[from] = 0;
                (Mono::from_exps(e), c.clone())
            })
            .collect();
        terms.sort_by_key(|(m, _)| *m);
        CPoly { terms }
    }

    /// Coefficient polynomial of `slot^k`, with that slot removed.
    pub fn coeff_of(&self, slot: usize, k: u32) -> CPoly {
        let mut terms: Vec<(Mono, Scalar)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(slot) == k)
            .map(|(m, c)| (m.without(slot), c.clone()))
            .collect();
        terms.sort_by_key(|(m, _)| *m);
        CPoly { terms }
    }

    /// Reads a polynomial that only involves `∂`.
    pub fn to_upoly(&self) -> Option<UPoly> {
        let mut v = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(D) as usize;
            if m.without(D) != Mono::ONE {
                return None;
            }
            if v.len() <= e {
                v.resize(e + 1, Scalar::zero());
            }
            v[e] = c.clone();
        }
        Some(UPoly::from_coeffs(v))
    }

    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> CPoly {
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn format_with(&self, names: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (k, name) in names.iter().enumerate() {
                match m.exp(k) {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    e => vars.push(format!("{name}^{e}")),
                }
            }
            let s = if vars.is_empty() {
                c.paren_string()
            } else if c.is_one() {
                vars.join("*")
            } else {
                format!("{}*{}", c.paren_string(), vars.join("*"))
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_shift() {
        // ∂² at ∂ ↦ ∂ + λ
        let p = CPoly::var(D).pow(2);
        let img = CPoly::linear(&[(D, 1), (LAMBDA, 1)]);
        let q = p.compose(&[Some(&img), None, None, None]);
        let expect = CPoly::var(D)
            .pow(2)
            .add(
                &CPoly::var(D)
                    .mul(&CPoly::var(LAMBDA))
                    .scale(&Scalar::int(2)),
            )
            .add(&CPoly::var(LAMBDA).pow(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn packed_monomial_order_is_stable() {
        let a = Mono::from_exps([1, 2, 0, 0]);
        assert_eq!(a.exps(), [1, 2, 0, 0]);
        assert_eq!(a.mul(Mono::var(MU)).exp(MU), 1);
    }
}
