//! Label-indexed combinations of commutative polynomials: the raw payload of
//! every λ-bracket value.

use std::collections::{BTreeMap, HashMap};

use crate::cpoly::{CPoly, Mono, NVARS};
use crate::scalar::Scalar;

/// `Σ P_k(∂, λ, …) b_k`, sorted by label index, no zero polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Combo(pub Vec<(usize, CPoly)>);

impl Combo {
    pub fn zero() -> Self {
        Combo(Vec::new())
    }

    pub fn single(label: usize, p: CPoly) -> Self {
        if p.is_zero() {
            Combo::zero()
        } else {
            Combo(vec![(label, p)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, label: usize) -> Option<&CPoly> {
        self.0
            .binary_search_by_key(&label, |(l, _)| *l)
            .ok()
            .map(|i| &self.0[i].1)
    }

    pub fn add(&self, o: &Combo) -> Combo {
        let mut m: BTreeMap<usize, CPoly> = self.0.iter().cloned().collect();
        for (l, p) in &o.0 {
            let e = m.entry(*l).or_default();
            *e = e.add(p);
        }
        Combo(m.into_iter().filter(|(_, p)| !p.is_zero()).collect())
    }

    pub fn neg(&self) -> Combo {
        Combo(self.0.iter().map(|(l, p)| (*l, p.neg())).collect())
    }

    pub fn sub(&self, o: &Combo) -> Combo {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &CPoly) -> Combo {
        Combo(
            self.0
                .iter()
                .map(|(l, p)| (*l, p.mul(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        )
    }

    pub fn compose(&self, images: &[Option<&CPoly>; NVARS]) -> Combo {
        Combo(
            self.0
                .iter()
                .map(|(l, p)| (*l, p.compose(images)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        )
    }

    pub fn rename(&self, from: usize, to: usize) -> Combo {
        Combo(
            self.0
                .iter()
                .map(|(l, p)| (*l, p.rename(from, to)))
                .collect(),
        )
    }

    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> Combo {
        Combo(
            self.0
                .iter()
                .map(|(l, p)| (*l, p.map_scalars(&f)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        )
    }

    /// Largest exponent of `slot` in any component.
    pub fn degree_in(&self, slot: usize) -> u32 {
        self.0
            .iter()
            .map(|(_, p)| p.degree_in(slot))
            .max()
            .unwrap_or(0)
    }
}

/// Sparse accumulator for sums of products `c · A · B · b_k`.
#[derive(Default)]
pub struct Acc(BTreeMap<usize, HashMap<Mono, Scalar>>);

impl Acc {
    pub fn new() -> Self {
        Acc::default()
    }

    /// Adds `sign · a · b` to the component of `label`.
    pub fn add_product(&mut self, label: usize, a: &CPoly, b: &CPoly, sign: i64) {
        let slot = self.0.entry(label).or_default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut c = ca.mul(cb);
                if sign < 0 {
                    c = c.neg();
                }
                slot.entry(ma.mul(*mb)).or_default().add_assign(&c);
            }
        }
    }

    /// Adds `sign · f · combo`.
    pub fn add_scaled(&mut self, f: &CPoly, combo: &Combo, sign: i64) {
        for (l, p) in &combo.0 {
            self.add_product(*l, f, p, sign);
        }
    }

    pub fn add_combo(&mut self, combo: &Combo, sign: i64) {
        self.add_scaled(&CPoly::one(), combo, sign);
    }

    pub fn finish(self) -> Combo {
        Combo(
            self.0
                .into_iter()
                .map(|(l, m)| (l, CPoly::from_map(m)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        )
    }
}
