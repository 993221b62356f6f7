//! Tensor products with Grassmann algebras and `W_n ⋉ (Cur g ⊗ ∧(n))`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::conformal::{koszul, skew_transform, Algebra, Combo, FamilyTag, Module};
use crate::cpoly::CPoly;
use crate::error::Result;
use crate::grassmann::{GMono, GrassmannElement};
use crate::scalar::Scalar;

use super::lie::LieSuperalgebra;
use super::witt::WBasis;

fn tensor_name(base: &str, m: GMono) -> String {
    if m.0 == 0 {
        base.to_string()
    } else {
        format!("{base}_{}", m.name())
    }
}

/// Index bookkeeping for `(base label, monomial)` pairs, base-major.
struct Pairs {
    monos: Vec<GMono>,
    pos: HashMap<GMono, usize>,
}

impl Pairs {
    fn new(n: usize) -> Self {
        let monos = GMono::all(n);
        let pos = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Pairs { monos, pos }
    }

    fn split(&self, k: usize) -> (usize, GMono) {
        (k / self.monos.len(), self.monos[k % self.monos.len()])
    }

    fn index(&self, base: usize, m: GMono) -> usize {
        base * self.monos.len() + self.pos[&m]
    }
}

/// `A ⊗ ∧(n)` with `[(r⊗b)_λ (r'⊗b')] = (-1)^{p(b)p(r')} [r_λ r'] ⊗ bb'`.
pub fn tensor_grassmann(alg: &Algebra, n: usize) -> Algebra {
    let pairs = Arc::new(Pairs::new(n));
    let mut labels = Vec::new();
    for l in &alg.labels {
        for m in &pairs.monos {
            labels.push((tensor_name(&l.name, *m), l.parity ^ m.parity()));
        }
    }
    let a = alg.clone();
    let p = pairs.clone();
    let rule = Arc::new(move |k: usize, l: usize| {
        let (r, b) = p.split(k);
        let (r2, b2) = p.split(l);
        let Some((sign, bb)) = b.mul(b2) else {
            return Combo::zero();
        };
        let sign = sign * koszul(b.parity(), a.parity(r2));
        let mut v: Vec<(usize, CPoly)> = a
            .entry(r, r2)
            .0
            .iter()
            .map(|(t, poly)| (p.index(*t, bb), poly.scale(&Scalar::int(sign))))
            .collect();
        v.sort_by_key(|(t, _)| *t);
        Combo(v)
    });
    let params: Vec<&str> = alg.params.iter().map(String::as_str).collect();
    Algebra::from_rule(&format!("{}⊗Λ({n})", alg.name), &labels, rule)
        .expect("distinct labels")
        .with_tag(FamilyTag::Tensor(n))
        .with_params(&params)
}

struct Semidirect {
    w: WBasis,
    g: LieSuperalgebra,
    pairs: Pairs,
}

impl Semidirect {
    fn cur_parity(&self, k: usize) -> u8 {
        let (x, m) = self.pairs.split(k);
        self.g.labels[x].1 ^ m.parity()
    }

    /// `[w_λ (x⊗f)] = (-1)^{p(w)p(x)} x ⊗ (w_λ f)`, over current indices.
    fn cross(&self, k: usize, c: usize) -> Combo {
        let (x, m) = self.pairs.split(c);
        let f = GrassmannElement::monomial(self.w.n, m, Scalar::one());
        let sign = Scalar::int(koszul(self.w.parity(k), self.g.labels[x].1));
        let mut v: Vec<(usize, CPoly)> = self
            .w
            .act(k, &f)
            .into_iter()
            .map(|(mm, p)| (self.pairs.index(x, mm), p.scale(&sign)))
            .collect();
        v.sort_by_key(|(t, _)| *t);
        Combo(v)
    }

    /// `[(x⊗f)_λ (y⊗g)] = (-1)^{p(f)p(y)} [x, y] ⊗ fg`, over current indices.
    fn current(&self, c1: usize, c2: usize) -> Combo {
        let (x, f) = self.pairs.split(c1);
        let (y, g) = self.pairs.split(c2);
        let Some((sign, fg)) = f.mul(g) else {
            return Combo::zero();
        };
        let Some(v) = self.g.brackets.get(&(x, y)) else {
            return Combo::zero();
        };
        let sign = Scalar::int(sign * koszul(f.parity(), self.g.labels[y].1));
        let mut out: Vec<(usize, CPoly)> = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(z, c)| (self.pairs.index(*z, fg), CPoly::constant(c.mul(&sign))))
            .collect();
        out.sort_by_key(|(t, _)| *t);
        Combo(out)
    }

    fn current_labels(&self) -> Vec<(String, u8)> {
        let mut labels = Vec::new();
        for (name, p) in &self.g.labels {
            for m in &self.pairs.monos {
                labels.push((tensor_name(name, *m), p ^ m.parity()));
            }
        }
        labels
    }
}

fn shift(c: &Combo, by: usize) -> Combo {
    Combo(c.0.iter().map(|(k, p)| (k + by, p.clone())).collect())
}

/// `W_n ⋉ (Cur g ⊗ ∧(n))`; for `n = 0` this is `Vir ⋉ Cur g`.
pub fn semidirect_w_current(g: &LieSuperalgebra, n: usize) -> Result<Algebra> {
    g.validate()?;
    let sd = Arc::new(Semidirect {
        w: WBasis::new(n),
        g: g.clone(),
        pairs: Pairs::new(n),
    });
    let rw = sd.w.rank();
    let mut labels = sd.w.label_list();
    labels.extend(sd.current_labels());
    let s = sd.clone();
    let rule = Arc::new(move |k: usize, l: usize| match (k < rw, l < rw) {
        (true, true) => s.w.bracket(k, l),
        (true, false) => shift(&s.cross(k, l - rw), rw),
        (false, true) => {
            let c = shift(&s.cross(l, k - rw), rw);
            skew_transform(&c, s.w.parity(l), s.cur_parity(k - rw))
        }
        (false, false) => shift(&s.current(k - rw, l - rw), rw),
    });
    Ok(
        Algebra::from_rule(&format!("W{n}⋉Cur {}⊗Λ({n})", g.name), &labels, rule)?
            .with_tag(FamilyTag::SemidirectWCur(n)),
    )
}

/// `Cur g ⊗ ∧(n)` as a module over `W_n`, through the semidirect action.
pub fn w_action_on_current(g: &LieSuperalgebra, n: usize) -> Result<Module> {
    g.validate()?;
    let sd = Arc::new(Semidirect {
        w: WBasis::new(n),
        g: g.clone(),
        pairs: Pairs::new(n),
    });
    let labels = sd.current_labels();
    let s = sd.clone();
    let rule = Arc::new(move |k: usize, c: usize| s.cross(k, c));
    Module::from_rule(
        &format!("Cur {}⊗Λ({n})", g.name),
        sd.w.rank(),
        &labels,
        rule,
    )
}
