use std::collections::{BTreeMap, HashMap};

use crate::conformal::koszul;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Vector = BTreeMap<usize, Scalar>;

/// A finite-dimensional Lie superalgebra by structure constants.
#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    pub name: String,
    pub labels: Vec<(String, u8)>,
    /// `[g_i, g_j] = Σ c_k g_k`, absent pairs are zero.
    pub brackets: HashMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl LieSuperalgebra {
    /// Builds from brackets given on some ordered pairs; the reversed pairs
    /// are filled by super skew-symmetry.
    pub fn from_brackets(
        name: &str,
        labels: &[(&str, u8)],
        given: &[(&str, &str, &[(&str, i64)])],
    ) -> Result<Self> {
        let labels: Vec<(String, u8)> = labels.iter().map(|(n, p)| (n.to_string(), *p)).collect();
        let idx = |s: &str| {
            labels
                .iter()
                .position(|(n, _)| n == s)
                .ok_or_else(|| Error::UnknownLabel(s.into()))
        };
        let mut brackets = HashMap::new();
        for (a, b, terms) in given {
            let (i, j) = (idx(a)?, idx(b)?);
            let v: Vec<(usize, Scalar)> = terms
                .iter()
                .map(|(n, c)| Ok((idx(n)?, Scalar::int(*c))))
                .collect::<Result<_>>()?;
            let s = -koszul(labels[i].1, labels[j].1);
            let w: Vec<(usize, Scalar)> = v
                .iter()
                .map(|(k, c)| (*k, c.mul(&Scalar::int(s))))
                .collect();
            if brackets.insert((i, j), v).is_some() {
                return Err(Error::InvalidLieAlgebra(format!(
                    "bracket [{a}, {b}] given twice"
                )));
            }
            if i != j {
                brackets.entry((j, i)).or_insert(w);
            }
        }
        let g = LieSuperalgebra {
            name: name.into(),
            labels,
            brackets,
        };
        Ok(g)
    }

    pub fn sl2() -> Self {
        Self::from_brackets(
            "sl2",
            &[("e", 0), ("f", 0), ("h", 0)],
            &[
                ("e", "f", &[("h", 1)]),
                ("h", "e", &[("e", 2)]),
                ("h", "f", &[("f", -2)]),
            ],
        )
        .expect("valid input")
    }

    /// The two-dimensional nonabelian Lie algebra `[x, y] = y`.
    pub fn b2() -> Self {
        Self::from_brackets("b2", &[("x", 0), ("y", 0)], &[("x", "y", &[("y", 1)])])
            .expect("valid input")
    }

    pub fn abelian(n: usize) -> Self {
        LieSuperalgebra {
            name: format!("abelian{n}"),
            labels: (1..=n).map(|k| (format!("z{k}"), 0)).collect(),
            brackets: HashMap::new(),
        }
    }

    /// `sl2 ⊕ ℂz` with `z` central.
    pub fn sl2_plus_center() -> Self {
        Self::from_brackets(
            "sl2+C",
            &[("e", 0), ("f", 0), ("h", 0), ("z", 0)],
            &[
                ("e", "f", &[("h", 1)]),
                ("h", "e", &[("e", 2)]),
                ("h", "f", &[("f", -2)]),
            ],
        )
        .expect("valid input")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn br(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(v) = self.brackets.get(&(*i, *j)) {
                    for (k, c) in v {
                        let e = out.entry(*k).or_default();
                        e.add_assign(&a.mul(b).mul(c));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Checks parity compatibility, super skew-symmetry and super Jacobi.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let p = |i: usize| self.labels[i].1;
        for (&(i, j), v) in &self.brackets {
            if i >= n || j >= n || v.iter().any(|(k, _)| *k >= n) {
                return Err(Error::InvalidLieAlgebra("index out of range".into()));
            }
            if v.iter().any(|(k, c)| !c.is_zero() && p(*k) != p(i) ^ p(j)) {
                return Err(Error::InvalidLieAlgebra(format!(
                    "[{}, {}] has the wrong parity",
                    self.labels[i].0, self.labels[j].0
                )));
            }
        }
        let unit = |i: usize| Vector::from([(i, Scalar::one())]);
        for i in 0..n {
            for j in 0..n {
                let a = self.br(&unit(i), &unit(j));
                let mut b = self.br(&unit(j), &unit(i));
                for c in b.values_mut() {
                    *c = c.mul(&Scalar::int(-koszul(p(i), p(j))));
                }
                if a != b {
                    return Err(Error::InvalidLieAlgebra(format!(
                        "skew-symmetry fails on ({}, {})",
                        self.labels[i].0, self.labels[j].0
                    )));
                }
                for k in 0..n {
                    let lhs = self.br(&unit(i), &self.br(&unit(j), &unit(k)));
                    let r1 = self.br(&self.br(&unit(i), &unit(j)), &unit(k));
                    let r2 = self.br(&unit(j), &self.br(&unit(i), &unit(k)));
                    let s = Scalar::int(koszul(p(i), p(j)));
                    let mut res = lhs;
                    for (key, c) in r1 {
                        res.entry(key).or_default().add_assign(&c.neg());
                    }
                    for (key, c) in r2 {
                        res.entry(key).or_default().add_assign(&c.mul(&s).neg());
                    }
                    if res.values().any(|c| !c.is_zero()) {
                        return Err(Error::InvalidLieAlgebra(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i].0, self.labels[j].0, self.labels[k].0
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
