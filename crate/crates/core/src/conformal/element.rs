use std::fmt;

use crate::cpoly::{CPoly, D, LAMBDA, NVARS};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::upoly::UPoly;

use super::algebra::{Algebra, BasisLabel};
use super::combo::{Acc, Combo};

/// `Σ p_k(∂) b_k`, dense over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub coeffs: Vec<UPoly>,
}

impl Element {
    pub fn zero(rank: usize) -> Self {
        Element {
            coeffs: vec![UPoly::zero(); rank],
        }
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut e = Self::zero(rank);
        e.coeffs[i] = UPoly::one();
        e
    }

    pub fn from_terms(rank: usize, terms: &[(usize, UPoly)]) -> Self {
        let mut e = Self::zero(rank);
        for (i, p) in terms {
            e.coeffs[*i] = e.coeffs[*i].add(p);
        }
        e
    }

    /// Builds an element from `(label name, coefficient)` pairs.
    pub fn named(alg: &Algebra, terms: &[(&str, UPoly)]) -> Result<Self> {
        let mut e = Self::zero(alg.rank());
        for (name, p) in terms {
            let i = alg.label_index(name)?;
            e.coeffs[i] = e.coeffs[i].add(p);
        }
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(UPoly::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn add(&self, o: &Element) -> Element {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(UPoly::neg).collect(),
        }
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, q: &UPoly) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|p| p.mul(q)).collect(),
        }
    }

    /// Parity if homogeneous; zero counts as even.
    pub fn parity(&self, labels: &[BasisLabel]) -> Option<u8> {
        let mut ps = self.support().into_iter().map(|i| labels[i].parity);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// The same element as a combination with `∂`-coefficients.
    pub fn to_combo(&self) -> Combo {
        let dv = CPoly::var(D);
        Combo(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| (i, CPoly::from_upoly(p, &dv)))
                .collect(),
        )
    }

    /// Reads a `∂`-only combination back as an element.
    pub fn from_combo(rank: usize, c: &Combo) -> Option<Element> {
        let mut e = Self::zero(rank);
        for (i, p) in &c.0 {
            e.coeffs[*i] = p.to_upoly()?;
        }
        Some(e)
    }

    pub fn display(&self, labels: &[BasisLabel]) -> String {
        let parts: Vec<String> = self
            .support()
            .into_iter()
            .map(|i| {
                let p = &self.coeffs[i];
                if p.is_one() {
                    labels[i].name.clone()
                } else {
                    format!("({p})*{}", labels[i].name)
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// A polynomial in `∂` and named formal variables with label coefficients.
/// `∂^m λ^k b` stands for `λ^k ∂^m(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketValue {
    /// Names of slots 1.. (slot 0 is always `d`).
    pub vars: Vec<String>,
    pub combo: Combo,
}

impl BracketValue {
    pub fn new(vars: &[&str], combo: Combo) -> Self {
        BracketValue {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            combo,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_zero()
    }

    /// `q(∂, λ) · x` with `∂` acting on the output.
    pub fn times_element(var: &str, q: &CPoly, x: &Element) -> Self {
        BracketValue::new(&[var], x.to_combo().scale(q))
    }

    pub fn parity(&self, labels: &[BasisLabel]) -> Option<u8> {
        let mut ps = self.combo.0.iter().map(|(i, _)| labels[*i].parity);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn display(&self, labels: &[BasisLabel]) -> String {
        let mut names: [&str; NVARS] = ["d", "l", "m", "n"];
        for (k, v) in self.vars.iter().enumerate().take(NVARS - 1) {
            names[k + 1] = v;
        }
        display_combo(&self.combo, labels, &names)
    }
}

pub fn display_combo(c: &Combo, labels: &[BasisLabel], names: &[&str; NVARS]) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.0.iter()
        .map(|(i, p)| {
            let s = p.format_with(names);
            if s == "1" {
                labels[*i].name.clone()
            } else if s == "(-1)" || s == "-1" {
                format!("-{}", labels[*i].name)
            } else {
                format!("({s})*{}", labels[*i].name)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<BasisLabel> =
            (0..self.combo.0.iter().map(|(i, _)| i + 1).max().unwrap_or(0))
                .map(|i| BasisLabel {
                    name: format!("b{i}"),
                    parity: 0,
                    index: i,
                })
                .collect();
        write!(f, "{}", self.display(&labels))
    }
}

fn check_var_name(alg: &Algebra, name: &str) -> Result<()> {
    let clash = name == "d"
        || name == "i"
        || alg.params.iter().any(|p| p == name)
        || alg.labels.iter().any(|l| l.name == name);
    if clash || name.is_empty() {
        Err(Error::VariableCapture(name.into()))
    } else {
        Ok(())
    }
}

fn check_rank(alg: &Algebra, x: &Element) -> Result<()> {
    if x.rank() == alg.rank() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "element of rank {} in algebra of rank {}",
            x.rank(),
            alg.rank()
        )))
    }
}

/// `[x_λ y] = Σ p_i(-λ) q_j(∂+λ) S(i,j)` as a raw combination.
pub fn bracket_combo(alg: &Algebra, x: &Element, y: &Element) -> Combo {
    let neg_l = CPoly::linear(&[(LAMBDA, -1)]);
    let shift = CPoly::linear(&[(D, 1), (LAMBDA, 1)]);
    let mut acc = Acc::new();
    for i in x.support() {
        let pi = CPoly::from_upoly(&x.coeffs[i], &neg_l);
        for j in y.support() {
            let e = alg.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let f = pi.mul(&CPoly::from_upoly(&y.coeffs[j], &shift));
            acc.add_scaled(&f, e, 1);
        }
    }
    acc.finish()
}

/// The λ-bracket of two elements, with the formal variable named `var`.
pub fn bracket(alg: &Algebra, x: &Element, y: &Element, var: &str) -> Result<BracketValue> {
    check_var_name(alg, var)?;
    check_rank(alg, x)?;
    check_rank(alg, y)?;
    Ok(BracketValue::new(&[var], bracket_combo(alg, x, y)))
}

/// `x_(n) y`: `n!` times the coefficient of `λ^n`.
pub fn nth_product(alg: &Algebra, x: &Element, y: &Element, n: u32) -> Result<Element> {
    check_rank(alg, x)?;
    check_rank(alg, y)?;
    let c = bracket_combo(alg, x, y);
    let fact = (1..=n as i64).fold(Scalar::one(), |a, k| a.mul(&Scalar::int(k)));
    let mut out = Element::zero(alg.rank());
    for (i, p) in &c.0 {
        out.coeffs[*i] = p
            .coeff_of(LAMBDA, n)
            .to_upoly()
            .expect("two-variable bracket")
            .scale(&fact);
    }
    Ok(out)
}

/// All nonzero n-th products of `x` and `y`.
pub fn all_products(alg: &Algebra, x: &Element, y: &Element) -> Vec<Element> {
    let c = bracket_combo(alg, x, y);
    let top = c.degree_in(LAMBDA);
    (0..=top)
        .map(|n| {
            let mut out = Element::zero(alg.rank());
            for (i, p) in &c.0 {
                out.coeffs[*i] = p
                    .coeff_of(LAMBDA, n)
                    .to_upoly()
                    .expect("two-variable bracket");
            }
            out
        })
        .filter(|e| !e.is_zero())
        .collect()
}
