//! Skew-symmetry, Jacobi, module and conformal-derivation checkers.
//!
//! All three-variable identities are evaluated in slots `(∂, λ, μ)` with
//! three rewrites: `[a_λ P(∂,μ) c] = P(∂+λ, μ)[a_λ c]`,
//! `[P(∂,λ) c _{λ+μ} e] = P(-λ-μ, λ)[c_{λ+μ} e]`, and
//! `[b_μ P(∂,λ) c] = P(∂+μ, λ)[b_μ c]`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::cpoly::{CPoly, D, LAMBDA, MU};
use crate::error::{Error, Result};

use super::algebra::{koszul, make_labels, skew_transform, Algebra, BasisLabel, Rule, Table};
use super::combo::{Acc, Combo};
use super::element::{bracket_combo, display_combo, BracketValue, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Skew,
    Jacobi,
    Module,
    Derivation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Basis names involved, in the order of the identity.
    pub labels: Vec<String>,
    /// Residual in `(∂, λ, μ)`, with labels indexing `residual_labels`.
    pub residual: Combo,
    pub residual_labels: Vec<BasisLabel>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} ({}): residual {}",
            self.kind,
            self.labels.join(", "),
            display_combo(&self.residual, &self.residual_labels, &["d", "l", "m", "n"])
        )
    }
}

/// Result of an exhaustive identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, o: Report) {
        self.checked += o.checked;
        self.violations.extend(o.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} identities checked)", self.checked)
        } else {
            writeln!(
                f,
                "FAIL ({} of {} identities violated)",
                self.violations.len(),
                self.checked
            )?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}

fn img(parts: &[(usize, i64)]) -> CPoly {
    CPoly::linear(parts)
}

/// `T(∂, λ)` in the three forms needed by the rewrites.
pub(crate) struct Forms {
    cols: usize,
    /// `T(∂, λ)`
    pub(crate) lam: Vec<Combo>,
    /// `T(∂, μ)`
    pub(crate) mu: Vec<Combo>,
    /// `T(∂, λ+μ)`
    pub(crate) lm: Vec<Combo>,
    /// `T(∂+λ, μ)`
    pub(crate) mu_shift: Vec<Combo>,
    /// `T(∂+μ, λ)`
    pub(crate) l_shift: Vec<Combo>,
}

impl Forms {
    pub(crate) fn build(
        rows: usize,
        cols: usize,
        get: &(dyn Fn(usize, usize) -> Combo + Sync),
    ) -> Forms {
        let lm_img = img(&[(LAMBDA, 1), (MU, 1)]);
        let dl = img(&[(D, 1), (LAMBDA, 1)]);
        let dm = img(&[(D, 1), (MU, 1)]);
        let cells: Vec<(Combo, Combo, Combo, Combo, Combo)> = (0..rows * cols)
            .into_par_iter()
            .map(|k| {
                let t = get(k / cols, k % cols);
                let mu = t.rename(LAMBDA, MU);
                let lm = t.compose(&[None, Some(&lm_img), None, None]);
                let mu_shift = mu.compose(&[Some(&dl), None, None, None]);
                let l_shift = t.compose(&[Some(&dm), None, None, None]);
                (t, mu, lm, mu_shift, l_shift)
            })
            .collect();
        let mut f = Forms {
            cols,
            lam: vec![],
            mu: vec![],
            lm: vec![],
            mu_shift: vec![],
            l_shift: vec![],
        };
        for (t, a, b, c, d) in cells {
            f.lam.push(t);
            f.mu.push(a);
            f.lm.push(b);
            f.mu_shift.push(c);
            f.l_shift.push(d);
        }
        f
    }

    pub(crate) fn at<'a>(&self, v: &'a [Combo], i: usize, j: usize) -> &'a Combo {
        &v[i * self.cols + j]
    }
}

/// Residual of `[a_λ[b_μ v]] - [[a_λ b]_{λ+μ} v] - (-1)^{p(a)p(b)}[b_μ[a_λ v]]`
/// where `a, b` are algebra basis elements and `v` a basis element of the
/// target (the algebra itself or a module).
fn jacobi_residual(alg: &Algebra, f: &Forms, i: usize, j: usize, m: usize) -> Combo {
    let mut acc = Acc::new();
    for (k, p) in &f.at(&f.mu_shift, j, m).0 {
        acc.add_scaled(p, f.at(&f.lam, i, *k), 1);
    }
    let neg = img(&[(LAMBDA, -1), (MU, -1)]);
    let sij = alg.entry(i, j).compose(&[Some(&neg), None, None, None]);
    for (k, p) in &sij.0 {
        acc.add_scaled(p, f.at(&f.lm, *k, m), -1);
    }
    let sign = koszul(alg.parity(i), alg.parity(j));
    for (k, p) in &f.at(&f.l_shift, i, m).0 {
        acc.add_scaled(p, f.at(&f.mu, j, *k), -sign);
    }
    acc.finish()
}

/// Skew-symmetry on all ordered pairs and Jacobi on all basis triples.
pub fn check_axioms(alg: &Algebra) -> Report {
    let n = alg.rank();
    let names = |v: &[usize]| {
        v.iter()
            .map(|&k| alg.labels[k].name.clone())
            .collect::<Vec<_>>()
    };
    let mut report = Report::default();
    let skew: Vec<Violation> = (0..n * n)
        .into_par_iter()
        .filter_map(|k| {
            let (i, j) = (k / n, k % n);
            let expect = skew_transform(alg.entry(i, j), alg.parity(i), alg.parity(j));
            let r = alg.entry(j, i).sub(&expect);
            (!r.is_zero()).then(|| Violation {
                kind: ViolationKind::Skew,
                labels: names(&[i, j]),
                residual: r,
                residual_labels: alg.labels.clone(),
            })
        })
        .collect();
    report.merge(Report {
        checked: n * n,
        violations: skew,
    });

    let get = |i: usize, j: usize| alg.entry(i, j).clone();
    let f = Forms::build(n, n, &get);
    let jac: Vec<Violation> = (0..n * n * n)
        .into_par_iter()
        .filter_map(|k| {
            let (i, j, m) = (k / (n * n), (k / n) % n, k % n);
            let r = jacobi_residual(alg, &f, i, j, m);
            (!r.is_zero()).then(|| Violation {
                kind: ViolationKind::Jacobi,
                labels: names(&[i, j, m]),
                residual: r,
                residual_labels: alg.labels.clone(),
            })
        })
        .collect();
    report.merge(Report {
        checked: n * n * n,
        violations: jac,
    });
    report
}

/// A free `ℂ[∂]`-module over an algebra, given by its action table
/// `(algebra basis i, module basis m) ↦ b_i λ v_m`.
#[derive(Clone)]
pub struct Module {
    pub name: String,
    pub labels: Vec<BasisLabel>,
    pub algebra_rank: usize,
    table: Arc<Table>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("name", &self.name)
            .field("rank", &self.labels.len())
            .finish()
    }
}

impl Module {
    pub fn from_table(
        name: &str,
        algebra_rank: usize,
        labels: &[(String, u8)],
        entries: std::collections::HashMap<(usize, usize), Combo>,
    ) -> Result<Module> {
        let labels = make_labels(labels)?;
        let table = Table::explicit(algebra_rank, labels.len(), entries);
        Ok(Module {
            name: name.into(),
            labels,
            algebra_rank,
            table: Arc::new(table),
        })
    }

    pub fn from_rule(
        name: &str,
        algebra_rank: usize,
        labels: &[(String, u8)],
        rule: Rule,
    ) -> Result<Module> {
        let labels = make_labels(labels)?;
        let table = Table::lazy(algebra_rank, labels.len(), rule);
        Ok(Module {
            name: name.into(),
            labels,
            algebra_rank,
            table: Arc::new(table),
        })
    }

    /// The trivial module of the given rank with all even generators.
    pub fn trivial(algebra_rank: usize, rank: usize) -> Module {
        let labels: Vec<(String, u8)> = (0..rank).map(|k| (format!("v{}", k + 1), 0)).collect();
        Self::from_table("trivial", algebra_rank, &labels, Default::default())
            .expect("distinct labels")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn action(&self, i: usize, m: usize) -> &Combo {
        self.table.get(i, m)
    }
}

/// Verifies `[a_λ, b_μ] v = [a_λ b]_{λ+μ} v` on all basis triples.
pub fn check_module_axioms(alg: &Algebra, module: &Module) -> Result<Report> {
    if module.algebra_rank != alg.rank() {
        return Err(Error::Dimension(format!(
            "module over rank {} used with algebra of rank {}",
            module.algebra_rank,
            alg.rank()
        )));
    }
    let (n, r) = (alg.rank(), module.rank());
    let get = |i: usize, m: usize| module.action(i, m).clone();
    let f = Forms::build(n, r, &get);
    let violations: Vec<Violation> = (0..n * n * r)
        .into_par_iter()
        .filter_map(|k| {
            let (i, j, m) = (k / (n * r), (k / r) % n, k % r);
            let res = jacobi_residual(alg, &f, i, j, m);
            (!res.is_zero()).then(|| Violation {
                kind: ViolationKind::Module,
                labels: vec![
                    alg.labels[i].name.clone(),
                    alg.labels[j].name.clone(),
                    module.labels[m].name.clone(),
                ],
                residual: res,
                residual_labels: module.labels.clone(),
            })
        })
        .collect();
    Ok(Report {
        checked: n * n * r,
        violations,
    })
}

/// `φ_λ(b_j) = cols[j]`, a homogeneous conformal linear map of the algebra
/// (or, for restrictions, into a target with its own labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalLinearMap {
    pub parity: u8,
    pub cols: Vec<Combo>,
}

impl ConformalLinearMap {
    pub fn zero(rank: usize) -> Self {
        ConformalLinearMap {
            parity: 0,
            cols: vec![Combo::zero(); rank],
        }
    }

    pub fn identity(rank: usize) -> Self {
        ConformalLinearMap {
            parity: 0,
            cols: (0..rank).map(|j| Combo::single(j, CPoly::one())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Combo::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        ConformalLinearMap {
            parity: self.parity,
            cols: self
                .cols
                .iter()
                .zip(&o.cols)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ConformalLinearMap {
            parity: self.parity,
            cols: self
                .cols
                .iter()
                .zip(&o.cols)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// `(q(∂, λ) φ)_λ`
    pub fn scale(&self, q: &CPoly) -> Self {
        ConformalLinearMap {
            parity: self.parity,
            cols: self.cols.iter().map(|c| c.scale(q)).collect(),
        }
    }

    pub fn max_degree(&self, slot: usize) -> u32 {
        self.cols
            .iter()
            .map(|c| c.degree_in(slot))
            .max()
            .unwrap_or(0)
    }
}

/// `φ_λ(Σ q_j(∂) b_j) = Σ q_j(∂+λ) φ_λ(b_j)`.
pub fn apply_cmap(phi: &ConformalLinearMap, x: &Element, var: &str) -> Result<BracketValue> {
    if phi.cols.len() != x.rank() {
        return Err(Error::Dimension(format!(
            "map on rank {} applied to rank {}",
            phi.cols.len(),
            x.rank()
        )));
    }
    let shift = img(&[(D, 1), (LAMBDA, 1)]);
    let mut acc = Acc::new();
    for j in x.support() {
        acc.add_scaled(&CPoly::from_upoly(&x.coeffs[j], &shift), &phi.cols[j], 1);
    }
    Ok(BracketValue::new(&[var], acc.finish()))
}

/// `(ad x)_λ b_j = [x_λ b_j]`.
pub fn ad(alg: &Algebra, x: &Element) -> Result<ConformalLinearMap> {
    let parity = x.parity(&alg.labels).ok_or(Error::NotHomogeneous)?;
    let cols = (0..alg.rank())
        .map(|j| bracket_combo(alg, x, &Element::basis(alg.rank(), j)))
        .collect();
    Ok(ConformalLinearMap { parity, cols })
}

fn check_map_homogeneous(alg: &Algebra, phi: &ConformalLinearMap) -> Result<()> {
    if phi.cols.len() != alg.rank() {
        return Err(Error::Dimension(format!(
            "map on rank {} for algebra of rank {}",
            phi.cols.len(),
            alg.rank()
        )));
    }
    for (j, c) in phi.cols.iter().enumerate() {
        for (k, _) in &c.0 {
            if *k >= alg.rank() {
                return Err(Error::IndexOutOfRange {
                    index: *k,
                    n: alg.rank(),
                });
            }
            if alg.parity(*k) != alg.parity(j) ^ phi.parity {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    Ok(())
}

/// Residuals of `φ_λ[x_μ y] = [(φ_λ x)_{λ+μ} y] + (-1)^{p(x)p(φ)}[x_μ(φ_λ y)]`.
pub fn derivation_report(alg: &Algebra, phi: &ConformalLinearMap) -> Result<Report> {
    check_map_homogeneous(alg, phi)?;
    let n = alg.rank();
    let get = |i: usize, j: usize| alg.entry(i, j).clone();
    let f = Forms::build(n, n, &get);
    let neg = img(&[(LAMBDA, -1), (MU, -1)]);
    let dm = img(&[(D, 1), (MU, 1)]);
    let phi_neg: Vec<Combo> = phi
        .cols
        .iter()
        .map(|c| c.compose(&[Some(&neg), None, None, None]))
        .collect();
    let phi_shift: Vec<Combo> = phi
        .cols
        .iter()
        .map(|c| c.compose(&[Some(&dm), None, None, None]))
        .collect();
    let violations: Vec<Violation> = (0..n * n)
        .into_par_iter()
        .filter_map(|k| {
            let (i, j) = (k / n, k % n);
            let mut acc = Acc::new();
            for (k, p) in &f.at(&f.mu_shift, i, j).0 {
                acc.add_scaled(p, &phi.cols[*k], 1);
            }
            for (k, p) in &phi_neg[i].0 {
                acc.add_scaled(p, f.at(&f.lm, *k, j), -1);
            }
            let sign = koszul(alg.parity(i), phi.parity);
            for (k, p) in &phi_shift[j].0 {
                acc.add_scaled(p, f.at(&f.mu, i, *k), -sign);
            }
            let r = acc.finish();
            (!r.is_zero()).then(|| Violation {
                kind: ViolationKind::Derivation,
                labels: vec![alg.labels[i].name.clone(), alg.labels[j].name.clone()],
                residual: r,
                residual_labels: alg.labels.clone(),
            })
        })
        .collect();
    Ok(Report {
        checked: n * n,
        violations,
    })
}

pub fn check_conformal_derivation(alg: &Algebra, phi: &ConformalLinearMap) -> Result<bool> {
    Ok(derivation_report(alg, phi)?.passed())
}
