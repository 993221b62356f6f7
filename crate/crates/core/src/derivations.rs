//! Degree-bounded solvers for derivations, centroids and conformal centroids.
//!
//! Every space is found by writing an unknown map with bounded `∂`- and
//! `λ`-degrees, expanding its defining identity on all basis pairs and
//! solving the resulting linear system. Results are relative to the bounds;
//! escalation reports whether the answer moved when the bounds grew.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::conformal::{
    bracket_combo, check_conformal_derivation, koszul, Acc, Algebra, Combo, ConformalLinearMap,
    Element, Forms,
};
use crate::cpoly::{CPoly, Mono, D, LAMBDA, MU};
use crate::error::{Error, Result};
use crate::families::{divergence, lambda_coefficients, wn_module, Subalgebra, WBasis};
use crate::linalg::{FieldSystem, LinearForm, Span};
use crate::scalar::Scalar;
use crate::structure::{derived_subalgebra, Submodule};
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub dmax: u32,
    /// Ignored by the `λ`-free solvers.
    pub lmax: u32,
    pub escalation: u32,
}

impl DegreeBounds {
    pub fn new(dmax: u32, lmax: u32) -> Self {
        DegreeBounds {
            dmax,
            lmax,
            escalation: 1,
        }
    }

    pub fn with_escalation(mut self, steps: u32) -> Self {
        self.escalation = steps.max(1);
        self
    }

    fn bumped(&self, k: u32) -> Self {
        DegreeBounds {
            dmax: self.dmax + k,
            lmax: self.lmax + k,
            escalation: self.escalation,
        }
    }
}

impl fmt::Display for DegreeBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∂≤{}, λ≤{}", self.dmax, self.lmax)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    ConformalDerivations,
    Derivations,
    Centroid,
    ConformalCentroid,
}

impl SpaceKind {
    fn conformal(self) -> bool {
        matches!(
            self,
            SpaceKind::ConformalDerivations | SpaceKind::ConformalCentroid
        )
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::ConformalDerivations => "cder",
            SpaceKind::Derivations => "der",
            SpaceKind::Centroid => "centroid",
            SpaceKind::ConformalCentroid => "conformal centroid",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub kind: SpaceKind,
    pub bounds: DegreeBounds,
    /// Homogeneous maps; `λ`-free ones are `ℂ[∂]`-matrices.
    pub basis: Vec<ConformalLinearMap>,
    /// `ℂ`-dimension at `bounds`.
    pub dim: usize,
    /// Rank over `ℂ[∂]` (acting by `-λ`) for conformal spaces.
    pub module_rank: Option<usize>,
    /// The stability measure (module rank, else dimension) at each escalation.
    pub escalated: Vec<usize>,
    pub stable: bool,
    /// Every basis map re-passes its defining identity.
    pub verified: bool,
    /// Checked only when `⟨[R_λ R]⟩ = R`.
    pub supercommutative: Option<bool>,
}

impl fmt::Display for SolutionSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: dim {}", self.kind, self.bounds, self.dim)?;
        if let Some(r) = self.module_rank {
            write!(f, ", C[d]-rank {r}")?;
        }
        write!(f, ", {}", if self.stable { "stable" } else { "unstable" })?;
        write!(f, " (escalation {:?})", self.escalated)?;
        if let Some(s) = self.supercommutative {
            write!(f, ", supercommutative: {s}")?;
        }
        Ok(())
    }
}

impl SolutionSpace {
    /// `ℂ`-linear membership of a map in the span of the basis.
    pub fn contains(&self, phi: &ConformalLinearMap) -> bool {
        let mut index: HashMap<(usize, usize, Mono), usize> = HashMap::new();
        let mut flat = |m: &ConformalLinearMap| {
            let mut out = LinearForm::new();
            for (c, col) in m.cols.iter().enumerate() {
                for (t, p) in &col.0 {
                    for (mono, s) in &p.terms {
                        let next = index.len();
                        let k = *index.entry((c, *t, *mono)).or_insert(next);
                        out.insert(k, s.clone());
                    }
                }
            }
            out
        };
        let rows: Vec<LinearForm> = self.basis.iter().map(&mut flat).collect();
        let target = flat(phi);
        let mut sys = FieldSystem::new(index.len());
        for r in rows {
            sys.add(r);
        }
        !sys.add(target)
    }
}

const NEG_LM: [(usize, i64); 2] = [(LAMBDA, -1), (MU, -1)];

fn lin(parts: &[(usize, i64)]) -> CPoly {
    CPoly::linear(parts)
}

/// The substitutions a kind needs on `φ`'s columns.
struct Shapes {
    neg: CPoly,
    shift: CPoly,
}

impl Shapes {
    fn of(kind: SpaceKind) -> Shapes {
        if kind.conformal() {
            Shapes {
                neg: lin(&NEG_LM),
                shift: lin(&[(D, 1), (MU, 1)]),
            }
        } else {
            Shapes {
                neg: lin(&[(LAMBDA, -1)]),
                shift: lin(&[(D, 1), (LAMBDA, 1)]),
            }
        }
    }

    fn neg(&self, c: &Combo) -> Combo {
        c.compose(&[Some(&self.neg), None, None, None])
    }

    fn shift(&self, c: &Combo) -> Combo {
        c.compose(&[Some(&self.shift), None, None, None])
    }
}

/// Residual of the defining identity on `(b_i, b_j)` for a map given by
/// columns (plain, negated, shifted), each optional when known to vanish.
#[allow(clippy::too_many_arguments)]
fn residual(
    kind: SpaceKind,
    alg: &Algebra,
    f: &Forms,
    parity: u8,
    col: &dyn Fn(usize) -> Option<(Combo, Combo, Combo)>,
    i: usize,
    j: usize,
) -> Combo {
    let mut acc = Acc::new();
    let (first, mid, last) = if kind.conformal() {
        (&f.mu_shift, &f.lm, &f.mu)
    } else {
        (&f.lam, &f.lam, &f.lam)
    };
    for (k, p) in &f.at(first, i, j).0 {
        if let Some((c, _, _)) = col(*k) {
            acc.add_scaled(p, &c, 1);
        }
    }
    if matches!(
        kind,
        SpaceKind::ConformalDerivations | SpaceKind::Derivations | SpaceKind::ConformalCentroid
    ) {
        if let Some((_, neg, _)) = col(i) {
            for (k, p) in &neg.0 {
                acc.add_scaled(p, f.at(mid, *k, j), -1);
            }
        }
    }
    if matches!(
        kind,
        SpaceKind::ConformalDerivations | SpaceKind::Derivations | SpaceKind::Centroid
    ) {
        if let Some((_, _, shift)) = col(j) {
            let sign = koszul(alg.parity(i), parity);
            for (k, p) in &shift.0 {
                acc.add_scaled(p, f.at(last, i, *k), -sign);
            }
        }
    }
    acc.finish()
}

fn forms(alg: &Algebra) -> Forms {
    let n = alg.rank();
    Forms::build(n, n, &|i, j| alg.entry(i, j).clone())
}

fn check_kind(alg: &Algebra, phi: &ConformalLinearMap, kind: SpaceKind, f: &Forms) -> Result<bool> {
    let n = alg.rank();
    if phi.cols.len() != n {
        return Err(Error::Dimension(format!(
            "map on rank {} for algebra of rank {n}",
            phi.cols.len()
        )));
    }
    let sh = Shapes::of(kind);
    let cols: Vec<(Combo, Combo, Combo)> = phi
        .cols
        .iter()
        .map(|c| (c.clone(), sh.neg(c), sh.shift(c)))
        .collect();
    let get = |k: usize| Some(cols[k].clone());
    Ok((0..n * n)
        .into_par_iter()
        .all(|k| residual(kind, alg, f, phi.parity, &get, k / n, k % n).is_zero()))
}

fn lambda_free(phi: &ConformalLinearMap) -> Result<()> {
    if phi.cols.iter().any(|c| c.degree_in(LAMBDA) > 0) {
        return Err(Error::Dimension("expected a λ-free ℂ[∂]-matrix".into()));
    }
    Ok(())
}

/// `d([x_μ y]) = [d(x)_μ y] + (-1)^{p(x)p(d)}[x_μ d(y)]` for a `ℂ[∂]`-matrix `d`.
pub fn check_ordinary_derivation(alg: &Algebra, d: &ConformalLinearMap) -> Result<bool> {
    lambda_free(d)?;
    check_kind(alg, d, SpaceKind::Derivations, &forms(alg))
}

/// `φ(x_(n) y) = (-1)^{p(φ)p(x)} x_(n) φ(y)` for all `n`.
pub fn check_centroid(alg: &Algebra, phi: &ConformalLinearMap) -> Result<bool> {
    lambda_free(phi)?;
    check_kind(alg, phi, SpaceKind::Centroid, &forms(alg))
}

/// `φ_λ[x_μ y] = [(φ_λ x)_{λ+μ} y]`.
pub fn check_conformal_centroid(alg: &Algebra, phi: &ConformalLinearMap) -> Result<bool> {
    check_kind(alg, phi, SpaceKind::ConformalCentroid, &forms(alg))
}

/// `φ_λ[x_μ y] = (-1)^{p(x)p(φ)}[x_μ(φ_λ y)]`, the right-hand form that
/// every conformal-centroid element satisfies when `R` is spanned by brackets.
pub fn check_conformal_centroid_right(alg: &Algebra, phi: &ConformalLinearMap) -> Result<bool> {
    let f = forms(alg);
    let n = alg.rank();
    let sh = Shapes::of(SpaceKind::ConformalCentroid);
    let cols: Vec<Combo> = phi.cols.iter().map(|c| sh.shift(c)).collect();
    Ok((0..n * n).into_par_iter().all(|k| {
        let (i, j) = (k / n, k % n);
        let mut acc = Acc::new();
        for (m, p) in &f.at(&f.mu_shift, i, j).0 {
            acc.add_scaled(p, &phi.cols[*m], 1);
        }
        let sign = koszul(alg.parity(i), phi.parity);
        for (m, p) in &cols[j].0 {
            acc.add_scaled(p, f.at(&f.mu, i, *m), -sign);
        }
        acc.finish().is_zero()
    }))
}

/// `(φψ)(b_j) = φ(ψ(b_j))` for `ℂ[∂]`-matrices.
pub fn compose_matrices(phi: &ConformalLinearMap, psi: &ConformalLinearMap) -> ConformalLinearMap {
    let cols = psi
        .cols
        .iter()
        .map(|c| {
            let mut acc = Acc::new();
            for (t, p) in &c.0 {
                acc.add_scaled(p, &phi.cols[*t], 1);
            }
            acc.finish()
        })
        .collect();
    ConformalLinearMap {
        parity: phi.parity ^ psi.parity,
        cols,
    }
}

/// One unknown: the coefficient of `mono · b_target` in column `col`.
#[derive(Clone, Copy)]
struct Unknown {
    col: usize,
    target: usize,
    mono: Mono,
}

fn unknowns(alg: &Algebra, parity: u8, dmax: u32, lmax: u32) -> Vec<Unknown> {
    let n = alg.rank();
    let mut out = Vec::new();
    for col in 0..n {
        for target in (0..n).filter(|&t| alg.parity(t) == alg.parity(col) ^ parity) {
            for a in 0..=dmax {
                for b in 0..=lmax {
                    out.push(Unknown {
                        col,
                        target,
                        mono: Mono::from_exps([a, b, 0, 0]),
                    });
                }
            }
        }
    }
    out
}

type EqKey = (usize, usize, usize, Mono);

fn solve_parity(
    kind: SpaceKind,
    alg: &Algebra,
    f: &Forms,
    touch: &[Vec<(usize, usize)>],
    parity: u8,
    b: DegreeBounds,
) -> Vec<ConformalLinearMap> {
    let lmax = if kind.conformal() { b.lmax } else { 0 };
    let vars = unknowns(alg, parity, b.dmax, lmax);
    if vars.is_empty() {
        return Vec::new();
    }
    let sh = Shapes::of(kind);
    let contributions: Vec<Vec<(EqKey, usize, Scalar)>> = vars
        .par_iter()
        .enumerate()
        .map(|(u, var)| {
            let c = Combo::single(var.target, CPoly::term(var.mono, Scalar::one()));
            let shaped = (c.clone(), sh.neg(&c), sh.shift(&c));
            let col = |k: usize| (k == var.col).then(|| shaped.clone());
            let mut out = Vec::new();
            for &(i, j) in &touch[var.col] {
                for (label, p) in residual(kind, alg, f, parity, &col, i, j).0 {
                    for (m, s) in p.terms {
                        out.push(((i, j, label, m), u, s));
                    }
                }
            }
            out
        })
        .collect();
    let mut eqs: HashMap<EqKey, LinearForm> = HashMap::new();
    for (key, u, s) in contributions.into_iter().flatten() {
        let e = eqs.entry(key).or_default().entry(u).or_default();
        e.add_assign(&s);
    }
    let mut keys: Vec<EqKey> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let mut sys = FieldSystem::new(vars.len());
    for k in keys {
        sys.add(eqs.remove(&k).expect("key present"));
    }
    sys.nullspace()
        .into_iter()
        .map(|x| {
            let mut cols = vec![Combo::zero(); alg.rank()];
            for (u, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    let v = &vars[u];
                    cols[v.col] =
                        cols[v.col].add(&Combo::single(v.target, CPoly::term(v.mono, c.clone())));
                }
            }
            ConformalLinearMap { parity, cols }
        })
        .collect()
}

/// Pairs `(i, j)` whose identity involves column `c`.
fn touch_table(alg: &Algebra) -> Vec<Vec<(usize, usize)>> {
    let n = alg.rank();
    let mut t = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let mut cols: Vec<usize> = alg.entry(i, j).0.iter().map(|(k, _)| *k).collect();
            cols.push(i);
            cols.push(j);
            cols.sort_unstable();
            cols.dedup();
            for c in cols {
                t[c].push((i, j));
            }
        }
    }
    t
}

fn solve_at(
    kind: SpaceKind,
    alg: &Algebra,
    f: &Forms,
    touch: &[Vec<(usize, usize)>],
    b: DegreeBounds,
) -> Vec<ConformalLinearMap> {
    let mut out = solve_parity(kind, alg, f, touch, 0, b);
    out.extend(solve_parity(kind, alg, f, touch, 1, b));
    out
}

/// Rank over `ℂ[λ]` of the span of `maps`, i.e. over `ℂ[∂]` acting by `-λ`.
fn lambda_rank(maps: &[ConformalLinearMap], n: usize, dmax: u32) -> usize {
    let width = (dmax + 1) as usize;
    let mut span = Span::new(n * n * width);
    for phi in maps {
        let mut v = vec![UPoly::zero(); n * n * width];
        for (c, col) in phi.cols.iter().enumerate() {
            for (t, p) in &col.0 {
                for (m, s) in &p.terms {
                    let slot = (c * n + t) * width + m.exp(D) as usize;
                    v[slot] = v[slot].add(&UPoly::monomial(s.clone(), m.exp(LAMBDA) as usize));
                }
            }
        }
        span.insert(v);
    }
    span.rank()
}

fn solve(kind: SpaceKind, alg: &Algebra, bounds: DegreeBounds) -> SolutionSpace {
    let f = forms(alg);
    let touch = touch_table(alg);
    let n = alg.rank();
    let basis = solve_at(kind, alg, &f, &touch, bounds);
    let measure = |maps: &[ConformalLinearMap], b: DegreeBounds| {
        if kind.conformal() {
            lambda_rank(maps, n, b.dmax)
        } else {
            maps.len()
        }
    };
    let mut escalated = vec![measure(&basis, bounds)];
    for k in 1..=bounds.escalation.max(1) {
        let b = bounds.bumped(k);
        escalated.push(measure(&solve_at(kind, alg, &f, &touch, b), b));
    }
    let stable = escalated.windows(2).all(|w| w[0] == w[1]);
    let verified = basis.par_iter().all(|phi| {
        check_kind(alg, phi, kind, &f).unwrap_or(false)
            && (kind != SpaceKind::ConformalDerivations
                || check_conformal_derivation(alg, phi).unwrap_or(false))
    });
    let supercommutative = (kind == SpaceKind::Centroid
        && derived_subalgebra(alg) == Submodule::whole(alg))
    .then(|| {
        basis.iter().all(|a| {
            basis.iter().all(|b| {
                let sign = Scalar::int(koszul(a.parity, b.parity));
                let ab = compose_matrices(a, b);
                let ba = compose_matrices(b, a).scale(&CPoly::constant(sign));
                ab == ba
            })
        })
    });
    SolutionSpace {
        kind,
        bounds,
        dim: basis.len(),
        module_rank: kind.conformal().then(|| measure(&basis, bounds)),
        basis,
        escalated,
        stable,
        verified,
        supercommutative,
    }
}

/// Conformal derivations `φ_λ[x_μ y] = [(φ_λ x)_{λ+μ} y] + (-1)^{p(x)p(φ)}[x_μ φ_λ y]`.
pub fn solve_cder(alg: &Algebra, bounds: DegreeBounds) -> SolutionSpace {
    solve(SpaceKind::ConformalDerivations, alg, bounds)
}

/// Ordinary derivations as `ℂ[∂]`-matrices with entries of degree `≤ dmax`.
pub fn solve_ordinary_der(alg: &Algebra, dmax: u32) -> SolutionSpace {
    solve(SpaceKind::Derivations, alg, DegreeBounds::new(dmax, 0))
}

pub fn solve_centroid(alg: &Algebra, dmax: u32) -> SolutionSpace {
    solve(SpaceKind::Centroid, alg, DegreeBounds::new(dmax, 0))
}

/// The conformal centroid; every solution is also checked against the
/// right-hand identity.
pub fn solve_conformal_centroid(alg: &Algebra, bounds: DegreeBounds) -> SolutionSpace {
    let mut s = solve(SpaceKind::ConformalCentroid, alg, bounds);
    s.verified = s.verified
        && s.basis
            .iter()
            .all(|phi| check_conformal_centroid_right(alg, phi).unwrap_or(false));
    s
}

/// `ad x` for an ambient `x` normalising `sub`, written over `sub`'s basis.
pub fn restricted_ad(sub: &Subalgebra, x: &Element) -> Result<ConformalLinearMap> {
    let parity = x.parity(&sub.ambient.labels).ok_or(Error::NotHomogeneous)?;
    let cols = sub
        .basis
        .iter()
        .map(|b| {
            let full = bracket_combo(&sub.ambient, x, b);
            let mut acc = Acc::new();
            for (k, coef) in lambda_coefficients(sub.ambient.rank(), &full) {
                let y = sub.restrict(&coef).ok_or_else(|| {
                    Error::ClosureFailure(format!("[x_λ b] leaves {}", sub.algebra.name))
                })?;
                let lk = CPoly::var(LAMBDA).pow(k);
                for t in y.support() {
                    acc.add_scaled(
                        &CPoly::from_upoly(&y.coeffs[t], &CPoly::var(D)).mul(&lk),
                        &Combo::single(t, CPoly::one()),
                        1,
                    );
                }
            }
            Ok(acc.finish())
        })
        .collect::<Result<_>>()?;
    Ok(ConformalLinearMap { parity, cols })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDecomposition {
    /// `x` with `φ = ad x`, if one exists with `∂`-degree `≤ bound`.
    pub inner: Option<Element>,
    pub bound: u32,
    /// `ℂ`-dimension of `{x | ad x = 0}` within the bound.
    pub ambiguity: usize,
}

/// Solves `φ = ad x` over `x` of `∂`-degree at most the `λ`-degree of `φ`.
pub fn decompose_inner(alg: &Algebra, phi: &ConformalLinearMap) -> Result<InnerDecomposition> {
    if !check_conformal_derivation(alg, phi)? {
        return Err(Error::NotADerivation);
    }
    let n = alg.rank();
    let bound = phi.max_degree(LAMBDA);
    let vars: Vec<(usize, u32)> = (0..n)
        .filter(|&k| alg.parity(k) == phi.parity)
        .flat_map(|k| (0..=bound).map(move |a| (k, a)))
        .collect();
    let t = vars.len();
    let neg = CPoly::linear(&[(LAMBDA, -1)]);
    let mut eqs: BTreeMap<(usize, usize, Mono), LinearForm> = BTreeMap::new();
    for j in 0..n {
        for (u, &(k, a)) in vars.iter().enumerate() {
            let c = alg.entry(k, j).scale(&neg.pow(a));
            for (label, p) in c.0 {
                for (m, s) in p.terms {
                    eqs.entry((j, label, m))
                        .or_default()
                        .entry(u)
                        .or_default()
                        .add_assign(&s);
                }
            }
        }
        for (label, p) in &phi.cols[j].0 {
            for (m, s) in &p.terms {
                eqs.entry((j, *label, *m))
                    .or_default()
                    .entry(t)
                    .or_default()
                    .add_assign(&s.neg());
            }
        }
    }
    let mut sys = FieldSystem::new(t + 1);
    for (_, e) in eqs {
        sys.add(e);
    }
    let null = sys.nullspace();
    let particular = null.iter().find(|x| !x[t].is_zero());
    let inner = particular.map(|x| {
        let inv = x[t].inv().expect("nonzero");
        let mut e = Element::zero(n);
        for (u, &(k, a)) in vars.iter().enumerate() {
            let c = x[u].mul(&inv);
            if !c.is_zero() {
                e.coeffs[k] = e.coeffs[k].add(&UPoly::monomial(c, a as usize));
            }
        }
        e
    });
    let ambiguity = null.len() - usize::from(inner.is_some());
    Ok(InnerDecomposition {
        inner,
        bound,
        ambiguity,
    })
}

/// `Div` applied coefficientwise to a value in `ℂ[∂, λ] ⊗ W_N`.
fn div_combo(n: usize, c: &Combo) -> Result<Combo> {
    let w = WBasis::new(n);
    let mut acc = Acc::new();
    for (k, p) in &c.0 {
        let d = divergence(n, &Element::basis(w.rank(), *k), &Scalar::zero())?;
        acc.add_scaled(p, &d.to_combo(), 1);
    }
    Ok(acc.finish())
}

/// `(x)_λ g` for `x ∈ W_N`, `g ∈ ℂ[∂] ⊗ ∧(N)`, in slots `(∂, λ)`.
fn act(n: usize, x: &Element, g: &Element) -> Combo {
    let m = wn_module(n);
    let dl = CPoly::linear(&[(D, 1), (LAMBDA, 1)]);
    let nl = CPoly::linear(&[(LAMBDA, -1)]);
    let mut acc = Acc::new();
    for i in x.support() {
        let left = CPoly::from_upoly(&x.coeffs[i], &nl);
        for k in g.support() {
            let right = CPoly::from_upoly(&g.coeffs[k], &dl);
            acc.add_scaled(&left.mul(&right), m.action(i, k), 1);
        }
    }
    acc.finish()
}

/// `Div[D1_λ D2] = D1_λ(Div D2) - (-1)^{p(D1)p(D2)} D2_{-λ-∂}(Div D1)`.
pub fn check_div_identity(n: usize, d1: &Element, d2: &Element) -> Result<bool> {
    let w = crate::families::make_w(n);
    for x in [d1, d2] {
        if x.rank() != w.rank() {
            return Err(Error::AmbientMismatch(n, x.rank()));
        }
    }
    let p1 = d1.parity(&w.labels).ok_or(Error::NotHomogeneous)?;
    let p2 = d2.parity(&w.labels).ok_or(Error::NotHomogeneous)?;
    let lhs = div_combo(n, &bracket_combo(&w, d1, d2))?;
    let first = act(n, d1, &divergence(n, d2, &Scalar::zero())?);
    let flip = CPoly::linear(&[(D, -1), (LAMBDA, -1)]);
    let second =
        act(n, d2, &divergence(n, d1, &Scalar::zero())?).compose(&[None, Some(&flip), None, None]);
    let rhs = first.sub(&second.scale(&CPoly::constant(Scalar::int(koszul(p1, p2)))));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_current, make_vir, LieSuperalgebra};

    #[test]
    fn vir_cder_contains_ad_l() {
        let s = solve_cder(&make_vir(), DegreeBounds::new(1, 1));
        assert!(s.verified);
        assert_eq!(s.module_rank, Some(1));
        assert!(s.stable);
    }

    #[test]
    fn abelian_rank_one() {
        let a = make_current(&LieSuperalgebra::abelian(1)).unwrap();
        assert_eq!(solve_cder(&a, DegreeBounds::new(1, 2)).dim, 6);
        assert_eq!(solve_ordinary_der(&a, 2).dim, 3);
        assert_eq!(solve_centroid(&a, 1).dim, 2);
    }
}
