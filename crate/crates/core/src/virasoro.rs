//! Virasoro elements, physical Virasoro pairs, and the catalog of simple
//! physical pairs at small `N`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::conformal::{bracket_combo, nth_product, Algebra, BracketValue, Element};
use crate::cpoly::{CPoly, D, LAMBDA};
use crate::error::{Error, Result};
use crate::families::{
    ck6_alpha, distinguished_subalgebra, divergence, grassmann_scale, k_function, make_ck6,
    make_current, make_k, make_k4_prime, make_s, make_w, sl_elements, w_element, w_function,
    LieSuperalgebra,
};
use crate::grassmann::{GrassmannElement, VectorFieldElement};
use crate::linalg::FieldSystem;
use crate::scalar::Scalar;
use crate::upoly::UPoly;

#[derive(Clone, Debug)]
pub struct VirasoroCheck {
    pub holds: bool,
    /// `[L_λ L] - (∂+2λ)L`.
    pub residual: BracketValue,
}

fn require_even(alg: &Algebra, x: &Element) -> Result<()> {
    if x.rank() != alg.rank() {
        return Err(Error::Dimension(format!(
            "element of rank {} in algebra of rank {}",
            x.rank(),
            alg.rank()
        )));
    }
    match x.parity(&alg.labels) {
        Some(0) => Ok(()),
        _ => Err(Error::NotEven),
    }
}

/// Whether `[L_λ L] = (∂+2λ)L`.
pub fn is_virasoro(alg: &Algebra, l: &Element) -> Result<VirasoroCheck> {
    require_even(alg, l)?;
    let lhs = bracket_combo(alg, l, l);
    let rhs = l.to_combo().scale(&CPoly::linear(&[(D, 1), (LAMBDA, 2)]));
    let residual = lhs.sub(&rhs);
    Ok(VirasoroCheck {
        holds: residual.is_zero(),
        residual: BracketValue::new(&["l"], residual),
    })
}

/// Whether `[L_λ g] = (∂+λ)g` for every `g` in `r`.
pub fn is_physical_pair(alg: &Algebra, l: &Element, r: &[Element]) -> Result<bool> {
    require_even(alg, l)?;
    let shift = CPoly::linear(&[(D, 1), (LAMBDA, 1)]);
    Ok(r.par_iter()
        .all(|g| bracket_combo(alg, l, g) == g.to_combo().scale(&shift)))
}

/// Whether `L_(0) a = ∂a` for each `a` in `elems`.
pub fn l0_is_partial_on(alg: &Algebra, l: &Element, elems: &[Element]) -> Result<bool> {
    let mut ok = true;
    for a in elems {
        ok &= nth_product(alg, l, a, 0)? == a.mul_poly(&UPoly::d());
    }
    Ok(ok)
}

/// Whether `L_(0) b = ∂b` on every basis label.
pub fn check_l0_is_partial(alg: &Algebra, l: &Element) -> Result<bool> {
    let r = alg.rank();
    l0_is_partial_on(
        alg,
        l,
        &(0..r).map(|i| Element::basis(r, i)).collect::<Vec<_>>(),
    )
}

/// Shows that `Cur g` has no nonzero Virasoro element with `∂`-degree at
/// most `max_degree`.
///
/// At `λ = 0` the identity reads `∂P(∂) = [x, P(∂)]` with `x = P(0)`. With
/// `x` a generic symbolic element this is linear in the coefficients of
/// `P`, and an empty solution space rules out every `L`.
pub fn current_has_no_virasoro(g: &LieSuperalgebra, max_degree: usize) -> Result<bool> {
    g.validate()?;
    let n = g.dim();
    let x: Vec<Scalar> = (0..n)
        .map(|i| Scalar::param(&format!("x{}", i + 1)))
        .collect();
    let var = |i: usize, k: usize| i * (max_degree + 1) + k;
    let mut sys = FieldSystem::new(n * (max_degree + 1));
    // Coefficient of ∂^{k} on g_t: P_{t,k-1} - Σ_{i,j} x_i P_{j,k} c_{ij}^t.
    for k in 0..=max_degree + 1 {
        for t in 0..n {
            let mut eq: BTreeMap<usize, Scalar> = BTreeMap::new();
            if k >= 1 {
                eq.insert(var(t, k - 1), Scalar::one());
            }
            if k <= max_degree {
                for (&(i, j), v) in &g.brackets {
                    for (s, c) in v {
                        if *s == t {
                            let e = eq.entry(var(j, k)).or_default();
                            *e = e.sub(&x[i].mul(c));
                        }
                    }
                }
            }
            sys.add(eq);
        }
    }
    Ok(sys.nullspace().is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// A simple physical Virasoro pair.
    Pair,
    /// A physical algebra: additionally `L_(0) = ∂`.
    Physical,
    /// Expected to fail `L_(0) = ∂`.
    NegativeControl,
    /// No Virasoro element in a degree-bounded ansatz.
    NoVirasoro,
}

#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub algebra: String,
    pub element: String,
    pub kind: RowKind,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CatalogRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            RowKind::Pair => "pair",
            RowKind::Physical => "physical",
            RowKind::NegativeControl => "control",
            RowKind::NoVirasoro => "no-virasoro",
        };
        let status = if self.passed { "ok" } else { "FAIL" };
        write!(
            f,
            "{status:4} {kind:11} {:8} L = {}  [{}]",
            self.algebra, self.element, self.detail
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.rows.iter().find(|r| !r.passed) {
            Some(r) => Err(Error::CatalogFailure {
                row: format!("{} {}", r.algebra, r.element),
                reason: r.detail.clone(),
            }),
            None => Ok(self),
        }
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        let ok = self.rows.iter().filter(|r| r.passed).count();
        write!(f, "{ok}/{} rows verified", self.rows.len())
    }
}

/// One catalog entry, checked inside an ambient algebra.
struct Entry {
    name: String,
    ambient: Algebra,
    l: Element,
    r: Vec<Element>,
    /// Membership of `L` and `𝔯` in the algebra, when it is a proper subalgebra.
    member: Option<Box<dyn Fn(&Element) -> Result<bool> + Send + Sync>>,
    /// Elements spanning the algebra over `ℂ[∂]`, for the `L_(0)` check.
    basis: Vec<Element>,
}

fn params(names: &[&str]) -> Vec<Scalar> {
    names.iter().map(|n| Scalar::param(n)).collect()
}

fn euler_term(n: usize, p: UPoly) -> (UPoly, VectorFieldElement) {
    (p, VectorFieldElement::euler(n))
}

fn basis_of(alg: &Algebra) -> Vec<Element> {
    (0..alg.rank())
        .map(|i| Element::basis(alg.rank(), i))
        .collect()
}

fn w_entry(n: usize, l: Element, name: String) -> Result<Entry> {
    let w = make_w(n);
    let r = distinguished_subalgebra(&w, None, &[])?;
    Ok(Entry {
        name,
        basis: basis_of(&w),
        ambient: w,
        l,
        r,
        member: None,
    })
}

fn w_row(n: usize, p0: Scalar, p1: Scalar) -> Result<Entry> {
    let l = if n == 0 {
        w_function(&GrassmannElement::one(0)).neg()
    } else {
        let e = euler_term(n, UPoly::from_coeffs(vec![p0, p1]));
        w_element(
            n,
            &[e],
            &[(UPoly::constant(Scalar::int(-1)), GrassmannElement::one(n))],
        )
    };
    w_entry(n, l, format!("W{n}"))
}

fn s_row(n: usize, a: Scalar) -> Result<Entry> {
    let inv_n = Scalar::ratio(1, n as i64);
    let e = euler_term(n, UPoly::from_coeffs(vec![a.neg().mul(&inv_n), inv_n]));
    let l = w_element(
        n,
        &[e],
        &[(UPoly::constant(Scalar::int(-1)), GrassmannElement::one(n))],
    );
    let w = make_w(n);
    let a2 = a.clone();
    let member = move |x: &Element| Ok(divergence(n, x, &a2)?.is_zero());
    Ok(Entry {
        name: format!("S{n},{a}"),
        basis: Vec::new(),
        ambient: w,
        l,
        r: sl_elements(n),
        member: Some(Box::new(member)),
    })
}

fn s_tilde_l(n: usize) -> Element {
    let one = GrassmannElement::one(n);
    let nu = GrassmannElement::top(n);
    let e = euler_term(
        n,
        UPoly::from_coeffs(vec![Scalar::zero(), Scalar::ratio(1, n as i64)]),
    );
    let head = w_function(&one.sub(&nu).expect("same N")).neg();
    head.add(&w_element(n, &[e], &[]))
}

fn s_tilde_row(n: usize) -> Result<Entry> {
    let l = s_tilde_l(n);
    let one_nu = GrassmannElement::one(n).add(&GrassmannElement::top(n))?;
    let member = move |x: &Element| {
        Ok(divergence(n, &grassmann_scale(&one_nu, x)?, &Scalar::zero())?.is_zero())
    };
    Ok(Entry {
        name: format!("Stilde{n}"),
        basis: Vec::new(),
        ambient: make_w(n),
        l,
        r: sl_elements(n),
        member: Some(Box::new(member)),
    })
}

fn k_entry(n: usize, l: Element) -> Result<Entry> {
    let k = make_k(n);
    let r = distinguished_subalgebra(&k, None, &[])?;
    Ok(Entry {
        name: format!("K{n}"),
        basis: basis_of(&k),
        ambient: k,
        l,
        r,
        member: None,
    })
}

fn minus_one_k(n: usize) -> Element {
    k_function(&GrassmannElement::one(n)).neg()
}

fn nu_k(n: usize, p: UPoly) -> Element {
    k_function(&GrassmannElement::top(n)).mul_poly(&p)
}

fn k4_prime_row(p0: Scalar, p1: Scalar) -> Result<Entry> {
    let sub = make_k4_prime()?;
    let l = minus_one_k(4).add(&nu_k(4, UPoly::from_coeffs(vec![Scalar::zero(), p0, p1])));
    let r: Vec<Element> = distinguished_subalgebra(&sub.algebra, Some(&sub), &[])?
        .iter()
        .map(|g| sub.embed(g))
        .collect();
    let basis = sub.basis.clone();
    let ambient = sub.ambient.clone();
    let member = move |x: &Element| Ok(sub.contains(x));
    Ok(Entry {
        name: "K4prime".into(),
        ambient,
        l,
        r,
        basis,
        member: Some(Box::new(member)),
    })
}

fn ck6_row(alpha: Scalar) -> Result<Entry> {
    let sub = make_ck6(&alpha)?;
    let l = minus_one_k(6).add(&nu_k(6, UPoly::monomial(alpha.clone(), 3)));
    let r: Vec<Element> = if alpha == ck6_alpha() {
        distinguished_subalgebra(&sub.algebra, Some(&sub), &[])?
            .iter()
            .map(|g| sub.embed(g))
            .collect()
    } else {
        let (gens, names) = crate::families::ck6_generators(&alpha)?;
        gens.into_iter()
            .zip(names)
            .filter(|(_, n)| n.matches('x').count() == 2)
            .map(|(g, _)| g)
            .collect()
    };
    let basis = sub.basis.clone();
    let ambient = sub.ambient.clone();
    let member = move |x: &Element| Ok(sub.contains(x));
    Ok(Entry {
        name: format!("CK6[α={alpha}]"),
        ambient,
        l,
        r,
        basis,
        member: Some(Box::new(member)),
    })
}

fn run_entry(e: &Entry, kind: RowKind) -> CatalogRow {
    let element = e.l.display(&e.ambient.labels);
    let outcome = (|| -> Result<(bool, String)> {
        if let Some(member) = &e.member {
            if !member(&e.l)? {
                return Ok((false, "L is not in the algebra".into()));
            }
            for g in &e.r {
                if !member(g)? {
                    return Ok((
                        false,
                        format!("{} is not in the algebra", g.display(&e.ambient.labels)),
                    ));
                }
            }
        }
        let v = is_virasoro(&e.ambient, &e.l)?;
        if !v.holds {
            return Ok((
                false,
                format!(
                    "[L_l L] - (d+2l)L = {}",
                    v.residual.display(&e.ambient.labels)
                ),
            ));
        }
        if !is_physical_pair(&e.ambient, &e.l, &e.r)? {
            return Ok((false, "[L_l g] != (d+l)g for some g in r".into()));
        }
        let mut detail = format!("virasoro, (d+l) on {} elements of r", e.r.len());
        if matches!(kind, RowKind::Physical | RowKind::NegativeControl) {
            let l0 = l0_is_partial_on(&e.ambient, &e.l, &e.basis)?;
            detail.push_str(if l0 { ", L_(0) = d" } else { ", L_(0) != d" });
            return Ok((l0 == (kind == RowKind::Physical), detail));
        }
        Ok((true, detail))
    })();
    let (passed, detail) = outcome.unwrap_or_else(|err| (false, err.to_string()));
    CatalogRow {
        algebra: e.name.clone(),
        element,
        kind,
        passed,
        detail,
    }
}

fn s_basis(n: usize, a: &Scalar) -> Result<Vec<Element>> {
    Ok(make_s(n, a)?.basis)
}

/// Checks the classified simple physical Virasoro pairs with `N ≤ max_n`,
/// the physical algebras among them, the `S̃_2` control, and the absence of
/// Virasoro elements in `Cur 𝔰𝔩₂`. Parameters stay symbolic; `α` runs over
/// both square roots of `-1`.
pub fn run_physical_catalog(max_n: usize) -> Result<CatalogReport> {
    let [p0, p1, p3, a] =
        <[Scalar; 4]>::try_from(params(&["p0", "p1", "p3", "a"])).expect("four names");
    let mut jobs: Vec<(RowKind, Entry)> = Vec::new();
    jobs.push((RowKind::Pair, w_row(0, Scalar::zero(), Scalar::zero())?));
    for n in 1..=max_n {
        jobs.push((RowKind::Pair, w_row(n, p0.clone(), p1.clone())?));
    }
    for n in 2..=max_n {
        jobs.push((RowKind::Pair, s_row(n, a.clone())?));
    }
    for n in (2..=max_n).step_by(2) {
        jobs.push((RowKind::Pair, s_tilde_row(n)?));
    }
    for n in (1..=max_n).step_by(2) {
        jobs.push((RowKind::Pair, k_entry(n, minus_one_k(n))?));
    }
    if max_n >= 6 {
        let p = UPoly::from_coeffs(vec![Scalar::zero(), p1.clone(), Scalar::zero(), p3.clone()]);
        jobs.push((RowKind::Pair, k_entry(6, minus_one_k(6).add(&nu_k(6, p)))?));
    }
    if max_n >= 4 {
        jobs.push((RowKind::Pair, k4_prime_row(p0.clone(), p1.clone())?));
    }
    if max_n >= 6 {
        for alpha in [ck6_alpha(), ck6_alpha().neg()] {
            jobs.push((RowKind::Pair, ck6_row(alpha)?));
        }
    }

    // Physical algebras.
    if max_n >= 1 {
        jobs.push((RowKind::Physical, w_row(1, Scalar::zero(), p1.clone())?));
        jobs.push((RowKind::NegativeControl, w_row(1, p0.clone(), p1.clone())?));
    }
    if max_n >= 2 {
        jobs.push((
            RowKind::Physical,
            w_row(2, Scalar::zero(), Scalar::ratio(1, 2))?,
        ));
        let mut s = s_row(2, Scalar::zero())?;
        s.basis = s_basis(2, &Scalar::zero())?;
        jobs.push((RowKind::Physical, s));
        let mut st = s_tilde_row(2)?;
        st.basis = crate::families::make_tilde_s(2)?.basis;
        jobs.push((RowKind::NegativeControl, st));
    }
    for n in [0, 1, 3].into_iter().filter(|&n| n <= max_n) {
        jobs.push((RowKind::Physical, k_entry(n, minus_one_k(n))?));
    }
    if max_n >= 4 {
        jobs.push((RowKind::Physical, k4_prime_row(p0.clone(), p1.clone())?));
    }
    if max_n >= 6 {
        jobs.push((RowKind::Physical, ck6_row(ck6_alpha())?));
    }

    let mut rows: Vec<CatalogRow> = jobs
        .par_iter()
        .map(|(kind, e)| run_entry(e, *kind))
        .collect();
    let sl2 = LieSuperalgebra::sl2();
    let none = current_has_no_virasoro(&sl2, 3)?;
    rows.push(CatalogRow {
        algebra: "Cur sl2".into(),
        element: "sum P_i(d) g_i, deg P_i <= 3".into(),
        kind: RowKind::NoVirasoro,
        passed: none && make_current(&sl2).is_ok(),
        detail: if none {
            "only L = 0".into()
        } else {
            "nonzero solutions found".into()
        },
    });
    Ok(CatalogReport { rows })
}

/// [`run_physical_catalog`], failing on the first row that does not verify.
pub fn verify_physical_catalog(max_n: usize) -> Result<CatalogReport> {
    if max_n > 6 {
        return Err(Error::InvalidFamily(format!(
            "catalog checks are limited to N ≤ 6, got {max_n}"
        )));
    }
    run_physical_catalog(max_n)?.into_result()
}
