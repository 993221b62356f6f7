//! `W_N`, its divergence, and the divergence-free families `S_{N,a}`, `S̃_N`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::conformal::{Algebra, Combo, Element, FamilyTag, Module};
use crate::cpoly::{CPoly, D, LAMBDA};
use crate::error::{Error, Result};
use crate::grassmann::{
    gmul, scale_field, wapply, wbracket, GMono, GrassmannElement, VectorFieldElement,
};
use crate::linalg::{hnf_rows, kernel, PolyMatrix};
use crate::scalar::Scalar;
use crate::upoly::UPoly;

use super::subalgebra::{element_matrix, row_names, Subalgebra};
use super::EmbeddedElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WLabel {
    Field(GMono, usize),
    Function(GMono),
}

/// Basis bookkeeping for `W_N`: vector fields `ξ_S ∂_i` ordered by
/// `(|S|, S, i)`, then functions `ξ_S` ordered by `(|S|, S)`.
///
/// For `N = 0` the single basis element is `L = -1`.
#[derive(Clone, Debug)]
pub struct WBasis {
    pub n: usize,
    pub labels: Vec<WLabel>,
    index: HashMap<WLabel, usize>,
}

impl WBasis {
    pub fn new(n: usize) -> Self {
        let monos = GMono::all(n);
        let mut labels = Vec::new();
        for s in &monos {
            for i in 1..=n {
                labels.push(WLabel::Field(*s, i));
            }
        }
        labels.extend(monos.iter().map(|s| WLabel::Function(*s)));
        let index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        WBasis { n, labels, index }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Sign relating the basis label of `ξ_S` to `ξ_S` itself.
    pub fn function_sign(&self) -> i64 {
        if self.n == 0 {
            -1
        } else {
            1
        }
    }

    pub fn parity(&self, k: usize) -> u8 {
        match self.labels[k] {
            WLabel::Field(s, _) => 1 - s.parity(),
            WLabel::Function(s) => s.parity(),
        }
    }

    pub fn name(&self, k: usize) -> String {
        match self.labels[k] {
            WLabel::Field(s, i) => {
                let m = if s.0 == 0 { String::new() } else { s.name() };
                format!("{m}d{i}")
            }
            WLabel::Function(_) if self.n == 0 => "L".into(),
            WLabel::Function(s) => s.name(),
        }
    }

    pub fn label_list(&self) -> Vec<(String, u8)> {
        (0..self.rank())
            .map(|k| (self.name(k), self.parity(k)))
            .collect()
    }

    pub fn index_of(&self, l: WLabel) -> usize {
        self.index[&l]
    }

    pub fn field_combo(&self, x: &VectorFieldElement) -> Combo {
        let mut v: Vec<(usize, CPoly)> = x
            .terms
            .iter()
            .map(|((s, i), c)| {
                (
                    self.index_of(WLabel::Field(*s, *i)),
                    CPoly::constant(c.clone()),
                )
            })
            .collect();
        v.sort_by_key(|(k, _)| *k);
        Combo(v)
    }

    pub fn function_combo(&self, f: &GrassmannElement) -> Combo {
        let sign = Scalar::int(self.function_sign());
        let mut v: Vec<(usize, CPoly)> = f
            .terms
            .iter()
            .map(|(s, c)| {
                (
                    self.index_of(WLabel::Function(*s)),
                    CPoly::constant(c.mul(&sign)),
                )
            })
            .collect();
        v.sort_by_key(|(k, _)| *k);
        Combo(v)
    }

    /// The basis element as a vector field or (signed) function.
    pub fn field(&self, k: usize) -> Option<VectorFieldElement> {
        match self.labels[k] {
            WLabel::Field(s, i) => Some(VectorFieldElement::monomial(self.n, s, i, Scalar::one())),
            WLabel::Function(_) => None,
        }
    }

    pub fn function(&self, k: usize) -> Option<GrassmannElement> {
        match self.labels[k] {
            WLabel::Function(s) => Some(GrassmannElement::monomial(
                self.n,
                s,
                Scalar::int(self.function_sign()),
            )),
            WLabel::Field(..) => None,
        }
    }

    /// `[b_k λ b_l]` from the defining formulas.
    pub fn bracket(&self, k: usize, l: usize) -> Combo {
        let lam = CPoly::var(LAMBDA);
        let d_l = CPoly::linear(&[(D, 1), (LAMBDA, 1)]);
        let s = crate::conformal::koszul(self.parity(k), self.parity(l));
        match (self.field(k), self.field(l)) {
            (Some(a), Some(b)) => self.field_combo(&wbracket(&a, &b).expect("same N")),
            (Some(a), None) => {
                // [a_λ g] = a(g) − λ(−1)^{p(a)p(g)} g·a
                let g = self.function(l).unwrap();
                let t1 = self.function_combo(&wapply(&a, &g).expect("same N"));
                let t2 = self
                    .field_combo(&scale_field(&g, &a).expect("same N"))
                    .scale(&lam);
                if s < 0 {
                    t1.add(&t2)
                } else {
                    t1.sub(&t2)
                }
            }
            (None, Some(b)) => {
                // [f_λ b] = −(−1)^{p(f)p(b)} b(f) − (∂+λ)(f·b)
                let f = self.function(k).unwrap();
                let t1 = self.function_combo(&wapply(&b, &f).expect("same N"));
                let t2 = self
                    .field_combo(&scale_field(&f, &b).expect("same N"))
                    .scale(&d_l);
                let t1 = if s < 0 { t1 } else { t1.neg() };
                t1.sub(&t2)
            }
            (None, None) => {
                // [f_λ g] = −(∂+2λ) fg
                let f = self.function(k).unwrap();
                let g = self.function(l).unwrap();
                let fg = gmul(&f, &g).expect("same N");
                self.function_combo(&fg)
                    .scale(&CPoly::linear(&[(D, -1), (LAMBDA, -2)]))
            }
        }
    }

    /// `[b_k λ g]` for `g ∈ ∧(N)` in the module `ℂ[∂] ⊗ ∧(N)`:
    /// vector fields act by derivation, functions by `-(∂+λ)` times product.
    pub fn act(&self, k: usize, g: &GrassmannElement) -> Vec<(GMono, CPoly)> {
        
        match (self.field(k), self.function(k)) {
            (Some(a), _) => {
                let v = wapply(&a, g).expect("same N");
                v.terms
                    .into_iter()
                    .map(|(m, c)| (m, CPoly::constant(c)))
                    .collect()
            }
            (None, Some(f)) => {
                let v = gmul(&f, g).expect("same N");
                let d_l = CPoly::linear(&[(D, -1), (LAMBDA, -1)]);
                v.terms
                    .into_iter()
                    .map(|(m, c)| (m, d_l.scale(&c)))
                    .collect()
            }
            _ => unreachable!(),
        }
    }
}

/// `W_N`, of rank `(N+1) 2^N`.
pub fn make_w(n: usize) -> Algebra {
    let basis = Arc::new(WBasis::new(n));
    let labels = basis.label_list();
    let b = basis.clone();
    let rule = Arc::new(move |k: usize, l: usize| b.bracket(k, l));
    Algebra::from_rule(&format!("W{n}"), &labels, rule)
        .expect("distinct labels")
        .with_tag(FamilyTag::W(n))
}

/// `ℂ[∂] ⊗ ∧(N)` as a module over `W_N`.
pub fn wn_module(n: usize) -> Module {
    let basis = Arc::new(WBasis::new(n));
    let monos = GMono::all(n);
    let labels: Vec<(String, u8)> = monos.iter().map(|m| (m.name(), m.parity())).collect();
    let pos: HashMap<GMono, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let b = basis.clone();
    let rule = Arc::new(move |k: usize, m: usize| {
        let g = GrassmannElement::monomial(n, monos[m], Scalar::one());
        let mut v: Vec<(usize, CPoly)> = b
            .act(k, &g)
            .into_iter()
            .map(|(mm, p)| (pos[&mm], p))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        Combo(v)
    });
    Module::from_rule(&format!("C[d]*Λ({n})"), basis.rank(), &labels, rule)
        .expect("distinct labels")
}

/// A vector field with constant coefficients as an element of `W_N`.
pub fn w_vector_field(x: &VectorFieldElement) -> Element {
    let b = WBasis::new(x.n);
    Element::from_combo(b.rank(), &b.field_combo(x)).expect("constant")
}

/// A function as an element of `W_N`.
pub fn w_function(f: &GrassmannElement) -> Element {
    let b = WBasis::new(f.n);
    Element::from_combo(b.rank(), &b.function_combo(f)).expect("constant")
}

/// `Σ p_k(∂) x_k + Σ q_k(∂) f_k` as an element of `W_N`.
pub fn w_element(
    n: usize,
    fields: &[(UPoly, VectorFieldElement)],
    functions: &[(UPoly, GrassmannElement)],
) -> Element {
    let mut e = Element::zero(WBasis::new(n).rank());
    for (p, x) in fields {
        e = e.add(&w_vector_field(x).mul_poly(p));
    }
    for (q, f) in functions {
        e = e.add(&w_function(f).mul_poly(q));
    }
    e
}

/// The Euler field `E = Σ ξ_i ∂_i` in `W_N`.
pub fn make_euler(n: usize) -> Result<EmbeddedElement> {
    if n == 0 {
        return Err(Error::InvalidFamily("the Euler field needs N ≥ 1".into()));
    }
    Ok(EmbeddedElement {
        ambient: make_w(n),
        element: w_vector_field(&VectorFieldElement::euler(n)),
    })
}

/// `Div_a D`, as coefficients over the monomials of `∧(N)` in canonical order.
///
/// `Div(P ∂_i) = (-1)^{p(P)} ∂_i P`, `Div f = -∂f`, `Div_a = Div + a·(f-part)`.
pub fn divergence(n: usize, x: &Element, a: &Scalar) -> Result<Element> {
    let b = WBasis::new(n);
    if x.rank() != b.rank() {
        return Err(Error::WrongAmbient(format!(
            "element of rank {} is not in W{n}",
            x.rank()
        )));
    }
    let monos = GMono::all(n);
    let pos: HashMap<GMono, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut out = Element::zero(monos.len());
    for k in x.support() {
        let q = &x.coeffs[k];
        match b.labels[k] {
            WLabel::Field(s, i) => {
                let g = GrassmannElement::monomial(n, s, Scalar::one());
                let d = crate::grassmann::gpartial(i, &g)?;
                let sign = if s.parity() == 1 {
                    Scalar::int(-1)
                } else {
                    Scalar::one()
                };
                for (m, c) in d.terms {
                    let t = pos[&m];
                    out.coeffs[t] = out.coeffs[t].add(&q.scale(&c.mul(&sign)));
                }
            }
            WLabel::Function(s) => {
                let f = UPoly::from_coeffs(vec![a.clone(), Scalar::int(-1)]);
                let f = f.scale(&Scalar::int(b.function_sign()));
                let t = pos[&s];
                out.coeffs[t] = out.coeffs[t].add(&q.mul(&f));
            }
        }
    }
    Ok(out)
}

/// `f · (Σ P_i ∂_i + g) = Σ (f P_i) ∂_i + f g`, coefficient-wise.
pub fn grassmann_scale(f: &GrassmannElement, x: &Element) -> Result<Element> {
    let b = WBasis::new(f.n);
    if x.rank() != b.rank() {
        return Err(Error::AmbientMismatch(f.n, x.rank()));
    }
    let mut out = Element::zero(b.rank());
    for k in x.support() {
        let image = match (b.field(k), b.function(k)) {
            (Some(v), _) => w_vector_field(&scale_field(f, &v)?),
            (None, Some(g)) => w_function(&gmul(f, &g)?),
            _ => unreachable!(),
        };
        out = out.add(&image.mul_poly(&x.coeffs[k]));
    }
    Ok(out)
}

fn divergence_matrix(n: usize, a: &Scalar, pre: Option<&GrassmannElement>) -> Result<PolyMatrix> {
    let b = WBasis::new(n);
    let rows = (0..b.rank())
        .map(|k| {
            let e = Element::basis(b.rank(), k);
            let e = match pre {
                Some(f) => grassmann_scale(f, &e)?,
                None => e,
            };
            Ok(divergence(n, &e, a)?.coeffs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_rows(1 << n, rows))
}

/// `S_{N,a} = ker Div_a ⊂ W_N`, of rank `N 2^N`.
pub fn make_s(n: usize, a: &Scalar) -> Result<Subalgebra> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("S_N needs N ≥ 2, got {n}")));
    }
    let w = make_w(n);
    let k = kernel(&divergence_matrix(n, a, None)?);
    let rows: Vec<Element> = k
        .rows
        .into_iter()
        .map(|coeffs| Element { coeffs })
        .collect();
    let names = row_names(&w, &rows);
    let mut sub = Subalgebra::new(&format!("S{n},{a}"), &w, rows, names, FamilyTag::S(n))?;
    let params = a.params();
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    sub.algebra = sub.algebra.clone().with_params(&params);
    Ok(sub)
}

/// `S̃_N = {D ∈ W_N | Div((1+ν)D) = 0}` for even `N`, checked against
/// `(1-ν) S_N`.
pub fn make_tilde_s(n: usize) -> Result<Subalgebra> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidFamily(format!(
            "S̃_N needs even N ≥ 2, got {n}"
        )));
    }
    let w = make_w(n);
    let one = GrassmannElement::one(n);
    let nu = GrassmannElement::top(n);
    let k = kernel(&divergence_matrix(
        n,
        &Scalar::zero(),
        Some(&one.add(&nu)?),
    )?);
    let s = make_s(n, &Scalar::zero())?;
    let minus = one.sub(&nu)?;
    let scaled: Vec<Element> = s
        .basis
        .iter()
        .map(|e| grassmann_scale(&minus, e))
        .collect::<Result<_>>()?;
    let other = hnf_rows(&element_matrix(w.rank(), &scaled));
    if hnf_rows(&k) != other {
        return Err(Error::ConstructionMismatch(
            "kernel of Div((1+ν)·) differs from (1-ν)S_N".into(),
        ));
    }
    let rows: Vec<Element> = k
        .rows
        .into_iter()
        .map(|coeffs| Element { coeffs })
        .collect();
    let names = row_names(&w, &rows);
    Subalgebra::new(&format!("Stilde{n}"), &w, rows, names, FamilyTag::STilde(n))
}
