//! Contact-type families: `K_N`, the derived algebra `K'_4`, and `CK_6`.

use std::sync::Arc;

use crate::conformal::{Algebra, Combo, Element, FamilyTag};
use crate::cpoly::{CPoly, D, LAMBDA};
use crate::error::{Error, Result};
use crate::grassmann::{gmul, gpartial, hodge_star, GMono, GrassmannElement};
use crate::scalar::Scalar;
use crate::upoly::UPoly;

use super::subalgebra::Subalgebra;
use super::witt::w_function;
use super::EmbeddedElement;

/// The default `α` for `CK_6`.
pub fn ck6_alpha() -> Scalar {
    Scalar::i()
}

struct KBasis {
    n: usize,
    monos: Vec<GMono>,
    pos: std::collections::HashMap<GMono, usize>,
}

impl KBasis {
    fn new(n: usize) -> Self {
        let monos = GMono::all(n);
        let pos = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        KBasis { n, monos, pos }
    }

    fn combo(&self, f: &GrassmannElement, p: &CPoly) -> Vec<(usize, CPoly)> {
        f.terms
            .iter()
            .map(|(m, c)| (self.pos[m], p.scale(c)))
            .collect()
    }

    /// `[A_λ B] = (r/2-1)∂(AB) + (-1)^r ½ Σ ∂_iA ∂_iB + λ((r+s)/2-2) AB`.
    fn bracket(&self, k: usize, l: usize) -> Combo {
        let (a, b) = (self.monos[k], self.monos[l]);
        let (r, s) = (a.degree() as i64, b.degree() as i64);
        let fa = GrassmannElement::monomial(self.n, a, Scalar::one());
        let fb = GrassmannElement::monomial(self.n, b, Scalar::one());
        let ab = gmul(&fa, &fb).expect("same N");
        let coef = CPoly::var(D)
            .scale(&Scalar::ratio(r - 2, 2))
            .add(&CPoly::var(LAMBDA).scale(&Scalar::ratio(r + s - 4, 2)));
        let mut out = Combo(self.combo(&ab, &coef));
        let mut sum = GrassmannElement::zero(self.n);
        for i in 1..=self.n {
            let t = gmul(&gpartial(i, &fa).unwrap(), &gpartial(i, &fb).unwrap()).unwrap();
            sum = sum.add(&t).unwrap();
        }
        let half = Scalar::ratio(if r % 2 == 0 { 1 } else { -1 }, 2);
        let mut extra = self.combo(&sum, &CPoly::constant(half));
        extra.sort_by_key(|(k, _)| *k);
        out = out.add(&Combo(extra));
        out
    }
}

/// `K_N`, of rank `2^N`, with basis the Grassmann monomials.
pub fn make_k(n: usize) -> Algebra {
    let b = Arc::new(KBasis::new(n));
    let labels: Vec<(String, u8)> = b.monos.iter().map(|m| (m.name(), m.parity())).collect();
    let rule = Arc::new(move |k: usize, l: usize| b.bracket(k, l));
    Algebra::from_rule(&format!("K{n}"), &labels, rule)
        .expect("distinct labels")
        .with_tag(FamilyTag::K(n))
}

/// A Grassmann element as an element of `K_N`.
pub fn k_function(f: &GrassmannElement) -> Element {
    let b = KBasis::new(f.n);
    let mut e = Element::zero(b.monos.len());
    for (m, c) in &f.terms {
        e.coeffs[b.pos[m]] = UPoly::constant(c.clone());
    }
    e
}

/// `ν = ξ_1 ⋯ ξ_N` in `W_N` or `K_N`.
pub fn make_top_monomial(ambient: &Algebra) -> Result<EmbeddedElement> {
    let element = match ambient.tag {
        FamilyTag::W(n) if n > 0 => w_function(&GrassmannElement::top(n)),
        FamilyTag::W(_) => return Err(Error::InvalidFamily("W_0 has no odd variables".into())),
        FamilyTag::K(n) => k_function(&GrassmannElement::top(n)),
        _ => {
            return Err(Error::WrongAmbient(format!(
                "{} is neither W_N nor K_N",
                ambient.tag
            )))
        }
    };
    Ok(EmbeddedElement {
        ambient: ambient.clone(),
        element,
    })
}

/// The derived subalgebra `K'_4 ⊂ K_4`, of rank 16.
pub fn make_k4_prime() -> Result<Subalgebra> {
    let k4 = make_k(4);
    let derived = crate::structure::derived_subalgebra(&k4);
    let mut sub = derived.closure_subalgebra("K4prime")?;
    sub.algebra = sub.algebra.clone().with_tag(FamilyTag::K4Prime);
    Ok(sub)
}

/// The rank-32 subalgebra `CK_6 ⊂ K_6` spanned over `ℂ[∂]` by
/// `-1 + α∂³ν`, `ξ_i - α∂²ξ_i*`, `ξ_iξ_j - α∂(ξ_iξ_j)*` and
/// `ξ_1ξ_jξ_k - α(ξ_1ξ_jξ_k)*`.
pub fn make_ck6(alpha: &Scalar) -> Result<Subalgebra> {
    if !alpha.mul(alpha).add(&Scalar::one()).is_zero() {
        return Err(Error::InvalidFamily(format!(
            "CK_6 needs α² = -1, got α = {alpha}"
        )));
    }
    let k6 = make_k(6);
    let (gens, names) = ck6_generators(alpha)?;
    let mut sub = Subalgebra::new("CK6", &k6, gens, names, FamilyTag::CK6)?;
    sub.algebra = sub.algebra.clone().with_tag(FamilyTag::CK6);
    Ok(sub)
}

/// The 32 generators of `CK_6` and their names.
pub fn ck6_generators(alpha: &Scalar) -> Result<(Vec<Element>, Vec<String>)> {
    let mut gens = Vec::new();
    let mut names = Vec::new();
    for m in GMono::all(6) {
        let d = m.degree();
        if d > 3 || (d == 3 && !m.contains(1)) {
            continue;
        }
        let f = GrassmannElement::monomial(6, m, Scalar::one());
        let star = hodge_star(&f, 6)?;
        let power = 3 - d;
        let head = if d == 0 {
            k_function(&f).neg()
        } else {
            k_function(&f)
        };
        let tail = k_function(&star).mul_poly(&UPoly::monomial(alpha.neg(), power));
        let tail = if d == 0 { tail.neg() } else { tail };
        gens.push(head.add(&tail));
        names.push(format!("c_{}", m.name()));
    }
    Ok((gens, names))
}
