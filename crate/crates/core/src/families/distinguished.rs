use std::collections::BTreeMap;

use crate::conformal::{nth_product, Algebra, Element, FamilyTag};
use crate::error::{Error, Result};
use crate::grassmann::{GMono, GrassmannElement, VectorFieldElement};
use crate::linalg::FieldSystem;
use crate::scalar::Scalar;
use crate::upoly::UPoly;

use super::contact::{ck6_alpha, ck6_generators, k_function};
use super::subalgebra::Subalgebra;
use super::witt::w_vector_field;

fn xi_d(n: usize, i: usize, j: usize) -> VectorFieldElement {
    VectorFieldElement::monomial(n, GMono::xi(i), j, Scalar::one())
}

fn gl_elements(n: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            out.push(w_vector_field(&xi_d(n, i, j)));
        }
    }
    out
}

pub(crate) fn sl_elements(n: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(w_vector_field(&xi_d(n, i, j)));
            }
        }
    }
    for i in 1..n {
        let h = xi_d(n, i, i).sub(&xi_d(n, i + 1, i + 1)).expect("same N");
        out.push(w_vector_field(&h));
    }
    out
}

fn so_elements(n: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for m in GMono::all(n) {
        if m.degree() == 2 {
            out.push(k_function(&GrassmannElement::monomial(n, m, Scalar::one())));
        }
    }
    out
}

/// Flattens `∂`-coefficients so that `ℂ`-linear dependence can be tested.
fn flatten(e: &Element, width: usize) -> BTreeMap<usize, Scalar> {
    let mut out = BTreeMap::new();
    for (i, p) in e.coeffs.iter().enumerate() {
        for (k, c) in p.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.insert(i * width + k, c.clone());
            }
        }
    }
    out
}

/// Checks that the `ℂ`-span of `elems` is closed under the 0-th product.
pub(crate) fn check_zero_product_closure(alg: &Algebra, elems: &[Element]) -> Result<()> {
    let products: Vec<Element> = elems
        .iter()
        .flat_map(|x| elems.iter().map(move |y| (x, y)))
        .map(|(x, y)| nth_product(alg, x, y, 0))
        .collect::<Result<_>>()?;
    let width = elems
        .iter()
        .chain(&products)
        .flat_map(|e| e.coeffs.iter().map(|p| p.coeffs.len()))
        .max()
        .unwrap_or(0)
        .max(1);
    let mut sys = FieldSystem::new(alg.rank() * width);
    for e in elems {
        sys.add(flatten(e, width));
    }
    for p in &products {
        if sys.clone().add(flatten(p, width)) {
            return Err(Error::ClosureFailure(format!(
                "0-th product {} leaves the distinguished subalgebra",
                p.display(&alg.labels)
            )));
        }
    }
    Ok(())
}

/// The distinguished reductive subalgebra `𝔯`, written over `alg`'s basis.
///
/// Subalgebra families (`S`, `S̃`, `K'_4`, `CK_6`) need their embedding to
/// translate ambient elements; `Cur` needs the caller to supply `𝔯`.
pub fn distinguished_subalgebra(
    alg: &Algebra,
    embedding: Option<&Subalgebra>,
    supplied: &[Element],
) -> Result<Vec<Element>> {
    let ambient = match alg.tag {
        FamilyTag::W(n) => gl_elements(n),
        FamilyTag::S(n) | FamilyTag::STilde(n) => sl_elements(n),
        FamilyTag::K(n) => so_elements(n),
        FamilyTag::K4Prime => {
            let mut v = so_elements(4);
            v.push(k_function(&GrassmannElement::top(4)).mul_poly(&UPoly::d()));
            v
        }
        FamilyTag::CK6 => {
            let (gens, names) = ck6_generators(&ck6_alpha())?;
            gens.into_iter()
                .zip(names)
                .filter(|(_, n)| n.matches('x').count() == 2)
                .map(|(g, _)| g)
                .collect()
        }
        FamilyTag::Cur if !supplied.is_empty() => {
            if supplied.iter().any(|e| e.rank() != alg.rank()) {
                return Err(Error::WrongAmbient(
                    "supplied elements are not over the current algebra".into(),
                ));
            }
            check_zero_product_closure(alg, supplied)?;
            return Ok(supplied.to_vec());
        }
        ref t => return Err(Error::UnsupportedTag(t.to_string())),
    };
    let elems = match (alg.tag.clone(), embedding) {
        (FamilyTag::W(_) | FamilyTag::K(_), _) => ambient,
        (_, Some(sub)) => ambient
            .iter()
            .map(|e| {
                sub.restrict(e).ok_or_else(|| {
                    Error::ClosureFailure(format!(
                        "{} is not in {}",
                        e.display(&sub.ambient.labels),
                        alg.name
                    ))
                })
            })
            .collect::<Result<_>>()?,
        (t, None) => {
            return Err(Error::WrongAmbient(format!(
                "{t} needs its embedding to locate 𝔯"
            )))
        }
    };
    check_zero_product_closure(alg, &elems)?;
    Ok(elems)
}
