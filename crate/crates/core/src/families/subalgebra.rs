use std::collections::HashMap;

use rayon::prelude::*;

use crate::conformal::{bracket_combo, Algebra, Combo, Element, FamilyTag};
use crate::cpoly::{CPoly, Mono, D, LAMBDA};
use crate::error::{Error, Result};
use crate::linalg::{PolyMatrix, Span, SpanSolver};
use crate::upoly::UPoly;

/// A free subalgebra with a chosen basis written over an ambient algebra.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    pub ambient: Algebra,
    pub basis: Vec<Element>,
    solver: SpanSolver,
}

pub(crate) fn element_matrix(rank: usize, rows: &[Element]) -> PolyMatrix {
    PolyMatrix::from_rows(rank, rows.iter().map(|e| e.coeffs.clone()).collect())
}

/// `λ^n`-coefficients of a combination in `(∂, λ)` as ambient elements.
pub(crate) fn lambda_coefficients(rank: usize, c: &Combo) -> Vec<(u32, Element)> {
    let top = c.degree_in(LAMBDA);
    (0..=top)
        .map(|n| {
            let mut e = Element::zero(rank);
            for (i, p) in &c.0 {
                e.coeffs[*i] = p
                    .coeff_of(LAMBDA, n)
                    .to_upoly()
                    .expect("two-variable value");
            }
            (n, e)
        })
        .filter(|(_, e)| !e.is_zero())
        .collect()
}

impl Subalgebra {
    /// Re-expresses the ambient bracket in the given basis. Fails if the
    /// basis is dependent, inhomogeneous, or not closed.
    pub fn new(
        name: &str,
        ambient: &Algebra,
        basis: Vec<Element>,
        names: Vec<String>,
        tag: FamilyTag,
    ) -> Result<Self> {
        let r = ambient.rank();
        if names.len() != basis.len() {
            return Err(Error::Dimension(
                "one name per basis element required".into(),
            ));
        }
        let solver = SpanSolver::new(&element_matrix(r, &basis));
        if solver.rank() != basis.len() {
            return Err(Error::Dimension(format!(
                "subalgebra generators have rank {} but {} were given",
                solver.rank(),
                basis.len()
            )));
        }
        let mut labels = Vec::new();
        for (e, n) in basis.iter().zip(&names) {
            let p = e.parity(&ambient.labels).ok_or(Error::NotHomogeneous)?;
            labels.push((n.clone(), p));
        }
        let k = basis.len();
        let cells: Vec<Result<((usize, usize), Combo)>> = (0..k * k)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / k, idx % k);
                let c = bracket_combo(ambient, &basis[i], &basis[j]);
                let mut acc: HashMap<usize, HashMap<Mono, crate::scalar::Scalar>> = HashMap::new();
                for (n, e) in lambda_coefficients(r, &c) {
                    let q = solver.solve(&e.coeffs).ok_or_else(|| {
                        Error::ClosureFailure(format!(
                            "[{}_λ {}] leaves the span",
                            names[i], names[j]
                        ))
                    })?;
                    for (t, qt) in q.iter().enumerate() {
                        let poly = CPoly::from_upoly(qt, &CPoly::var(D));
                        poly.accumulate_into(
                            &crate::scalar::Scalar::one(),
                            Mono::from_exps([0, n, 0, 0]),
                            acc.entry(t).or_default(),
                        );
                    }
                }
                let mut combo: Vec<(usize, CPoly)> = acc
                    .into_iter()
                    .map(|(t, m)| (t, CPoly::from_map(m)))
                    .filter(|(_, p)| !p.is_zero())
                    .collect();
                combo.sort_by_key(|(t, _)| *t);
                Ok(((i, j), Combo(combo)))
            })
            .collect();
        let mut table = HashMap::new();
        for c in cells {
            let (key, v) = c?;
            if !v.is_zero() {
                table.insert(key, v);
            }
        }
        let params: Vec<&str> = ambient.params.iter().map(String::as_str).collect();
        let algebra = Algebra::from_table(name, &labels, table)?
            .with_tag(tag)
            .with_params(&params);
        Ok(Subalgebra {
            algebra,
            ambient: ambient.clone(),
            basis,
            solver,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Image of a subalgebra element in the ambient algebra.
    pub fn embed(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.ambient.rank());
        for (q, b) in x.coeffs.iter().zip(&self.basis) {
            if !q.is_zero() {
                out = out.add(&b.mul_poly(q));
            }
        }
        out
    }

    /// Coordinates of an ambient element, if it lies in the subalgebra.
    pub fn restrict(&self, x: &Element) -> Option<Element> {
        self.solver
            .solve(&x.coeffs)
            .map(|coeffs| Element { coeffs })
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.solver.solve_hnf(&x.coeffs).is_some()
    }

    pub fn matrix(&self) -> PolyMatrix {
        element_matrix(self.ambient.rank(), &self.basis)
    }
}

/// Result of closing a set of generators under all n-th products.
#[derive(Clone, Debug)]
pub struct Closure {
    /// Canonical HNF basis of the closed submodule.
    pub basis: PolyMatrix,
    pub passes: usize,
}

impl Closure {
    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn elements(&self) -> Vec<Element> {
        self.basis
            .rows
            .iter()
            .map(|r| Element { coeffs: r.clone() })
            .collect()
    }

    /// The closed span as a subalgebra with readable basis names.
    pub fn subalgebra(&self, alg: &Algebra, name: &str, tag: FamilyTag) -> Result<Subalgebra> {
        let elems = self.elements();
        let names = row_names(alg, &elems);
        Subalgebra::new(name, alg, elems, names, tag)
    }
}

/// `label` for a basis label, `d{m}_label` for `∂^m label`, else `b{k}`.
pub fn row_names(alg: &Algebra, rows: &[Element]) -> Vec<String> {
    rows.iter()
        .enumerate()
        .map(|(k, e)| {
            let s = e.support();
            if s.len() == 1 {
                let p = &e.coeffs[s[0]];
                let m = p.degree().unwrap();
                if p.coeffs.iter().take(m).all(|c| c.is_zero()) && p.coeff(m).is_one() {
                    let name = &alg.labels[s[0]].name;
                    return if m == 0 {
                        name.clone()
                    } else {
                        format!("d{m}_{name}")
                    };
                }
            }
            format!("b{}", k + 1)
        })
        .collect()
}

/// Smallest subalgebra containing `gens`, by repeated n-th products until
/// the HNF stops changing.
pub fn subalgebra_closure(alg: &Algebra, gens: &[Element]) -> Closure {
    let r = alg.rank();
    let mut span = Span::new(r);
    for g in gens {
        span.insert(g.coeffs.clone());
    }
    let mut passes = 0;
    loop {
        passes += 1;
        let basis: Vec<Element> = span
            .canonical()
            .rows
            .into_iter()
            .map(|coeffs| Element { coeffs })
            .collect();
        let k = basis.len();
        let products: Vec<Vec<Vec<UPoly>>> = (0..k * k)
            .into_par_iter()
            .map(|idx| {
                let c = bracket_combo(alg, &basis[idx / k], &basis[idx % k]);
                lambda_coefficients(r, &c)
                    .into_iter()
                    .map(|(_, e)| e.coeffs)
                    .collect()
            })
            .collect();
        let mut grew = false;
        for v in products.into_iter().flatten() {
            if !span.contains(&v) {
                span.insert(v);
                grew = true;
            }
        }
        if !grew {
            return Closure {
                basis: span.canonical(),
                passes,
            };
        }
    }
}
