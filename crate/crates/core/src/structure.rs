//! Submodule arithmetic on an algebra: derived series, ideals, centers,
//! quotients, transitivity, and rank-one characters with twisted modules.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::conformal::{
    bracket_combo, check_axioms, check_module_axioms, Algebra, Combo, Element, FamilyTag, Module,
};
use crate::cpoly::{CPoly, Mono, LAMBDA};
use crate::error::{Error, Result};
use crate::families::{lambda_coefficients, row_names, Subalgebra};
use crate::linalg::{hnf_rows, smith, FieldSystem, PolyMatrix, Span};
use crate::scalar::Scalar;
use crate::upoly::UPoly;

/// A `ℂ[∂]`-submodule of an algebra, stored as a canonical HNF.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub ambient: Algebra,
    pub hnf: PolyMatrix,
}

impl PartialEq for Submodule {
    fn eq(&self, o: &Self) -> bool {
        self.ambient.rank() == o.ambient.rank() && self.hnf == o.hnf
    }
}

impl Submodule {
    pub fn new(ambient: &Algebra, gens: &[Element]) -> Self {
        let m = PolyMatrix::from_rows(
            ambient.rank(),
            gens.iter().map(|e| e.coeffs.clone()).collect(),
        );
        Submodule {
            ambient: ambient.clone(),
            hnf: hnf_rows(&m),
        }
    }

    fn from_span(ambient: &Algebra, span: &Span) -> Self {
        Submodule {
            ambient: ambient.clone(),
            hnf: span.canonical(),
        }
    }

    pub fn zero(ambient: &Algebra) -> Self {
        Self::new(ambient, &[])
    }

    pub fn whole(ambient: &Algebra) -> Self {
        let r = ambient.rank();
        Self::new(
            ambient,
            &(0..r).map(|i| Element::basis(r, i)).collect::<Vec<_>>(),
        )
    }

    pub fn rank(&self) -> usize {
        self.hnf.nrows()
    }

    pub fn elements(&self) -> Vec<Element> {
        self.hnf
            .rows
            .iter()
            .map(|r| Element { coeffs: r.clone() })
            .collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        Span::from_matrix(&self.hnf).contains(&x.coeffs)
    }

    /// Whether `ambient / self` is free, i.e. the submodule is a direct summand.
    pub fn is_saturated(&self) -> bool {
        smith(&self.hnf)
            .diag
            .iter()
            .all(|d| d.is_zero() || d.is_unit())
    }

    /// The submodule as an algebra in its own right; fails unless closed.
    pub fn closure_subalgebra(&self, name: &str) -> Result<Subalgebra> {
        let rows = self.elements();
        let names = row_names(&self.ambient, &rows);
        Subalgebra::new(name, &self.ambient, rows, names, FamilyTag::Custom)
    }
}

fn row_parity(alg: &Algebra, row: &[UPoly]) -> u8 {
    row.iter()
        .position(|p| !p.is_zero())
        .map(|i| alg.parity(i))
        .unwrap_or(0)
}

/// `R' = ⟨[R_λ R]⟩`, spanned by all n-th products of basis pairs.
pub fn derived_subalgebra(alg: &Algebra) -> Submodule {
    let r = alg.rank();
    let rows: Vec<Vec<UPoly>> = (0..r * r)
        .into_par_iter()
        .flat_map_iter(|k| {
            lambda_coefficients(r, alg.entry(k / r, k % r))
                .into_iter()
                .map(|(_, e)| e.coeffs)
        })
        .collect();
    Submodule {
        ambient: alg.clone(),
        hnf: hnf_rows(&PolyMatrix::from_rows(r, rows)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvabilityVerdict {
    Solvable,
    NotSolvable,
    BoundReached,
}

impl std::fmt::Display for SolvabilityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolvabilityVerdict::Solvable => "solvable",
            SolvabilityVerdict::NotSolvable => "not_solvable",
            SolvabilityVerdict::BoundReached => "bound_reached",
        })
    }
}

#[derive(Clone, Debug)]
pub struct DerivedSeries {
    pub ranks: Vec<usize>,
    pub verdict: SolvabilityVerdict,
}

/// Ranks of `R ⊇ R' ⊇ R'' ⊇ …`; a finite solvable algebra has
/// `rank R' < rank R`, so a repeated nonzero rank proves non-solvability.
pub fn derived_series(alg: &Algebra, max_steps: usize) -> Result<DerivedSeries> {
    let mut ranks = vec![alg.rank()];
    let mut current = alg.clone();
    for step in 0..max_steps.max(1) {
        let d = derived_subalgebra(&current);
        let prev = *ranks.last().unwrap();
        ranks.push(d.rank());
        if d.rank() == 0 {
            return Ok(DerivedSeries {
                ranks,
                verdict: SolvabilityVerdict::Solvable,
            });
        }
        if d.rank() == prev {
            return Ok(DerivedSeries {
                ranks,
                verdict: SolvabilityVerdict::NotSolvable,
            });
        }
        if step + 1 < max_steps {
            current = d
                .closure_subalgebra(&format!("{}^({})", alg.name, step + 1))?
                .algebra;
        }
    }
    Ok(DerivedSeries {
        ranks,
        verdict: SolvabilityVerdict::BoundReached,
    })
}

/// Smallest ideal containing `gens`.
pub fn ideal_closure(alg: &Algebra, gens: &[Element]) -> Submodule {
    let r = alg.rank();
    let mut span = Span::new(r);
    for g in gens {
        span.insert(g.coeffs.clone());
    }
    loop {
        let rows: Vec<Element> = span
            .rows()
            .iter()
            .map(|c| Element { coeffs: c.clone() })
            .collect();
        let products: Vec<Vec<UPoly>> = (0..rows.len() * r)
            .into_par_iter()
            .flat_map_iter(|k| {
                let c = bracket_combo(alg, &rows[k / r], &Element::basis(r, k % r));
                lambda_coefficients(r, &c)
                    .into_iter()
                    .map(|(_, e)| e.coeffs)
            })
            .collect();
        let mut grew = false;
        for v in products {
            if !span.contains(&v) {
                span.insert(v);
                grew = true;
            }
        }
        if !grew {
            return Submodule::from_span(alg, &span);
        }
    }
}

/// Whether `sub` is closed under brackets with the whole algebra.
pub fn is_ideal(sub: &Submodule) -> bool {
    ideal_closure(&sub.ambient, &sub.elements()) == *sub
}

#[derive(Clone, Debug)]
pub struct Center {
    pub submodule: Submodule,
    /// Largest `∂`-degree of the unknown coefficients in the last solve.
    pub bound: usize,
    /// False if escalating the bound still changed the answer.
    pub stable: bool,
}

fn center_at(alg: &Algebra, d: usize) -> Submodule {
    let r = alg.rank();
    let nvars = r * (d + 1);
    let var = |i: usize, k: usize| i * (d + 1) + k;
    let mut eqs: BTreeMap<(usize, usize, Mono), BTreeMap<usize, Scalar>> = BTreeMap::new();
    let minus_lambda = CPoly::var(LAMBDA).neg();
    let powers: Vec<CPoly> = (0..=d as u32).map(|k| minus_lambda.pow(k)).collect();
    for i in 0..r {
        for j in 0..r {
            for (t, poly) in &alg.entry(i, j).0 {
                for (k, pw) in powers.iter().enumerate() {
                    for (m, c) in &poly.mul(pw).terms {
                        let e = eqs
                            .entry((j, *t, *m))
                            .or_default()
                            .entry(var(i, k))
                            .or_insert_with(Scalar::zero);
                        *e = e.add(c);
                    }
                }
            }
        }
    }
    let mut sys = FieldSystem::new(nvars);
    for (_, mut eq) in eqs {
        eq.retain(|_, c| !c.is_zero());
        if !eq.is_empty() {
            sys.add(eq);
        }
    }
    let gens: Vec<Element> = sys
        .nullspace()
        .into_iter()
        .map(|v| Element {
            coeffs: (0..r)
                .map(|i| UPoly::from_coeffs((0..=d).map(|k| v[var(i, k)].clone()).collect()))
                .collect(),
        })
        .collect();
    Submodule::new(alg, &gens)
}

/// `{x | [x_λ R] = 0}`, searched among elements with `∂`-degree at most
/// the bound; the default bound is `2·(table degree) + 4`.
pub fn center(alg: &Algebra, degree_bound: Option<usize>) -> Center {
    let b = degree_bound.unwrap_or(2 * alg.max_degree() as usize + 4);
    let first = center_at(alg, b);
    let second = center_at(alg, b + 1);
    let third = center_at(alg, b + 2);
    let stable = first == second && second == third;
    Center {
        submodule: third,
        bound: b + 2,
        stable,
    }
}

/// The free part of `A / I`, with the torsion classes of the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    /// Preimages in `A` of the quotient's basis.
    pub lifts: Vec<Element>,
    /// `(invariant factor, generator in A)` for each torsion summand.
    pub torsion: Vec<(UPoly, Element)>,
}

/// Coordinates that diagonalize `I` within one parity block.
struct Block {
    cols: Vec<usize>,
    q: PolyMatrix,
    q_inv: PolyMatrix,
    diag: Vec<UPoly>,
}

impl Block {
    fn new(alg: &Algebra, sub: &Submodule, parity: u8) -> Block {
        let cols: Vec<usize> = (0..alg.rank())
            .filter(|&i| alg.parity(i) == parity)
            .collect();
        let rows: Vec<Vec<UPoly>> = sub
            .hnf
            .rows
            .iter()
            .filter(|row| row_parity(alg, row) == parity)
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let s = smith(&PolyMatrix::from_rows(cols.len(), rows));
        let mut diag = s.diag.clone();
        diag.resize(cols.len(), UPoly::zero());
        Block {
            cols,
            q: s.q,
            q_inv: s.q_inv,
            diag,
        }
    }

    /// The ambient element for block coordinate `k`.
    fn generator(&self, r: usize, k: usize) -> Element {
        let mut e = Element::zero(r);
        for (c, &col) in self.cols.iter().enumerate() {
            e.coeffs[col] = self.q_inv.get(k, c).clone();
        }
        e
    }

    /// Block coordinates of an ambient element.
    fn coords(&self, x: &Element) -> Vec<UPoly> {
        let v: Vec<UPoly> = self.cols.iter().map(|&c| x.coeffs[c].clone()).collect();
        self.q.left_apply(&v)
    }
}

/// Quotient by an ideal; torsion of `A / I` is central and is dropped.
pub fn quotient_algebra(alg: &Algebra, ideal: &Submodule) -> Result<Quotient> {
    if !is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    let r = alg.rank();
    let blocks = [Block::new(alg, ideal, 0), Block::new(alg, ideal, 1)];
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        for (k, d) in block.diag.iter().enumerate() {
            if d.is_zero() {
                free.push((b, k));
            } else if !d.is_unit() {
                torsion.push((d.clone(), block.generator(r, k)));
            }
        }
    }
    let lifts: Vec<Element> = free
        .iter()
        .map(|&(b, k)| blocks[b].generator(r, k))
        .collect();
    let names = row_names(alg, &lifts);
    let labels: Vec<(String, u8)> = names
        .into_iter()
        .zip(&free)
        .map(|(n, &(b, _))| (n, b as u8))
        .collect();
    let position: HashMap<(usize, usize), usize> =
        free.iter().enumerate().map(|(t, key)| (*key, t)).collect();
    let project = |x: &Element| -> Element {
        let mut out = Element::zero(free.len());
        for (b, block) in blocks.iter().enumerate() {
            for (k, c) in block.coords(x).into_iter().enumerate() {
                if let Some(&t) = position.get(&(b, k)) {
                    out.coeffs[t] = c;
                }
            }
        }
        out
    };
    let n = lifts.len();
    let mut table = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let c = bracket_combo(alg, &lifts[i], &lifts[j]);
            let mut combo = Combo::zero();
            for (p, e) in lambda_coefficients(r, &c) {
                let lam = CPoly::term(Mono::from_exps([0, p, 0, 0]), Scalar::one());
                combo = combo.add(&project(&e).to_combo().scale(&lam));
            }
            if !combo.is_zero() {
                table.insert((i, j), combo);
            }
        }
    }
    let params: Vec<&str> = alg.params.iter().map(String::as_str).collect();
    let algebra =
        Algebra::from_table(&format!("{}/I", alg.name), &labels, table)?.with_params(&params);
    let report = check_axioms(&algebra);
    if !report.passed() {
        return Err(Error::ClosureFailure(format!(
            "quotient violates the axioms:\n{report}"
        )));
    }
    Ok(Quotient {
        algebra,
        lifts,
        torsion,
    })
}

/// Whether the projection of `sub` onto `ℂ[∂]{∂_1, …, ∂_n}` has rank `n`.
pub fn check_transitive(sub: &Submodule, n: usize) -> Result<bool> {
    match sub.ambient.tag {
        FamilyTag::SemidirectWCur(m) | FamilyTag::W(m) if m == n => {}
        ref t => {
            return Err(Error::WrongAmbient(format!(
                "{t} is not W{n} ⋉ Cur g ⊗ Λ({n})"
            )))
        }
    }
    // The fields ∂_1, …, ∂_n are the first n labels.
    let rows: Vec<Vec<UPoly>> = sub.hnf.rows.iter().map(|row| row[..n].to_vec()).collect();
    Ok(hnf_rows(&PolyMatrix::from_rows(n, rows)).nrows() == n)
}

/// A rank-one character `ℓ: R → ℂ[λ]`, given by its values on the basis
/// and extended by `ℓ(∂x) = -λ ℓ(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    /// `ℓ(b_i)` as polynomials in `λ`.
    pub values: Vec<UPoly>,
}

fn negate_variable(p: &UPoly) -> UPoly {
    UPoly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
            .collect(),
    )
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character {
            values: vec![UPoly::zero(); rank],
        }
    }

    /// `ℓ(x) = Σ q_i(-λ) ℓ(b_i)` for `x = Σ q_i(∂) b_i`.
    pub fn eval(&self, x: &Element) -> UPoly {
        x.coeffs
            .iter()
            .zip(&self.values)
            .fold(UPoly::zero(), |acc, (q, l)| {
                acc.add(&negate_variable(q).mul(l))
            })
    }
}

#[derive(Clone, Debug)]
pub struct CharacterSpaces {
    /// Free rank of `R / (R'_0̄ + R_1̄)`: characters in `𝓛`.
    pub l_rank: usize,
    /// Free rank of `R / (R' + R_1̄)`: characters in `𝓛₀`.
    pub l0_rank: usize,
    /// Elements of `R` whose classes freely generate the quotient for `𝓛`.
    pub l_generators: Vec<Element>,
    pub l0_generators: Vec<Element>,
}

fn odd_units(alg: &Algebra) -> Vec<Element> {
    let r = alg.rank();
    (0..r)
        .filter(|&i| alg.parity(i) == 1)
        .map(|i| Element::basis(r, i))
        .collect()
}

fn free_generators(alg: &Algebra, gens: Vec<Element>) -> Vec<Element> {
    let r = alg.rank();
    let sub = Submodule::new(alg, &gens);
    let s = smith(&sub.hnf);
    let used = s.rank();
    (used..r)
        .map(|k| Element {
            coeffs: (0..r).map(|c| s.q_inv.get(k, c).clone()).collect(),
        })
        .collect()
}

/// Ranks of the character spaces `𝓛 ⊇ 𝓛₀`. Torsion classes are forced to
/// zero because `ℂ[λ]` is a domain.
pub fn rank_one_characters(alg: &Algebra) -> CharacterSpaces {
    let derived = derived_subalgebra(alg);
    let odd = odd_units(alg);
    let mut t_l: Vec<Element> = derived
        .elements()
        .into_iter()
        .filter(|e| row_parity(alg, &e.coeffs) == 0)
        .collect();
    t_l.extend(odd.iter().cloned());
    let mut t_l0 = derived.elements();
    t_l0.extend(odd);
    let l_generators = free_generators(alg, t_l);
    let l0_generators = free_generators(alg, t_l0);
    CharacterSpaces {
        l_rank: l_generators.len(),
        l0_rank: l0_generators.len(),
        l_generators,
        l0_generators,
    }
}

/// Rejects `ℓ` unless it vanishes on `R'` and on the odd part.
pub fn check_l0(alg: &Algebra, ell: &Character) -> Result<()> {
    if ell.values.len() != alg.rank() {
        return Err(Error::Dimension(format!(
            "character has {} values for rank {}",
            ell.values.len(),
            alg.rank()
        )));
    }
    for i in 0..alg.rank() {
        if alg.parity(i) == 1 && !ell.values[i].is_zero() {
            return Err(Error::CharacterNotAdmissible(format!(
                "odd label {}",
                alg.labels[i].name
            )));
        }
    }
    for e in derived_subalgebra(alg).elements() {
        if !ell.eval(&e).is_zero() {
            return Err(Error::CharacterNotAdmissible(format!(
                "R' element {}",
                e.display(&alg.labels)
            )));
        }
    }
    Ok(())
}

/// `x_λ v = x^M_λ v + ℓ(x) v` on the chosen generators `v`.
pub fn twist_module(
    alg: &Algebra,
    module: &Module,
    generators: &[usize],
    ell: &Character,
) -> Result<Module> {
    check_l0(alg, ell)?;
    if let Some(&g) = generators.iter().find(|&&g| g >= module.rank()) {
        return Err(Error::IndexOutOfRange {
            index: g,
            n: module.rank(),
        });
    }
    let labels: Vec<(String, u8)> = module
        .labels
        .iter()
        .map(|l| (l.name.clone(), l.parity))
        .collect();
    let mut table = HashMap::new();
    for i in 0..alg.rank() {
        let shift = CPoly::from_upoly(&ell.values[i], &CPoly::var(LAMBDA));
        for m in 0..module.rank() {
            let mut c = module.action(i, m).clone();
            if generators.contains(&m) && !shift.is_zero() {
                c = c.add(&Combo::single(m, shift.clone()));
            }
            if !c.is_zero() {
                table.insert((i, m), c);
            }
        }
    }
    let twisted = Module::from_table(
        &format!("{} twisted", module.name),
        alg.rank(),
        &labels,
        table,
    )?;
    if check_module_axioms(alg, module)?.passed() && !check_module_axioms(alg, &twisted)?.passed() {
        return Err(Error::TwistBroken);
    }
    Ok(twisted)
}
