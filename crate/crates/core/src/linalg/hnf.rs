use crate::upoly::UPoly;

use super::matrix::PolyMatrix;

/// `rows[dst] -= q · rows[src]`
pub(crate) fn axpy(rows: &mut [Vec<UPoly>], dst: usize, src: usize, q: &UPoly) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (a, b) = rows.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(dst);
        (&mut b[0], &a[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x = x.sub(&q.mul(y));
        }
    }
}

pub(crate) fn scale_row(row: &mut [UPoly], c: &crate::scalar::Scalar) {
    for x in row.iter_mut() {
        *x = x.scale(c);
    }
}

fn vec_axpy(v: &mut [UPoly], p: &[UPoly], q: &UPoly) {
    if q.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(p) {
        if !y.is_zero() {
            *x = x.sub(&q.mul(y));
        }
    }
}

fn monic_row(row: &mut [UPoly], c: usize) -> crate::scalar::Scalar {
    let inv = row[c].lead().expect("pivot").inv().expect("nonzero");
    if !inv.is_one() {
        scale_row(row, &inv);
    }
    inv
}

/// Row Hermite normal form with transform: `U · M = H`.
///
/// Pivots are monic, strictly increasing in column, and the entries above
/// each pivot are reduced modulo it. Zero rows come last.
pub fn hnf(m: &PolyMatrix) -> (PolyMatrix, PolyMatrix) {
    let n = m.nrows();
    let mut a = m.rows.clone();
    let mut u = PolyMatrix::identity(n).rows;
    let mut prow = 0;
    for c in 0..m.ncols {
        if prow == n {
            break;
        }
        loop {
            let best = (prow..n)
                .filter(|&r| !a[r][c].is_zero())
                .min_by_key(|&r| (a[r][c].degree().unwrap(), r));
            let Some(best) = best else { break };
            a.swap(prow, best);
            u.swap(prow, best);
            let mut done = true;
            for r in prow + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let (q, rem) = a[r][c].div_rem(&a[prow][c]).expect("nonzero pivot");
                axpy(&mut a, r, prow, &q);
                axpy(&mut u, r, prow, &q);
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                let inv = monic_row(&mut a[prow], c);
                scale_row(&mut u[prow], &inv);
                for r in 0..prow {
                    if a[r][c].is_zero() {
                        continue;
                    }
                    let q = a[r][c].div_rem(&a[prow][c]).expect("nonzero pivot").0;
                    axpy(&mut a, r, prow, &q);
                    axpy(&mut u, r, prow, &q);
                }
                prow += 1;
                break;
            }
        }
    }
    (
        PolyMatrix::from_rows(m.ncols, a),
        PolyMatrix::from_rows(n, u),
    )
}

/// Canonical HNF rows of the span, zero rows dropped.
pub fn hnf_rows(m: &PolyMatrix) -> PolyMatrix {
    let mut s = Span::new(m.ncols);
    for r in &m.rows {
        s.insert(r.clone());
    }
    s.canonical()
}

/// Pivot column of each row (first nonzero entry).
pub fn pivots(h: &PolyMatrix) -> Vec<usize> {
    h.rows
        .iter()
        .filter_map(|r| r.iter().position(|x| !x.is_zero()))
        .collect()
}

pub fn rank(m: &PolyMatrix) -> usize {
    hnf_rows(m).nrows()
}

/// Rows `K` forming a basis of `{v : v M = 0}`.
pub fn kernel(m: &PolyMatrix) -> PolyMatrix {
    let (h, u) = hnf(m);
    let rows: Vec<Vec<UPoly>> = (0..h.nrows())
        .filter(|&i| h.is_zero_row(i))
        .map(|i| u.rows[i].clone())
        .collect();
    hnf_rows(&PolyMatrix::from_rows(m.nrows(), rows))
}

/// Coefficients `c` with `c · M = v`, if any.
pub fn solve_membership(m: &PolyMatrix, v: &[UPoly]) -> Option<Vec<UPoly>> {
    SpanSolver::new(m).solve(v)
}

/// Precomputed HNF of a generator matrix for repeated membership queries.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    h: PolyMatrix,
    u: PolyMatrix,
    piv: Vec<usize>,
}

impl SpanSolver {
    pub fn new(m: &PolyMatrix) -> Self {
        let (h, u) = hnf(m);
        let piv = pivots(&h);
        let k = piv.len();
        SpanSolver {
            h: PolyMatrix::from_rows(m.ncols, h.rows[..k].to_vec()),
            u: PolyMatrix::from_rows(m.nrows(), u.rows[..k].to_vec()),
            piv,
        }
    }

    pub fn rank(&self) -> usize {
        self.piv.len()
    }

    /// Coefficients over the original generators.
    pub fn solve(&self, v: &[UPoly]) -> Option<Vec<UPoly>> {
        let c = self.solve_hnf(v)?;
        Some(self.u.left_apply(&c))
    }

    /// Coefficients over the HNF rows.
    pub fn solve_hnf(&self, v: &[UPoly]) -> Option<Vec<UPoly>> {
        let mut r = v.to_vec();
        let mut c = vec![UPoly::zero(); self.piv.len()];
        for (k, &p) in self.piv.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let q = r[p].div_exact(&self.h.rows[k][p]).expect("nonzero pivot")?;
            vec_axpy(&mut r, &self.h.rows[k], &q);
            c[k] = q;
        }
        r.iter().all(UPoly::is_zero).then_some(c)
    }

    pub fn hnf(&self) -> &PolyMatrix {
        &self.h
    }
}

/// Incrementally maintained echelon basis of a submodule of a free module.
#[derive(Clone, Debug)]
pub struct Span {
    ncols: usize,
    rows: Vec<Vec<UPoly>>,
    piv: Vec<usize>,
}

impl Span {
    pub fn new(ncols: usize) -> Self {
        Span {
            ncols,
            rows: Vec::new(),
            piv: Vec::new(),
        }
    }

    pub fn from_matrix(m: &PolyMatrix) -> Self {
        let mut s = Span::new(m.ncols);
        for r in &m.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a generator; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<UPoly>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        let mut changed = false;
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                return changed;
            };
            match self.piv.binary_search(&c) {
                Err(pos) => {
                    monic_row(&mut v, c);
                    self.rows.insert(pos, v);
                    self.piv.insert(pos, c);
                    return true;
                }
                Ok(k) => loop {
                    let p = &mut self.rows[k];
                    let q = v[c].div_rem(&p[c]).expect("nonzero pivot").0;
                    vec_axpy(&mut v, p, &q);
                    if v[c].is_zero() {
                        break;
                    }
                    std::mem::swap(p, &mut v);
                    monic_row(p, c);
                    changed = true;
                },
            }
        }
    }

    /// Membership test without modifying the span.
    pub fn contains(&self, v: &[UPoly]) -> bool {
        let mut v = v.to_vec();
        while let Some(c) = v.iter().position(|x| !x.is_zero()) {
            let Ok(k) = self.piv.binary_search(&c) else {
                return false;
            };
            let (q, r) = v[c].div_rem(&self.rows[k][c]).expect("nonzero pivot");
            if !r.is_zero() {
                return false;
            }
            vec_axpy(&mut v, &self.rows[k], &q);
        }
        true
    }

    /// Echelon rows (not fully reduced).
    pub fn rows(&self) -> &[Vec<UPoly>] {
        &self.rows
    }

    /// Reduced HNF of the span.
    pub fn canonical(&self) -> PolyMatrix {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let c = self.piv[k];
            for r in 0..k {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_rem(&rows[k][c]).expect("nonzero pivot").0;
                axpy(&mut rows, r, k, &q);
            }
        }
        PolyMatrix::from_rows(self.ncols, rows)
    }
}
