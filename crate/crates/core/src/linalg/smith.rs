use crate::scalar::Scalar;
use crate::upoly::UPoly;

use super::hnf::{axpy, scale_row};
use super::matrix::PolyMatrix;

/// `P · M · Q = diag(d_1, d_2, …)` with `d_k | d_{k+1}` and monic nonzero `d_k`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<UPoly>,
    pub p: PolyMatrix,
    pub q: PolyMatrix,
    pub q_inv: PolyMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

struct Work {
    a: Vec<Vec<UPoly>>,
    p: Vec<Vec<UPoly>>,
    // Q stored transposed so column operations become row operations.
    qt: Vec<Vec<UPoly>>,
    qinv: Vec<Vec<UPoly>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.p.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.a {
            r.swap(i, j);
        }
        self.qt.swap(i, j);
        self.qinv.swap(i, j);
    }

    /// `row_dst -= q row_src`
    fn row_op(&mut self, dst: usize, src: usize, q: &UPoly) {
        axpy(&mut self.a, dst, src, q);
        axpy(&mut self.p, dst, src, q);
    }

    /// `col_dst -= q col_src`
    fn col_op(&mut self, dst: usize, src: usize, q: &UPoly) {
        for r in &mut self.a {
            let v = r[dst].sub(&q.mul(&r[src]));
            r[dst] = v;
        }
        axpy(&mut self.qt, dst, src, q);
        // Inverse: row_src of Q^{-1} += q row_dst.
        axpy(&mut self.qinv, src, dst, &q.neg());
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        scale_row(&mut self.a[i], c);
        scale_row(&mut self.p[i], c);
    }
}

/// Smith normal form over `ℚ(i)(params)[∂]`.
pub fn smith(m: &PolyMatrix) -> SmithForm {
    let (nr, nc) = (m.nrows(), m.ncols);
    let mut w = Work {
        a: m.rows.clone(),
        p: PolyMatrix::identity(nr).rows,
        qt: PolyMatrix::identity(nc).rows,
        qinv: PolyMatrix::identity(nc).rows,
    };
    let mut t = 0;
    while t < nr.min(nc) {
        let best = (t..nr)
            .flat_map(|i| (t..nc).map(move |j| (i, j)))
            .filter(|&(i, j)| !w.a[i][j].is_zero())
            .min_by_key(|&(i, j)| (w.a[i][j].degree().unwrap(), i, j));
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        let mut clean = true;
        for i in t + 1..nr {
            if w.a[i][t].is_zero() {
                continue;
            }
            let (q, r) = w.a[i][t].div_rem(&w.a[t][t]).expect("nonzero pivot");
            w.row_op(i, t, &q);
            clean &= r.is_zero();
        }
        for j in t + 1..nc {
            if w.a[t][j].is_zero() {
                continue;
            }
            let (q, r) = w.a[t][j].div_rem(&w.a[t][t]).expect("nonzero pivot");
            w.col_op(j, t, &q);
            clean &= r.is_zero();
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any offending row into the pivot row and retry.
        let bad = (t + 1..nr).find(|&i| {
            (t + 1..nc).any(|j| {
                !w.a[i][j]
                    .div_rem(&w.a[t][t])
                    .expect("nonzero pivot")
                    .1
                    .is_zero()
            })
        });
        if let Some(i) = bad {
            w.row_op(t, i, &UPoly::constant(Scalar::int(-1)));
            continue;
        }
        let inv = w.a[t][t].lead().unwrap().inv().expect("nonzero");
        w.scale_row(t, &inv);
        t += 1;
    }
    let diag = (0..nr.min(nc)).map(|k| w.a[k][k].clone()).collect();
    SmithForm {
        diag,
        p: PolyMatrix::from_rows(nr, w.p),
        q: PolyMatrix::from_rows(nc, w.qt).transpose(),
        q_inv: PolyMatrix::from_rows(nc, w.qinv),
    }
}

/// Invariants of the quotient of the rank-`r` free module by the row span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    /// Nonunit nonzero invariant factors, monic.
    pub torsion: Vec<UPoly>,
}

pub fn smith_quotient(m: &PolyMatrix) -> QuotientInvariants {
    let s = smith(m);
    let nz: Vec<&UPoly> = s.diag.iter().filter(|d| !d.is_zero()).collect();
    QuotientInvariants {
        free_rank: m.ncols - nz.len(),
        torsion: nz.into_iter().filter(|d| !d.is_unit()).cloned().collect(),
    }
}
