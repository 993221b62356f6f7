use std::fmt;

use crate::scalar::Scalar;
use crate::upoly::UPoly;

/// Dense matrix over `ℚ(i)(params)[∂]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    pub rows: Vec<Vec<UPoly>>,
    pub ncols: usize,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix {
            rows: vec![vec![UPoly::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = UPoly::one();
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<Vec<UPoly>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        PolyMatrix { rows, ncols }
    }

    /// Integer coefficient lists, lowest degree first, one per entry.
    pub fn from_int_rows(rows: &[Vec<Vec<i64>>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            ncols,
            rows.iter()
                .map(|r| r.iter().map(|c| UPoly::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &UPoly {
        &self.rows[i][j]
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.rows[i].iter().all(UPoly::is_zero)
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, o.nrows(), "shape mismatch");
        let mut r = Self::zeros(self.nrows(), o.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.ncols {
                    r.rows[i][j] = r.rows[i][j].add(&a.mul(&o.rows[k][j]));
                }
            }
        }
        r
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows());
        for i in 0..self.nrows() {
            for j in 0..self.ncols {
                t.rows[j][i] = self.rows[i][j].clone();
            }
        }
        t
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[UPoly]) -> Vec<UPoly> {
        let mut out = vec![UPoly::zero(); self.ncols];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ncols {
                out[j] = out[j].add(&c.mul(&self.rows[k][j]));
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> UPoly {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "square matrix required");
        let mut a = self.rows.clone();
        let mut sign = Scalar::one();
        let mut prev = UPoly::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return UPoly::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = sign.neg();
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("nonzero")
                        .expect("Bareiss division is exact");
                }
                a[i][k] = UPoly::zero();
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return UPoly::one();
        }
        a[n - 1][n - 1].scale(&sign)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
