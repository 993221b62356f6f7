//! Sparse Gaussian elimination over the scalar field.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Scalar;

pub type LinearForm = BTreeMap<usize, Scalar>;

/// Incrementally reduced homogeneous system `Σ c_k x_k = 0`.
#[derive(Clone, Debug, Default)]
pub struct FieldSystem {
    nvars: usize,
    rows: Vec<LinearForm>,
    pivot_row: HashMap<usize, usize>,
}

fn axpy(dst: &mut LinearForm, src: &LinearForm, c: &Scalar) {
    for (k, v) in src {
        let e = dst.entry(*k).or_default();
        e.add_assign(&v.mul(c).neg());
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

impl FieldSystem {
    pub fn new(nvars: usize) -> Self {
        FieldSystem {
            nvars,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut eq: LinearForm) -> LinearForm {
        let mut cursor = 0;
        loop {
            let next = eq
                .range(cursor..)
                .find(|(k, _)| self.pivot_row.contains_key(k))
                .map(|(k, _)| *k);
            let Some(k) = next else { return eq };
            let c = eq[&k].clone();
            axpy(&mut eq, &self.rows[self.pivot_row[&k]], &c);
            cursor = k + 1;
        }
    }

    /// Adds an equation; returns whether the rank grew.
    pub fn add(&mut self, eq: LinearForm) -> bool {
        let eq: LinearForm = eq.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut eq = self.reduce(eq);
        let Some((&p, c)) = eq.iter().next() else {
            return false;
        };
        let inv = c.inv().expect("nonzero");
        for v in eq.values_mut() {
            *v = v.mul(&inv);
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(eq);
        true
    }

    /// A basis of the solution space, each vector dense of length `nvars`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut pivots: Vec<usize> = self.pivot_row.keys().copied().collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        let mut reduced: HashMap<usize, LinearForm> = HashMap::new();
        for &p in &pivots {
            let mut row = self.rows[self.pivot_row[&p]].clone();
            let keys: Vec<usize> = row
                .keys()
                .copied()
                .filter(|&k| k > p && reduced.contains_key(&k))
                .collect();
            for k in keys {
                if let Some(c) = row.get(&k).cloned() {
                    axpy(&mut row, &reduced[&k], &c);
                }
            }
            reduced.insert(p, row);
        }
        let free: Vec<usize> = (0..self.nvars)
            .filter(|k| !self.pivot_row.contains_key(k))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.nvars];
                x[f] = Scalar::one();
                for (&p, row) in &reduced {
                    if let Some(c) = row.get(&f) {
                        x[p] = c.neg();
                    }
                }
                x
            })
            .collect()
    }

    /// Whether the assignment satisfies every stored equation.
    pub fn satisfied_by(&self, x: &[Scalar]) -> bool {
        self.rows.iter().all(|r| {
            r.iter()
                .fold(Scalar::zero(), |a, (k, c)| a.add(&c.mul(&x[*k])))
                .is_zero()
        })
    }
}
