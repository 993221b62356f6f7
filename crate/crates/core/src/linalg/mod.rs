//! Exact linear algebra over the principal ideal domain `ℚ(i)(params)[∂]`,
//! plus a sparse field solver for the coefficient systems of the
//! derivation and centroid searches.

mod field;
mod hnf;
mod matrix;
mod smith;

pub use field::{FieldSystem, LinearForm};
pub use hnf::{hnf, hnf_rows, kernel, pivots, rank, solve_membership, Span, SpanSolver};
pub use matrix::PolyMatrix;
pub use smith::{smith, smith_quotient, QuotientInvariants, SmithForm};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::UPoly;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn unit_row_dominates() {
        let m = PolyMatrix::from_rows(1, vec![vec![p(&[0, 1])], vec![p(&[1])]]);
        let (h, u) = hnf(&m);
        assert_eq!(
            h,
            PolyMatrix::from_rows(1, vec![vec![p(&[1])], vec![UPoly::zero()]])
        );
        assert_eq!(u.mul(&m), h);
        assert!(u.det().is_unit());
    }

    #[test]
    fn diagonal_d_is_already_hnf() {
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![p(&[0, 1]), UPoly::zero()],
                vec![UPoly::zero(), p(&[0, 1])],
            ],
        );
        assert_eq!(hnf(&m).0, m);
    }

    #[test]
    fn kernel_of_d_minus_one() {
        // (p, q) ↦ p∂ − q
        let m = PolyMatrix::from_rows(1, vec![vec![p(&[0, 1])], vec![p(&[-1])]]);
        let k = kernel(&m);
        assert_eq!(k, PolyMatrix::from_rows(2, vec![vec![p(&[1]), p(&[0, 1])]]));
    }

    #[test]
    fn membership_degree_obstruction() {
        let m = PolyMatrix::from_rows(2, vec![vec![p(&[0, 1]), UPoly::zero()]]);
        assert!(solve_membership(&m, &[p(&[1]), UPoly::zero()]).is_none());
        let c = solve_membership(&m, &[p(&[0, 0, 3]), UPoly::zero()]).unwrap();
        assert_eq!(c, vec![p(&[0, 3])]);
    }

    #[test]
    fn smith_of_d_in_rank_one() {
        let m = PolyMatrix::from_rows(1, vec![vec![p(&[0, 1])]]);
        let q = smith_quotient(&m);
        assert_eq!(
            q,
            QuotientInvariants {
                free_rank: 0,
                torsion: vec![p(&[0, 1])]
            }
        );
        assert_eq!(
            smith_quotient(&PolyMatrix::identity(3)),
            QuotientInvariants {
                free_rank: 0,
                torsion: vec![]
            }
        );
    }

    #[test]
    fn smith_transforms_are_consistent() {
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![p(&[1, 1]), p(&[1])],
                vec![p(&[-1, 0, 1]), p(&[-1, 1])],
                vec![p(&[0, 2]), p(&[0, 0, 1])],
            ],
        );
        let s = smith(&m);
        let d = s.p.mul(&m).mul(&s.q);
        for i in 0..d.nrows() {
            for j in 0..d.ncols {
                let expect = if i == j {
                    s.diag[i].clone()
                } else {
                    UPoly::zero()
                };
                assert_eq!(d.rows[i][j], expect);
            }
        }
        assert_eq!(s.q.mul(&s.q_inv), PolyMatrix::identity(2));
    }
}
