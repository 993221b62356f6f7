use std::collections::HashMap;

use proptest::prelude::*;

use lcsa::conformal::{
    ad, check_axioms, check_conformal_derivation, skew_transform, Algebra, Combo, Element,
    ViolationKind,
};
use lcsa::cpoly::CPoly;
use lcsa::cpoly::Mono;
use lcsa::families::{make_current, make_k, make_w, tensor_grassmann, LieSuperalgebra};
use lcsa::grassmann::*;
use lcsa::linalg::*;
use lcsa::{Scalar, UPoly};

fn sign(p: u8, q: u8) -> Scalar {
    Scalar::int(if p & q == 1 { -1 } else { 1 })
}

fn mono(n: usize, m: GMono) -> GrassmannElement {
    GrassmannElement::monomial(n, m, Scalar::one())
}

#[test]
fn grassmann_supercommutes_and_partials_anticommute() {
    for n in 0..=4 {
        let all = GMono::all(n);
        for &a in &all {
            for &b in &all {
                let (f, g) = (mono(n, a), mono(n, b));
                let fg = gmul(&f, &g).unwrap();
                let gf = gmul(&g, &f).unwrap().scale(&sign(a.parity(), b.parity()));
                assert_eq!(fg, gf);
                for i in 1..=n {
                    let lhs = gpartial(i, &fg).unwrap();
                    let rhs = gmul(&gpartial(i, &f).unwrap(), &g)
                        .unwrap()
                        .add(
                            &gmul(&f, &gpartial(i, &g).unwrap())
                                .unwrap()
                                .scale(&sign(a.parity(), 1)),
                        )
                        .unwrap();
                    assert_eq!(lhs, rhs, "Leibniz");
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    let f = mono(n, a);
                    let ij = gpartial(i, &gpartial(j, &f).unwrap()).unwrap();
                    let ji = gpartial(j, &gpartial(i, &f).unwrap()).unwrap();
                    assert!(ij.add(&ji).unwrap().is_zero());
                }
            }
        }
    }
}

fn field_basis(n: usize) -> Vec<(u8, VectorFieldElement)> {
    let mut v = Vec::new();
    for m in GMono::all(n) {
        for i in 1..=n {
            v.push((
                m.parity() ^ 1,
                VectorFieldElement::monomial(n, m, i, Scalar::one()),
            ));
        }
    }
    v
}

#[test]
fn vector_fields_form_a_representation() {
    for n in 1..=3 {
        let basis = field_basis(n);
        let funcs: Vec<GrassmannElement> = GMono::all(n).into_iter().map(|m| mono(n, m)).collect();
        for (px, x) in &basis {
            for (py, y) in &basis {
                let xy = wbracket(x, y).unwrap();
                for f in &funcs {
                    let lhs = wapply(&xy, f).unwrap();
                    let rhs = wapply(x, &wapply(y, f).unwrap())
                        .unwrap()
                        .sub(
                            &wapply(y, &wapply(x, f).unwrap())
                                .unwrap()
                                .scale(&sign(*px, *py)),
                        )
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn vector_field_jacobi_exhaustive_small() {
    for n in 1..=2 {
        let basis = field_basis(n);
        for (px, x) in &basis {
            for (py, y) in &basis {
                for (_, z) in &basis {
                    let lhs = wbracket(x, &wbracket(y, z).unwrap()).unwrap();
                    let rhs = wbracket(&wbracket(x, y).unwrap(), z)
                        .unwrap()
                        .add(
                            &wbracket(y, &wbracket(x, z).unwrap())
                                .unwrap()
                                .scale(&sign(*px, *py)),
                        )
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-3i64..=3, 0..3).prop_map(|c| UPoly::from_ints(&c))
}

fn matrix(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(upoly(), c), r)
            .prop_map(move |rows| PolyMatrix::from_rows(c, rows))
    })
}

/// Products of elementary operations, hence unimodular.
fn unimodular(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec((0..n, 0..n, upoly()), 0..4).prop_map(move |ops| {
        let mut m = PolyMatrix::identity(n);
        for (i, j, q) in ops {
            if i != j {
                let src = m.rows[j].clone();
                for (a, b) in m.rows[i].iter_mut().zip(&src) {
                    *a = a.add(&q.mul(b));
                }
            }
        }
        m
    })
}

fn is_unit_det(m: &PolyMatrix) -> bool {
    m.det().is_unit()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grassmann_random_supercommutativity(
        n in 1usize..=4,
        a in prop::collection::vec(-2i64..=2, 16),
        b in prop::collection::vec(-2i64..=2, 16),
        pa in 0u8..2,
        pb in 0u8..2,
    ) {
        let build = |coef: &[i64], p: u8| {
            let mut f = GrassmannElement::zero(n);
            for (k, m) in GMono::all(n).into_iter().enumerate() {
                if m.parity() == p {
                    f = f.add(&GrassmannElement::monomial(n, m, Scalar::int(coef[k]))).unwrap();
                }
            }
            f
        };
        let (f, g) = (build(&a, pa), build(&b, pb));
        prop_assert_eq!(gmul(&f, &g).unwrap(), gmul(&g, &f).unwrap().scale(&sign(pa, pb)));
    }

    #[test]
    fn hnf_is_canonical(m in matrix(3)) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert!(is_unit_det(&u));
        let (h2, _) = hnf(&h);
        prop_assert_eq!(h2, h);
        prop_assert_eq!(hnf_rows(&m), hnf_rows(&hnf_rows(&m)));
    }

    #[test]
    fn kernel_has_complementary_rank(m in matrix(3)) {
        let k = kernel(&m);
        prop_assert_eq!(k.nrows() + rank(&m), m.nrows());
        if k.nrows() > 0 {
            prop_assert!(k.mul(&m).rows.iter().all(|r| r.iter().all(UPoly::is_zero)));
        }
    }

    #[test]
    fn smith_is_invariant((m, u, v) in matrix(3).prop_flat_map(|m| {
        let (r, c) = (m.nrows(), m.ncols);
        (Just(m), unimodular(r), unimodular(c))
    })) {
        let s = smith(&m);
        let d = s.p.mul(&m).mul(&s.q);
        for (i, row) in d.rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    prop_assert_eq!(x, &s.diag[i]);
                } else {
                    prop_assert!(x.is_zero());
                }
            }
        }
        prop_assert_eq!(s.q.mul(&s.q_inv), PolyMatrix::identity(m.ncols));
        for w in s.diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(w[1].div_rem(&w[0]).unwrap().1.is_zero());
            }
        }
        prop_assert_eq!(smith(&u.mul(&m).mul(&v)).diag, s.diag);
    }

    #[test]
    fn jacobi_matches_ad_derivations(c in prop::collection::vec(0i64..=1, 4)) {
        // Vir acting on a rank-one module, with an optional self-bracket on it.
        let lin = |a: i64, b: i64, k: i64| {
            CPoly::from_map(HashMap::from([
                (Mono::from_exps([1, 0, 0, 0]), Scalar::int(a)),
                (Mono::from_exps([0, 1, 0, 0]), Scalar::int(b)),
                (Mono::ONE, Scalar::int(k)),
            ]))
        };
        let lm = Combo(vec![(1, lin(c[0], c[1], c[2]))]);
        let mut t = HashMap::new();
        t.insert((0, 0), Combo(vec![(0, lin(1, 2, 0))]));
        t.insert((1, 0), skew_transform(&lm, 0, 0));
        t.insert((0, 1), lm);
        t.insert((1, 1), Combo(vec![(1, lin(c[3], 2 * c[3], 0))]));
        let alg = Algebra::from_table("R", &[("a".into(), 0), ("b".into(), 0)], t).unwrap();
        let jacobi_ok = !check_axioms(&alg).violations.iter().any(|v| v.kind == ViolationKind::Jacobi);
        let ads_ok = (0..2).all(|i| check_conformal_derivation(&alg, &ad(&alg, &Element::basis(2, i)).unwrap()).unwrap());
        prop_assert_eq!(jacobi_ok, ads_ok);
    }
}

#[test]
fn ad_is_a_derivation_on_families() {
    let algs = [
        make_w(1),
        make_k(2),
        make_k(3),
        tensor_grassmann(&make_current(&LieSuperalgebra::sl2()).unwrap(), 1),
    ];
    for alg in algs {
        assert!(check_axioms(&alg).passed());
        for i in 0..alg.rank() {
            let phi = ad(&alg, &Element::basis(alg.rank(), i)).unwrap();
            assert!(
                check_conformal_derivation(&alg, &phi).unwrap(),
                "{} {}",
                alg.name,
                alg.labels[i].name
            );
        }
    }
}
