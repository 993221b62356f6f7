use lcsa::conformal::Element;
use lcsa::families::*;
use lcsa::grassmann::{GMono, GrassmannElement, VectorFieldElement};
use lcsa::virasoro::*;
use lcsa::{Error, Scalar, UPoly};

fn euler_l(n: usize, p: UPoly) -> Element {
    w_element(
        n,
        &[(p, VectorFieldElement::euler(n))],
        &[(UPoly::constant(Scalar::int(-1)), GrassmannElement::one(n))],
    )
}

#[test]
fn k3_minus_one() {
    let k3 = make_k(3);
    let l = k_function(&GrassmannElement::one(3)).neg();
    assert!(is_virasoro(&k3, &l).unwrap().holds);
}

#[test]
fn w_family_with_symbolic_parameters() {
    for n in 1..=2 {
        let w = make_w(n);
        let l = euler_l(
            n,
            UPoly::from_coeffs(vec![Scalar::param("p0"), Scalar::param("p1")]),
        );
        assert!(is_virasoro(&w, &l).unwrap().holds);
        if n == 2 {
            let nu2 = w_function(&GrassmannElement::monomial(
                n,
                GMono::from_indices(&[1, 2]),
                Scalar::one(),
            ));
            assert!(!is_virasoro(&w, &l.add(&nu2)).unwrap().holds);
        }
    }
}

#[test]
fn vir_scaled_fails_with_residual() {
    let vir = make_vir();
    let l2 = Element::basis(1, 0).scale(&Scalar::int(2));
    let c = is_virasoro(&vir, &l2).unwrap();
    assert!(!c.holds);
    assert_eq!(c.residual.display(&vir.labels), "(2*d + 4*l)*L");
}

#[test]
fn odd_candidate_rejected() {
    let k1 = make_k(1);
    let x = Element::basis(2, 1);
    assert_eq!(is_virasoro(&k1, &x).unwrap_err(), Error::NotEven);
}

#[test]
fn s2a_pair() {
    let s = make_s(2, &Scalar::param("a")).unwrap();
    let a = Scalar::param("a");
    let amb = euler_l(
        2,
        UPoly::from_coeffs(vec![a.neg().mul(&Scalar::ratio(1, 2)), Scalar::ratio(1, 2)]),
    );
    let l = s.restrict(&amb).expect("L lies in S_{2,a}");
    assert!(is_virasoro(&s.algebra, &l).unwrap().holds);
    let r = distinguished_subalgebra(&s.algebra, Some(&s), &[]).unwrap();
    assert!(is_physical_pair(&s.algebra, &l, &r).unwrap());
}

#[test]
fn s_tilde_pair_and_l0_control() {
    let st = make_tilde_s(2).unwrap();
    let nu = GrassmannElement::top(2);
    let head = w_function(&GrassmannElement::one(2).sub(&nu).unwrap()).neg();
    let amb = head.add(&w_element(
        2,
        &[(
            UPoly::from_coeffs(vec![Scalar::zero(), Scalar::ratio(1, 2)]),
            VectorFieldElement::euler(2),
        )],
        &[],
    ));
    let l = st.restrict(&amb).expect("L lies in S̃_2");
    assert!(is_virasoro(&st.algebra, &l).unwrap().holds);
    let r = distinguished_subalgebra(&st.algebra, Some(&st), &[]).unwrap();
    assert!(is_physical_pair(&st.algebra, &l, &r).unwrap());
    assert!(!check_l0_is_partial(&st.algebra, &l).unwrap());
}

#[test]
fn ck6_pair() {
    let ck = make_ck6(&ck6_alpha()).unwrap();
    let l = Element::basis(32, ck.algebra.label_index("c_one").unwrap());
    assert!(is_virasoro(&ck.algebra, &l).unwrap().holds);
    let r = distinguished_subalgebra(&ck.algebra, Some(&ck), &[]).unwrap();
    assert!(is_physical_pair(&ck.algebra, &l, &r).unwrap());
    assert!(check_l0_is_partial(&ck.algebra, &l).unwrap());
}

#[test]
fn l0_conditions() {
    let k1 = make_k(1);
    assert!(check_l0_is_partial(&k1, &k_function(&GrassmannElement::one(1)).neg()).unwrap());
    let w1 = make_w(1);
    let with_p0 = euler_l(
        1,
        UPoly::from_coeffs(vec![Scalar::param("p0"), Scalar::param("p1")]),
    );
    assert!(!check_l0_is_partial(&w1, &with_p0).unwrap());
    let without = euler_l(
        1,
        UPoly::from_coeffs(vec![Scalar::zero(), Scalar::param("p1")]),
    );
    assert!(check_l0_is_partial(&w1, &without).unwrap());
}

#[test]
fn current_algebra_has_no_virasoro() {
    assert!(current_has_no_virasoro(&LieSuperalgebra::sl2(), 3).unwrap());
    assert!(current_has_no_virasoro(&LieSuperalgebra::b2(), 2).unwrap());
}

#[test]
fn catalog_up_to_six() {
    let r = verify_physical_catalog(6).unwrap();
    assert!(r.rows.len() >= 30);
    assert!(verify_physical_catalog(7).is_err());
}
