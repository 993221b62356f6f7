use lcsa::conformal::{bracket, check_axioms, check_module_axioms, nth_product, Element};
use lcsa::families::*;
use lcsa::grassmann::{GMono, GrassmannElement, VectorFieldElement};
use lcsa::linalg::smith_quotient;
use lcsa::structure::derived_subalgebra;
use lcsa::{Scalar, UPoly};

fn assert_axioms(alg: &lcsa::conformal::Algebra) {
    let r = check_axioms(alg);
    assert!(r.passed(), "{} failed:\n{}", alg.name, r);
}

#[test]
fn w_ranks_and_axioms() {
    for n in 0..=3 {
        let w = make_w(n);
        assert_eq!(w.rank(), (n + 1) << n);
        if n <= 2 {
            assert_axioms(&w);
        }
    }
}

#[test]
fn w0_is_virasoro_table() {
    let w = make_w(0);
    let l = Element::basis(1, 0);
    assert_eq!(
        bracket(&w, &l, &l, "λ").unwrap().to_string(),
        bracket(&make_vir(), &l, &l, "λ").unwrap().to_string()
    );
}

#[test]
fn k_ranks_and_axioms() {
    for n in 0..=3 {
        let k = make_k(n);
        assert_eq!(k.rank(), 1 << n);
        assert_axioms(&k);
    }
}

#[test]
fn k3_one_first_product() {
    let k = make_k(3);
    let one = Element::basis(8, 0);
    assert_eq!(
        nth_product(&k, &one, &one, 1).unwrap(),
        one.scale(&Scalar::int(-2))
    );
}

#[test]
fn wn_module_axioms() {
    for n in 0..=2 {
        let r = check_module_axioms(&make_w(n), &wn_module(n)).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn divergence_examples() {
    let a = Scalar::param("a");
    let x = w_vector_field(&VectorFieldElement::monomial(
        2,
        GMono::xi(1),
        1,
        Scalar::one(),
    ));
    let d = divergence(2, &x, &Scalar::zero()).unwrap();
    assert_eq!(d.coeffs[0], UPoly::constant(Scalar::int(-1)));
    let one = w_function(&GrassmannElement::one(2));
    let d = divergence(2, &one, &a).unwrap();
    assert_eq!(
        d.coeffs[0],
        UPoly::from_coeffs(vec![a.clone(), Scalar::int(-1)])
    );
}

#[test]
fn s_family() {
    let s = make_s(2, &Scalar::zero()).unwrap();
    assert_eq!(s.rank(), 8);
    assert_axioms(&s.algebra);
    let sa = make_s(2, &Scalar::param("a")).unwrap();
    assert_eq!(sa.rank(), 8);
    assert_axioms(&sa.algebra);
    let st = make_tilde_s(2).unwrap();
    assert_eq!(st.rank(), 8);
    assert_axioms(&st.algebra);
}

#[test]
fn tensor_and_semidirect() {
    let t = tensor_grassmann(&make_vir(), 1);
    assert_eq!(t.rank(), 2);
    assert_axioms(&t);
    let c = tensor_grassmann(&make_current(&LieSuperalgebra::sl2()).unwrap(), 2);
    assert_axioms(&c);
    for n in 0..=1 {
        let sd = semidirect_w_current(&LieSuperalgebra::sl2(), n).unwrap();
        assert_axioms(&sd);
    }
    assert_eq!(
        semidirect_w_current(&LieSuperalgebra::sl2(), 1)
            .unwrap()
            .rank(),
        10
    );
    let m = w_action_on_current(&LieSuperalgebra::sl2(), 1).unwrap();
    assert!(check_module_axioms(&make_w(1), &m).unwrap().passed());
}

#[test]
fn k4_prime() {
    let k4 = make_k(4);
    let d = derived_subalgebra(&k4);
    assert_eq!(d.rank(), 16);
    let q = smith_quotient(&d.hnf);
    assert_eq!(q.free_rank, 0);
    assert_eq!(q.torsion.len(), 1);
    let kp = make_k4_prime().unwrap();
    assert_axioms(&kp.algebra);
    let nu = make_top_monomial(&k4).unwrap().element;
    assert!(!kp.contains(&nu));
    assert!(kp.contains(&nu.mul_poly(&UPoly::d())));
    let r = distinguished_subalgebra(&kp.algebra, Some(&kp), &[]).unwrap();
    assert_eq!(r.len(), 7);
}

#[test]
fn ck6() {
    let ck = make_ck6(&ck6_alpha()).unwrap();
    assert_eq!(ck.rank(), 32);
    let r = distinguished_subalgebra(&ck.algebra, Some(&ck), &[]).unwrap();
    assert_eq!(r.len(), 15);
}

#[test]
fn distinguished_w_s() {
    let w2 = make_w(2);
    assert_eq!(distinguished_subalgebra(&w2, None, &[]).unwrap().len(), 4);
    let s = make_s(2, &Scalar::param("a")).unwrap();
    assert_eq!(
        distinguished_subalgebra(&s.algebra, Some(&s), &[])
            .unwrap()
            .len(),
        3
    );
}
