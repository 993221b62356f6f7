use std::collections::HashMap;

use lcsa::conformal::*;
use lcsa::cpoly::{CPoly, D, LAMBDA};
use lcsa::families::{make_current, make_k, make_vir, make_w, wn_module, LieSuperalgebra};
use lcsa::{Scalar, UPoly};

fn vir_with(coef_l: i64) -> Algebra {
    let mut t = HashMap::new();
    t.insert(
        (0, 0),
        Combo::single(0, CPoly::linear(&[(D, 1), (LAMBDA, coef_l)])),
    );
    Algebra::from_table("V", &[("L".into(), 0)], t).unwrap()
}

#[test]
fn vir_bracket_and_products() {
    let vir = make_vir();
    let l = Element::basis(1, 0);
    assert_eq!(
        bracket(&vir, &l, &l, "λ").unwrap().display(&vir.labels),
        "(d + 2*λ)*L"
    );
    assert_eq!(
        nth_product(&vir, &l, &l, 1).unwrap(),
        l.scale(&Scalar::int(2))
    );
    assert_eq!(
        nth_product(&vir, &l, &l, 0).unwrap(),
        l.mul_poly(&UPoly::d())
    );
    assert!(bracket(&vir, &Element::zero(1), &l, "λ").unwrap().is_zero());
}

#[test]
fn variable_capture_is_rejected() {
    let vir = make_vir();
    let l = Element::basis(1, 0);
    assert!(bracket(&vir, &l, &l, "L").is_err());
    assert!(bracket(&vir, &l, &l, "d").is_err());
}

#[test]
fn current_bracket_is_lie_bracket() {
    let cur = make_current(&LieSuperalgebra::sl2()).unwrap();
    let e = Element::named(&cur, &[("e", UPoly::one())]).unwrap();
    let f = Element::named(&cur, &[("f", UPoly::one())]).unwrap();
    let h = Element::named(&cur, &[("h", UPoly::one())]).unwrap();
    assert_eq!(bracket(&cur, &e, &f, "λ").unwrap().combo, h.to_combo());
    let adh = ad(&cur, &h).unwrap();
    assert_eq!(adh.cols[0], e.scale(&Scalar::int(2)).to_combo());
    assert!(check_axioms(&cur).passed());
}

#[test]
fn corrupted_vir_fails_skew() {
    let r = check_axioms(&vir_with(3));
    assert!(r.violations.iter().any(|v| v.kind == ViolationKind::Skew));
    assert!(check_axioms(&vir_with(2)).passed());
}

#[test]
fn abelian_passes() {
    let a = Algebra::from_table("A", &[("x".into(), 0), ("y".into(), 1)], HashMap::new()).unwrap();
    assert!(check_axioms(&a).passed());
}

#[test]
fn products_reassemble_bracket() {
    let k = make_k(2);
    for i in 0..4 {
        for j in 0..4 {
            let x = Element::basis(4, i).mul_poly(&UPoly::from_ints(&[1, 2]));
            let y = Element::basis(4, j).mul_poly(&UPoly::from_ints(&[0, 0, 1]));
            let full = bracket_combo(&k, &x, &y);
            let mut sum = Combo::zero();
            let mut fact = Scalar::one();
            for n in 0..6u32 {
                if n > 0 {
                    fact = fact.mul(&Scalar::int(n as i64));
                }
                let p = nth_product(&k, &x, &y, n).unwrap().to_combo();
                let lam = CPoly::var(LAMBDA).pow(n).scale(&fact.inv().unwrap());
                sum = sum.add(&p.scale(&lam));
            }
            assert_eq!(sum, full);
        }
    }
}

#[test]
fn skew_transform_is_an_involution() {
    let w = make_w(1);
    for ((i, j), c) in w.entries() {
        let (p, q) = (w.parity(i), w.parity(j));
        assert_eq!(skew_transform(&skew_transform(&c, p, q), q, p), c);
    }
}

#[test]
fn cmap_shift_rule() {
    let phi = ConformalLinearMap {
        parity: 0,
        cols: vec![Combo::single(0, CPoly::var(LAMBDA))],
    };
    let x = Element::basis(1, 0).mul_poly(&UPoly::d());
    let v = apply_cmap(&phi, &x, "λ").unwrap();
    let expect = CPoly::linear(&[(D, 1), (LAMBDA, 1)]).mul(&CPoly::var(LAMBDA));
    assert_eq!(v.combo, Combo::single(0, expect));
    let id = ConformalLinearMap::identity(1);
    let b = Element::basis(1, 0);
    assert_eq!(apply_cmap(&id, &b, "λ").unwrap().combo, b.to_combo());
}

#[test]
fn derivations_of_vir() {
    let vir = make_vir();
    let adl = ad(&vir, &Element::basis(1, 0)).unwrap();
    assert!(check_conformal_derivation(&vir, &adl).unwrap());
    assert!(!check_conformal_derivation(&vir, &ConformalLinearMap::identity(1)).unwrap());
}

#[test]
fn ad_cross_check_on_corrupted_table() {
    let bad = vir_with(3);
    let adl = ad(&bad, &Element::basis(1, 0)).unwrap();
    assert!(!check_axioms(&bad).passed());
    assert!(!check_conformal_derivation(&bad, &adl).unwrap());
    let w = make_w(1);
    for i in 0..w.rank() {
        let a = ad(&w, &Element::basis(w.rank(), i)).unwrap();
        assert!(check_conformal_derivation(&w, &a).unwrap());
    }
}

#[test]
fn module_checks() {
    let w1 = make_w(1);
    assert!(check_module_axioms(&w1, &Module::trivial(4, 2))
        .unwrap()
        .passed());
    let good = wn_module(1);
    assert!(check_module_axioms(&w1, &good).unwrap().passed());
    let labels: Vec<(String, u8)> = good
        .labels
        .iter()
        .map(|l| (l.name.clone(), l.parity))
        .collect();
    let mut t = HashMap::new();
    for i in 0..4 {
        for m in 0..2 {
            let mut c = good.action(i, m).clone();
            if w1.labels[i].name == "one" || w1.labels[i].name == "x1" {
                c = c.neg();
            }
            t.insert((i, m), c);
        }
    }
    let bad = Module::from_table("bad", 4, &labels, t).unwrap();
    assert!(!check_module_axioms(&w1, &bad).unwrap().passed());
}
