use lcsa::conformal::{check_axioms, check_module_axioms, Algebra, Element, Module};
use lcsa::families::*;
use lcsa::grassmann::{GMono, VectorFieldElement};
use lcsa::structure::*;
use lcsa::{Scalar, UPoly};

fn b2() -> Algebra {
    make_current(&LieSuperalgebra::b2()).unwrap()
}

fn abelian(r: usize) -> Algebra {
    make_current(&LieSuperalgebra::abelian(r)).unwrap()
}

#[test]
fn derived_series_examples() {
    let s = derived_series(&b2(), 5).unwrap();
    assert_eq!(s.ranks, vec![2, 1, 0]);
    assert_eq!(s.verdict, SolvabilityVerdict::Solvable);
    let s = derived_series(&make_vir(), 5).unwrap();
    assert_eq!(s.ranks, vec![1, 1]);
    assert_eq!(s.verdict, SolvabilityVerdict::NotSolvable);
    let s = derived_series(&abelian(3), 5).unwrap();
    assert_eq!(s.ranks, vec![3, 0]);
    assert_eq!(derived_subalgebra(&abelian(2)).rank(), 0);
}

#[test]
fn ideals() {
    let a = b2();
    let y = Element::named(&a, &[("y", UPoly::one())]).unwrap();
    let i = ideal_closure(&a, std::slice::from_ref(&y));
    assert_eq!(i.rank(), 1);
    assert!(i.contains(&y));
    assert_eq!(ideal_closure(&a, &i.elements()), i);
    let k4 = make_k(4);
    let nu = make_top_monomial(&k4).unwrap().element;
    assert_eq!(ideal_closure(&k4, &[nu]).rank(), 16);
    let full = Submodule::whole(&a);
    assert_eq!(ideal_closure(&a, &full.elements()), full);
}

#[test]
fn centers() {
    assert_eq!(center(&abelian(2), None).submodule.rank(), 2);
    let c = center(&make_vir(), None);
    assert_eq!(c.submodule.rank(), 0);
    assert!(c.stable);
    let a = make_current(&LieSuperalgebra::sl2_plus_center()).unwrap();
    let c = center(&a, None);
    assert_eq!(c.submodule.rank(), 1);
    let z = Element::named(&a, &[("z", UPoly::one())]).unwrap();
    assert!(c.submodule.contains(&z));
    assert!(is_ideal(&c.submodule));
}

#[test]
fn quotients() {
    let a = b2();
    let q = quotient_algebra(&a, &Submodule::zero(&a)).unwrap();
    assert_eq!(q.algebra.rank(), 2);
    let y = Element::named(&a, &[("y", UPoly::one())]).unwrap();
    let q = quotient_algebra(&a, &ideal_closure(&a, &[y])).unwrap();
    assert_eq!(q.algebra.rank(), 1);
    assert!(q.algebra.entries().iter().all(|(_, c)| c.is_zero()));
    let x = Element::named(&a, &[("x", UPoly::one())]).unwrap();
    assert!(quotient_algebra(&a, &Submodule::new(&a, &[x])).is_err());

    let k4 = make_k(4);
    let q = quotient_algebra(&k4, &derived_subalgebra(&k4)).unwrap();
    assert_eq!(q.algebra.rank(), 0);
    assert_eq!(q.torsion.len(), 1);
    assert_eq!(q.torsion[0].1, make_top_monomial(&k4).unwrap().element);
    assert!(check_axioms(&q.algebra).passed());
}

#[test]
fn k4_derived_is_perfect() {
    let k4 = make_k4_prime().unwrap();
    assert_eq!(derived_subalgebra(&k4.algebra).rank(), 16);
}

#[test]
fn transitivity() {
    let g = LieSuperalgebra::sl2();
    let sd = semidirect_w_current(&g, 1).unwrap();
    let r = sd.rank();
    let w_part: Vec<Element> = (0..4).map(|i| Element::basis(r, i)).collect();
    assert!(check_transitive(&Submodule::new(&sd, &w_part), 1).unwrap());
    let xd = lcsa::families::w_vector_field(&VectorFieldElement::monomial(
        1,
        GMono::xi(1),
        1,
        Scalar::one(),
    ));
    let mut e = Element::zero(r);
    e.coeffs[..4].clone_from_slice(&xd.coeffs);
    assert!(!check_transitive(&Submodule::new(&sd, &[e.clone()]), 1).unwrap());
    e.coeffs[0] = UPoly::one();
    assert!(check_transitive(&Submodule::new(&sd, &[e]), 1).unwrap());
    assert!(check_transitive(&Submodule::zero(&make_vir()), 1).is_err());
}

#[test]
fn characters() {
    let c = rank_one_characters(&abelian(1));
    assert_eq!(c.l_rank, 1);
    let c = rank_one_characters(&b2());
    assert_eq!((c.l_rank, c.l0_rank), (1, 1));
    let c = rank_one_characters(&make_vir());
    assert_eq!(c.l_rank, 0);
}

#[test]
fn twisting() {
    let a = b2();
    let m = Module::trivial(2, 1);
    let zero = Character::zero(2);
    let same = twist_module(&a, &m, &[0], &zero).unwrap();
    assert_eq!(same.action(0, 0), m.action(0, 0));
    let ell = Character {
        values: vec![UPoly::one(), UPoly::zero()],
    };
    let t = twist_module(&a, &m, &[0], &ell).unwrap();
    assert!(check_module_axioms(&a, &t).unwrap().passed());
    assert!(!t.action(0, 0).is_zero());
    let bad = Character {
        values: vec![UPoly::zero(), UPoly::one()],
    };
    assert!(twist_module(&a, &m, &[0], &bad).is_err());
}
