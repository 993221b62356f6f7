//! Build the standard families and run the axiom checker on each.

use lcsa::conformal::{bracket, check_axioms, Element};
use lcsa::families::{make_current, make_k, make_k4_prime, make_s, make_w, LieSuperalgebra};
use lcsa::Scalar;

fn main() -> lcsa::Result<()> {
    let mut algs = vec![
        make_current(&LieSuperalgebra::sl2())?,
        make_w(1),
        make_w(2),
        make_k(3),
    ];
    algs.push(make_s(2, &Scalar::param("a"))?.algebra);
    algs.push(make_k4_prime()?.algebra);
    for alg in &algs {
        println!(
            "{:12} rank {:3}  {}",
            alg.name,
            alg.rank(),
            check_axioms(alg)
        );
    }

    let k3 = make_k(3);
    let one = Element::basis(k3.rank(), 0);
    println!(
        "in K3: [1_λ 1] = {}",
        bracket(&k3, &one, &one, "λ")?.display(&k3.labels)
    );
    Ok(())
}
