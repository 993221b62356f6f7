//! Grassmann algebra and superderivations W(N).

use lcsa::grassmann::{
    gmul, gpartial, wapply, wbracket, GMono, GrassmannElement, VectorFieldElement,
};
use lcsa::Scalar;

fn main() -> lcsa::Result<()> {
    let x1 = GrassmannElement::monomial(3, GMono::xi(1), Scalar::one());
    let x2 = GrassmannElement::monomial(3, GMono::xi(2), Scalar::one());
    let p = gmul(&x1, &x2)?;
    println!("ξ1ξ2 = {p}, ξ2ξ1 = {}", gmul(&x2, &x1)?);
    println!(
        "∂1(ξ1ξ2) = {}, ∂2(ξ1ξ2) = {}",
        gpartial(1, &p)?,
        gpartial(2, &p)?
    );

    let e = VectorFieldElement::euler(3);
    let d1 = VectorFieldElement::monomial(3, GMono::ONE, 1, Scalar::one());
    println!("E(ξ1ξ2) = {}", wapply(&e, &p)?);
    println!("[∂1, E] = {}", wbracket(&d1, &e)?);
    Ok(())
}
