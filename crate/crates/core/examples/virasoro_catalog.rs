//! Verify the catalog of physical Virasoro elements up to N = 4.

use lcsa::families::{make_w, w_vector_field};
use lcsa::grassmann::VectorFieldElement;
use lcsa::virasoro::{check_l0_is_partial, is_virasoro, run_physical_catalog};

fn main() -> lcsa::Result<()> {
    println!("{}", run_physical_catalog(4)?);

    let w1 = make_w(1);
    let e = w_vector_field(&VectorFieldElement::euler(1));
    let check = is_virasoro(&w1, &e)?;
    println!("Euler field of W1 is Virasoro: {}", check.holds);
    if !check.holds {
        println!("  residual {}", check.residual.display(&w1.labels));
    }
    println!(
        "  L_(0) = ∂ on the basis: {}",
        check_l0_is_partial(&w1, &e)?
    );
    Ok(())
}
