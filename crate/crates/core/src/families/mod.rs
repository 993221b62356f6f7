//! Constructors for the standard families of finite Lie conformal
//! superalgebras and the building blocks used to define them.

mod contact;
mod distinguished;
mod lie;
mod subalgebra;
mod tensor;
mod witt;

use std::collections::HashMap;

pub use contact::{
    ck6_alpha, ck6_generators, k_function, make_ck6, make_k, make_k4_prime, make_top_monomial,
};
pub use distinguished::distinguished_subalgebra;
pub(crate) use distinguished::sl_elements;
pub use lie::LieSuperalgebra;
pub(crate) use subalgebra::lambda_coefficients;
pub use subalgebra::{row_names, subalgebra_closure, Closure, Subalgebra};
pub use tensor::{semidirect_w_current, tensor_grassmann, w_action_on_current};
pub use witt::{
    divergence, grassmann_scale, make_euler, make_s, make_tilde_s, make_w, w_element, w_function,
    w_vector_field, wn_module, WBasis,
};

use crate::conformal::{Algebra, Combo, Element, FamilyTag};
use crate::cpoly::{CPoly, D, LAMBDA};
use crate::error::Result;

/// An element together with the algebra whose basis it is written in.
#[derive(Clone, Debug)]
pub struct EmbeddedElement {
    pub ambient: Algebra,
    pub element: Element,
}

/// The Virasoro conformal algebra `[L_λ L] = (∂+2λ)L`.
pub fn make_vir() -> Algebra {
    let mut t = HashMap::new();
    t.insert(
        (0, 0),
        Combo::single(0, CPoly::linear(&[(D, 1), (LAMBDA, 2)])),
    );
    Algebra::from_table("Vir", &[("L".into(), 0)], t)
        .expect("one label")
        .with_tag(FamilyTag::Vir)
}

/// The current conformal algebra `Cur g` with `[a_λ b] = [a, b]`.
pub fn make_current(g: &LieSuperalgebra) -> Result<Algebra> {
    g.validate()?;
    let mut t = HashMap::new();
    for (&(i, j), v) in &g.brackets {
        let c = Combo(
            v.iter()
                .map(|(k, s)| (*k, CPoly::constant(s.clone())))
                .collect(),
        );
        if !c.is_zero() {
            t.insert((i, j), c);
        }
    }
    Ok(Algebra::from_table(&format!("Cur {}", g.name), &g.labels, t)?.with_tag(FamilyTag::Cur))
}
