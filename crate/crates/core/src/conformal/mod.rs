//! Finite Lie conformal superalgebras given by a basis and a λ-bracket table.
//!
//! The table stores `S(i, j) = [b_i λ b_j]` as polynomials in commuting
//! variables `∂` and `λ`; `∂` acts on the output labels. Brackets of
//! arbitrary elements follow from `[∂a_λ b] = -λ[a_λ b]` and
//! `[a_λ ∂b] = (∂+λ)[a_λ b]`.

mod algebra;
mod axioms;
mod combo;
mod element;

pub use algebra::{
    koszul, parity_name, skew_transform, Algebra, BasisLabel, FamilyTag, Rule, Table,
};
pub(crate) use axioms::Forms;
pub use axioms::{
    ad, apply_cmap, check_axioms, check_conformal_derivation, check_module_axioms,
    derivation_report, ConformalLinearMap, Module, Report, Violation, ViolationKind,
};
pub use combo::{Acc, Combo};
pub use element::{
    all_products, bracket, bracket_combo, display_combo, nth_product, BracketValue, Element,
};
