//! Computational toolkit for finite Lie conformal superalgebras.

pub mod cli;
pub mod conformal;
pub mod cpoly;
pub mod derivations;
pub mod dsl;
pub mod error;
pub mod families;
pub mod grassmann;
pub mod linalg;
pub mod scalar;
pub mod structure;
pub mod upoly;
pub mod virasoro;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use upoly::UPoly;
