//! Lusternik–Schnirelmann category of closed 3-manifolds and their products,
//! with cohomological lower bounds backed by checkable certificates.

pub mod algebra;
pub mod category;
pub mod cli;
pub mod complex;
pub mod error;
pub mod manifold;
pub mod pi1;
pub mod ring;

pub use error::{Error, Result};
