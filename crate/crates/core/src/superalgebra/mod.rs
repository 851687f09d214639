//! Symmetric superpolynomials: bases, products, scalar products, the `d`
//! operator, and explicit expansion in finitely many variables.

pub mod explicit;
mod symfunc;
pub mod tables;

pub use explicit::{expand_monomial, ExplicitSuperPoly, Term};
pub use symfunc::{p_norm_alpha, p_norm_qt, p_product, Basis, Generator, PowerSumIndex, SymSuperFunc};
pub use tables::Operator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} explicit variables are not enough to collect this polynomial")]
    InsufficientVariables(usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
}
