//! Exact arithmetic in Q(v1,…,vk).

mod gcd;
mod matrix;
pub mod params;
pub mod parse;
mod poly;
mod ratfunc;
mod vars;

pub use gcd::{content_in, gcd, lcm};
pub use matrix::{bareiss, determinant, determinant_cofactor};
pub use parse::{parse, parse_list, parse_poly};
pub use poly::{Monomial, Poly};
pub use ratfunc::{leading_sign, RatFunc, RatFuncParts};
pub use vars::{Var, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution makes a denominator vanish")]
    ZeroDenominator,
    #[error("invalid variable name {0:?}")]
    BadVariable(String),
    #[error("too many distinct variables (registering {0:?})")]
    TooManyVariables(String),
    #[error("parse error: {0}")]
    Parse(String),
}
