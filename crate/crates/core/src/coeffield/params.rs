//! The named parameters used throughout the crate.

use super::{RatFunc, Var};

/// The Jack parameter, printed as `a`.
pub fn alpha() -> RatFunc {
    RatFunc::var(Var::of("a"))
}

pub fn q() -> RatFunc {
    RatFunc::var(Var::of("q"))
}

pub fn t() -> RatFunc {
    RatFunc::var(Var::of("t"))
}

/// Square root of `q`.
pub fn u() -> RatFunc {
    RatFunc::var(Var::of("u"))
}

/// Square root of `t`.
pub fn v() -> RatFunc {
    RatFunc::var(Var::of("v"))
}

/// Auxiliary infinitesimal for limits taken by substitution.
pub fn eps() -> RatFunc {
    RatFunc::var(Var::of("eps"))
}
