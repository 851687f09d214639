//! Global registry of named indeterminates.
//!
//! Every polynomial in the crate shares one variable numbering. The registry is
//! append-only: a name, once registered, keeps its index for the life of the
//! process, and the index fixes the variable's rank in the monomial order
//! (earlier registration ranks higher).

use std::fmt;
use std::sync::{LazyLock, RwLock};

use super::CoeffError;

/// Upper bound on the number of distinct indeterminates.
pub const MAX_VARS: usize = 24;

static REGISTRY: LazyLock<RwLock<Vec<String>>> = LazyLock::new(|| {
    // The common parameters are registered up front so their relative order
    // (and hence canonical strings) does not depend on first use.
    RwLock::new(
        ["a", "q", "t", "u", "v", "eps"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )
});

/// A named indeterminate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u8);

impl Var {
    /// Looks up `name`, registering it if needed.
    pub fn named(name: &str) -> Result<Var, CoeffError> {
        if !is_identifier(name) {
            return Err(CoeffError::BadVariable(name.to_string()));
        }
        if let Some(i) = REGISTRY.read().unwrap().iter().position(|s| s == name) {
            return Ok(Var(i as u8));
        }
        let mut reg = REGISTRY.write().unwrap();
        if let Some(i) = reg.iter().position(|s| s == name) {
            return Ok(Var(i as u8));
        }
        if reg.len() >= MAX_VARS {
            return Err(CoeffError::TooManyVariables(name.to_string()));
        }
        reg.push(name.to_string());
        Ok(Var((reg.len() - 1) as u8))
    }

    /// Like [`Var::named`] for names known to be valid.
    pub fn of(name: &str) -> Var {
        Var::named(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Var {
        debug_assert!(i < MAX_VARS);
        Var(i as u8)
    }

    pub fn name(self) -> String {
        REGISTRY.read().unwrap()[self.index()].clone()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registration_is_stable() {
        let a = Var::of("a");
        assert_eq!(a.index(), 0);
        let z = Var::of("zz_test");
        assert_eq!(Var::of("zz_test"), z);
        assert_eq!(z.name(), "zz_test");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Var::named("1x").is_err());
        assert!(Var::named("").is_err());
        assert!(Var::named("a b").is_err());
    }
}
