//! Superpolynomials in explicit variables `z_1..z_N`, `θ_1..θ_N`.
//!
//! A term is `θ_{i1}⋯θ_{ik} z^e` with `i1 < … < ik`; the θ-set is a bitmask.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffield::RatFunc;
use crate::superpartitions::SuperPartition;

use super::AlgebraError;

/// Minimal ring interface for explicit coefficients.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn from_i64(c: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(c: i64) -> Self {
        BigInt::from(c)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn from_i64(c: i64) -> Self {
        RatFunc::int(c)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `θ_S z^e`, with `S` a bitmask and `e` of length `N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term {
    pub thetas: u32,
    pub exps: Vec<u8>,
}

impl Term {
    /// Variables carrying a θ or a positive exponent.
    pub fn support_size(&self) -> usize {
        (0..self.exps.len())
            .filter(|&i| self.exps[i] > 0 || self.thetas & (1 << i) != 0)
            .count()
    }
}

/// Sign of `θ_S θ_T` rewritten in increasing index order (0 if they overlap).
pub fn merge_sign(s: u32, t: u32) -> i64 {
    if s & t != 0 {
        return 0;
    }
    // Count pairs (i in S, j in T) with i > j.
    let mut inv = 0u32;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inv += (s >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Symmetric superpolynomial written out in `N` explicit variables.
#[derive(Clone, PartialEq, Debug)]
pub struct ExplicitSuperPoly<R: Coefficient = RatFunc> {
    n_vars: usize,
    terms: BTreeMap<Term, R>,
}

impl<R: Coefficient> ExplicitSuperPoly<R> {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= 31, "at most 31 explicit variables");
        ExplicitSuperPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Term, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: Term, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    pub fn coefficient(&self, t: &Term) -> R {
        self.terms.get(t).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = ExplicitSuperPoly::zero(self.n_vars);
        for (t, k) in &self.terms {
            out.add_term(t.clone(), k.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = ExplicitSuperPoly::zero(self.n_vars);
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                let s = merge_sign(t1.thetas, t2.thetas);
                if s == 0 {
                    continue;
                }
                let exps = t1.exps.iter().zip(&t2.exps).map(|(a, b)| a + b).collect();
                let c = c1.mul(c2).mul(&R::from_i64(s));
                out.add_term(
                    Term {
                        thetas: t1.thetas | t2.thetas,
                        exps,
                    },
                    c,
                );
            }
        }
        out
    }

    /// `Σ θ_i ∂/∂z_i`.
    pub fn apply_d(&self) -> Self {
        self.theta_derivation(false)
    }

    /// `Σ θ_i z_i ∂/∂z_i`.
    pub fn apply_qtilde(&self) -> Self {
        self.theta_derivation(true)
    }

    fn theta_derivation(&self, keep_degree: bool) -> Self {
        let mut out = ExplicitSuperPoly::zero(self.n_vars);
        for (t, c) in &self.terms {
            for i in 0..self.n_vars {
                let e = t.exps[i];
                if e == 0 || t.thetas & (1 << i) != 0 {
                    continue;
                }
                let sign = merge_sign(1 << i, t.thetas);
                let mut exps = t.exps.clone();
                if !keep_degree {
                    exps[i] -= 1;
                }
                out.add_term(
                    Term {
                        thetas: t.thetas | (1 << i),
                        exps,
                    },
                    c.mul(&R::from_i64(sign * e as i64)),
                );
            }
        }
        out
    }

    /// `Σ z_i ∂/∂θ_i`, the derivative passing the θ's to its left.
    pub fn apply_qperp(&self) -> Self {
        let mut out = ExplicitSuperPoly::zero(self.n_vars);
        for (t, c) in &self.terms {
            for i in 0..self.n_vars {
                if t.thetas & (1 << i) == 0 {
                    continue;
                }
                let before = (t.thetas & ((1 << i) - 1)).count_ones();
                let sign = if before % 2 == 0 { 1 } else { -1 };
                let mut exps = t.exps.clone();
                exps[i] += 1;
                out.add_term(
                    Term {
                        thetas: t.thetas & !(1 << i),
                        exps,
                    },
                    c.mul(&R::from_i64(sign)),
                );
            }
        }
        out
    }

    /// Reads off the monomial-basis coefficients: the coefficient of `m_Λ`
    /// is that of its leading term `θ_1⋯θ_m z_1^{Λ_1}⋯`. Fails when some term
    /// uses every variable, since then longer superpartitions could be
    /// invisible at this `N`.
    pub fn collect(&self) -> Result<BTreeMap<SuperPartition, R>, AlgebraError> {
        let mut out = BTreeMap::new();
        for (t, c) in &self.terms {
            if t.support_size() >= self.n_vars {
                return Err(AlgebraError::InsufficientVariables(self.n_vars));
            }
            if let Some(sp) = leading_term_of(t) {
                out.insert(sp, c.clone());
            }
        }
        Ok(out)
    }
}

/// If `t` is the leading term `θ_1⋯θ_m z_1^{Λ_1}⋯z_ℓ^{Λ_ℓ}` of some `m_Λ`,
/// returns `Λ`.
fn leading_term_of(t: &Term) -> Option<SuperPartition> {
    let m = t.thetas.count_ones() as usize;
    if t.thetas != (1u32 << m) - 1 {
        return None;
    }
    let a: Vec<u32> = t.exps[..m].iter().map(|&e| e as u32).collect();
    if a.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }
    let s: Vec<u32> = t.exps[m..].iter().map(|&e| e as u32).collect();
    if s.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    SuperPartition::from_parts(&a, &s).ok()
}

/// The superpartition and sign of `t` within its monomial function:
/// `t` appears in `m_Λ` with coefficient `sign`.
pub fn term_type(t: &Term) -> Option<(SuperPartition, i64)> {
    let n = t.exps.len();
    let ferm: Vec<usize> = (0..n).filter(|&i| t.thetas & (1 << i) != 0).collect();
    let mut order = ferm.clone();
    order.sort_by(|&i, &j| t.exps[j].cmp(&t.exps[i]));
    if order.windows(2).any(|w| t.exps[w[0]] == t.exps[w[1]]) {
        return None;
    }
    let a: Vec<u32> = order.iter().map(|&i| t.exps[i] as u32).collect();
    let mut s: Vec<u32> = (0..n)
        .filter(|&i| t.thetas & (1 << i) == 0 && t.exps[i] > 0)
        .map(|i| t.exps[i] as u32)
        .collect();
    s.sort_unstable_by(|x, y| y.cmp(x));
    let sp = SuperPartition::from_parts(&a, &s).ok()?;
    Some((sp, permutation_sign(&order)))
}

/// Sign of the permutation that sorts `v` increasingly.
pub fn permutation_sign(v: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The parts of `Λ` as `(exponent, carries θ)`, fermionic parts first.
pub(crate) fn parts_of(lam: &SuperPartition) -> Vec<(u8, bool)> {
    lam.a_parts()
        .into_iter()
        .map(|a| (a as u8, true))
        .chain(lam.s_parts().into_iter().map(|s| (s as u8, false)))
        .collect()
}

/// Calls `f(term, sign)` for every term of `m_Λ` in `n_vars` variables that
/// passes `allowed(var, exponent, fermionic)`.
pub(crate) fn for_each_term(
    lam: &SuperPartition,
    n_vars: usize,
    allowed: &dyn Fn(usize, u8, bool) -> bool,
    f: &mut dyn FnMut(Term, i64),
) {
    let parts = parts_of(lam);
    let mut vars = vec![usize::MAX; parts.len()];
    place(&parts, 0, n_vars, 0, &mut vars, allowed, f);
}

fn place(
    parts: &[(u8, bool)],
    k: usize,
    n_vars: usize,
    used: u32,
    vars: &mut Vec<usize>,
    allowed: &dyn Fn(usize, u8, bool) -> bool,
    f: &mut dyn FnMut(Term, i64),
) {
    if k == parts.len() {
        let mut exps = vec![0u8; n_vars];
        let mut thetas = 0u32;
        let mut ferm = Vec::new();
        for (p, &v) in parts.iter().zip(vars.iter()) {
            exps[v] = p.0;
            if p.1 {
                thetas |= 1 << v;
                ferm.push(v);
            }
        }
        f(Term { thetas, exps }, permutation_sign(&ferm));
        return;
    }
    let (e, fermionic) = parts[k];
    // Equal bosonic parts are placed on increasing variables so each
    // distinct term is produced once.
    let start = if k > 0 && !fermionic && !parts[k - 1].1 && parts[k - 1].0 == e {
        vars[k - 1] + 1
    } else {
        0
    };
    for v in start..n_vars {
        if used & (1 << v) != 0 || !allowed(v, e, fermionic) {
            continue;
        }
        vars[k] = v;
        place(parts, k + 1, n_vars, used | (1 << v), vars, allowed, f);
    }
    vars[k] = usize::MAX;
}

/// `m_Λ` in `n_vars` explicit variables.
pub fn expand_monomial<R: Coefficient>(lam: &SuperPartition, n_vars: usize) -> ExplicitSuperPoly<R> {
    let mut out = ExplicitSuperPoly::zero(n_vars);
    for_each_term(lam, n_vars, &|_, _, _| true, &mut |t, s| {
        out.add_term(t, R::from_i64(s));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_expansions() {
        let p: ExplicitSuperPoly<BigInt> = expand_monomial(&sp("(0;)"), 2);
        assert_eq!(p.terms().len(), 2);
        let p: ExplicitSuperPoly<BigInt> = expand_monomial(&sp("(1;)"), 2);
        assert_eq!(p.terms().len(), 2);
        let p: ExplicitSuperPoly<BigInt> = expand_monomial(&sp("(;1,1)"), 4);
        assert_eq!(p.terms().len(), 6);
    }

    #[test]
    fn roundtrip() {
        for s in ["(3,1,0;2,1)", "(2,0;1,1)", "(;2,2,1)"] {
            let l = sp(s);
            let p: ExplicitSuperPoly<BigInt> = expand_monomial(&l, l.length() + 1);
            let c = p.collect().unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c[&l], BigInt::one());
        }
    }

    #[test]
    fn insufficient_variables_detected() {
        let l = sp("(1;1)");
        let p: ExplicitSuperPoly<BigInt> = expand_monomial(&l, 2);
        assert!(p.collect().is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(merge_sign(0b10, 0b01), -1);
        assert_eq!(merge_sign(0b01, 0b10), 1);
        assert_eq!(merge_sign(0b01, 0b01), 0);
        let t = Term {
            thetas: 0b11,
            exps: vec![0, 1, 0],
        };
        // θ1 θ2 z2 = -θ2 θ1 z2, and θ2 z2 θ1 is the (1,0;) ordering.
        assert_eq!(term_type(&t), Some((sp("(1,0;)"), -1)));
    }
}
