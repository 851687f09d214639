//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vars::{Var, MAX_VARS};

/// Exponent vector. The derived order compares total degree first, then
/// exponents lexicographically with the earliest-registered variable most
/// significant: graded lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        deg: 0,
        exps: [0; MAX_VARS],
    };

    pub fn var(v: Var, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[v.index()] = e;
        m.deg = e as u32;
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn set_exp(&mut self, v: Var, e: u16) {
        let old = self.exps[v.index()];
        self.exps[v.index()] = e;
        self.deg = self.deg - old as u32 + e as u32;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("exponent overflow");
        }
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= *o;
        }
        Monomial {
            deg: self.deg - other.deg,
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).min(*o);
            deg += *e as u32;
        }
        Monomial { deg, exps }
    }

    /// Bitmask of variables with nonzero exponent.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for (i, e) in self.exps.iter().enumerate() {
            if *e != 0 {
                s |= 1 << i;
            }
        }
        s
    }
}

/// Polynomial in Z[v1,…,vk]; terms sorted by decreasing monomial, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Poly {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.0.deg)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Bitmask of variables occurring in the polynomial.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |s, (m, _)| s | m.support())
    }

    pub fn vars(&self) -> Vec<Var> {
        let s = self.support();
        (0..MAX_VARS)
            .filter(|i| s & (1 << i) != 0)
            .map(Var::from_index)
            .collect()
    }

    /// Gcd of the integer coefficients, positive (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |g, (m, _)| g.gcd(m)),
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| {
                    debug_assert!((k % c).is_zero());
                    (*m, k / c)
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.div(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.constant_value() {
            if self.terms.iter().all(|(_, k)| (k % &c).is_zero()) {
                return Some(Poly {
                    terms: self.terms.iter().map(|(m, k)| (*m, k / &c)).collect(),
                });
            }
            return None;
        }
        // Cheap necessary conditions before the long division.
        let (dlm, dlc) = (&d.terms[0].0, &d.terms[0].1);
        if !dlm.divides(&self.terms[0].0) {
            return None;
        }
        let dtail = d.terms.last().unwrap();
        let stail = self.terms.last().unwrap();
        if !dtail.0.divides(&stail.0) || !(&stail.1 % &dtail.1).is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            if !dlm.divides(rm) {
                return None;
            }
            let (q, r) = rc.div_rem(dlc);
            if !r.is_zero() {
                return None;
            }
            let qm = rm.div(dlm);
            let t = Poly::monomial(qm, q.clone());
            rem = &rem - &(&t * d);
            quot.push((qm, q));
        }
        Some(Poly { terms: quot })
    }

    /// Substitutes an integer for a variable.
    pub fn eval_var(&self, v: Var, x: &BigInt) -> Poly {
        let deg = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(BigInt::one());
        for i in 1..=deg {
            let p = &powers[i - 1] * x;
            powers.push(p);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exp(v) as usize;
                let mut m2 = *m;
                m2.set_exp(v, 0);
                (m2, c * &powers[e])
            })
            .collect();
        Poly::from_terms(terms)
    }

    /// Coefficients with respect to `v`: entry `i` multiplies `v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut m2 = *m;
            m2.set_exp(v, 0);
            buckets[e].push((m2, c.clone()));
        }
        // Removing one variable from a sorted list keeps the relative order
        // within a bucket only up to degree shifts; re-sort.
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            let vm = Monomial::var(v, i as u16);
            for (m, k) in &c.terms {
                terms.push((m.mul(&vm), k.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Leading coefficient with respect to `v`, as a polynomial in the other variables.
    pub fn lc_in(&self, v: Var) -> Poly {
        let deg = self.degree_in(v);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == deg)
            .map(|(m, c)| {
                let mut m2 = *m;
                m2.set_exp(v, 0);
                (m2, c.clone())
            })
            .collect();
        Poly::from_terms(terms)
    }

    /// Sign of the leading coefficient.
    pub fn signum(&self) -> i32 {
        match self.lc() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return Poly {
                terms: big.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
            };
        }
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Poly::from_terms(terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for (_, c) in self.terms.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", Var::from_index(i))?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Poly {
        Poly::var(Var::of("a"))
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &(&a() + &Poly::from(1)) * &(&a() - &Poly::from(1));
        let q = &(&a() * &a()) - &Poly::from(1);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &(&a() + &Poly::from(2)).pow(3) * &(&a() - &Poly::from(5));
        let d = &a() - &Poly::from(5);
        assert_eq!(p.exact_div(&d).unwrap(), (&a() + &Poly::from(2)).pow(3));
        assert!(p.exact_div(&(&a() + &Poly::from(5))).is_none());
    }

    #[test]
    fn display_is_grlex() {
        let t = Poly::var(Var::of("t"));
        let p = &(&a() * &t) - &(&t + &Poly::from(3));
        assert_eq!(p.to_string(), "a*t-t-3");
    }

    #[test]
    fn coeffs_roundtrip() {
        let t = Var::of("t");
        let p = &(&a() + &Poly::var(t)).pow(4) - &Poly::from(7);
        let cs = p.coeffs_in(t);
        assert_eq!(cs.len(), 5);
        assert_eq!(Poly::from_coeffs_in(t, &cs), p);
    }
}
