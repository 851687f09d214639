//! Normalized quotients of integer polynomials.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::gcd::gcd;
use super::poly::{Monomial, Poly};
use super::vars::Var;
use super::CoeffError;

/// Element of Q(v1,…,vk) in canonical form: `gcd(num, den) = 1` and the
/// leading coefficient of `den` is positive. Structural equality is equality
/// of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn int(c: i64) -> RatFunc {
        RatFunc::from_poly(Poly::from(c))
    }

    pub fn from_bigint(c: BigInt) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> RatFunc {
        RatFunc::new(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Shorthand for the variable with the given name.
    pub fn sym(name: &str) -> RatFunc {
        RatFunc::var(Var::of(name))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num/den` in canonical form. Panics if `den` is zero; see
    /// [`RatFunc::try_new`].
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        RatFunc::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: Poly, den: Poly) -> Result<RatFunc, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if den.signum() < 0 {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    /// Assembles parts already known to be coprime.
    fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.signum() < 0 {
            RatFunc { num: -num, den: -den }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number, if the function is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(self.num.constant_value()?, self.den.constant_value()?))
    }

    pub fn support(&self) -> u32 {
        self.num.support() | self.den.support()
    }

    pub fn inv(&self) -> RatFunc {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_inv(&self) -> Result<RatFunc, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        Ok(self * &other.try_inv()?)
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs();
        RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self * &RatFunc::int(c)
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, bindings: &HashMap<Var, RatFunc>) -> Result<RatFunc, CoeffError> {
        let n = subst_poly(&self.num, bindings);
        let d = subst_poly(&self.den, bindings);
        if d.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        n.try_div(&d)
    }

    /// Substitutes a single variable.
    pub fn subs(&self, v: Var, value: &RatFunc) -> Result<RatFunc, CoeffError> {
        let mut b = HashMap::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }

    /// Structured form used by the JSON encoders.
    pub fn to_parts(&self) -> RatFuncParts {
        RatFuncParts {
            num: self.num.to_string(),
            den: self.den.to_string(),
        }
    }
}

/// `{num, den}` rendering of a [`RatFunc`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RatFuncParts {
    pub num: String,
    pub den: String,
}

type Term = (Monomial, BigInt);

fn subst_poly(p: &Poly, bindings: &HashMap<Var, RatFunc>) -> RatFunc {
    let mut powers: HashMap<(Var, u16), RatFunc> = HashMap::new();
    let mut acc = RatFunc::zero();
    // Group terms by their bound-variable part so each distinct power product
    // is built once.
    let mut groups: HashMap<Vec<(Var, u16)>, Vec<Term>> = HashMap::new();
    for (m, c) in p.terms() {
        let mut key = Vec::new();
        let mut rest = *m;
        for v in bindings.keys() {
            let e = m.exp(*v);
            if e > 0 {
                key.push((*v, e));
                rest.set_exp(*v, 0);
            }
        }
        key.sort();
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    let mut keys: Vec<_> = groups.keys().cloned().collect();
    keys.sort();
    for key in keys {
        let free = RatFunc::from_poly(Poly::from_terms(groups.remove(&key).unwrap()));
        let mut term = free;
        for (v, e) in key {
            let pw = powers
                .entry((v, e))
                .or_insert_with(|| bindings[&v].pow(e as i32))
                .clone();
            term = &term * &pw;
        }
        acc = &acc + &term;
    }
    acc
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::from_coprime(num, &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&num, &g);
        let (num, g) = if g2.is_one() {
            (num, g)
        } else {
            (num.exact_div(&g2).unwrap(), g.exact_div(&g2).unwrap())
        };
        RatFunc::from_coprime(num, &(&d1 * &d2) * &g)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let (n1, d2) = cancel(&self.num, &rhs.den, &g1);
        let (n2, d1) = cancel(&rhs.num, &self.den, &g2);
        RatFunc::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

fn cancel(a: &Poly, b: &Poly, g: &Poly) -> (Poly, Poly) {
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.exact_div(g).unwrap(), b.exact_div(g).unwrap())
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::one(), |a, b| &a * &b)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> RatFunc {
        RatFunc::int(c)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

impl Default for RatFunc {
    fn default() -> RatFunc {
        RatFunc::zero()
    }
}

/// Canonical string: the expanded numerator alone when the denominator is 1,
/// otherwise `(num)/(den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::str::FromStr for RatFunc {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<RatFunc, CoeffError> {
        super::parse::parse(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<RatFunc, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sign of the constant, or of the leading coefficient of the numerator.
pub fn leading_sign(x: &RatFunc) -> i32 {
    match x.num().lc() {
        None => 0,
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn normalizes_on_construction() {
        assert_eq!(r("(a^2-1)/(a-1)"), r("a+1"));
        assert_eq!(r("(2*a)/(-4*a-6)").to_string(), "(-a)/(2*a+3)");
    }

    #[test]
    fn additive_inverse() {
        let x = r("a/(2*a+3)");
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn limit_style_cancellation() {
        let x = r("a/(eps*(eps-a))");
        let y = &x * &r("-eps");
        assert_eq!(y, r("-a/(eps-a)"));
        let lim = y.subs(Var::of("eps"), &RatFunc::zero()).unwrap();
        assert!(lim.is_one());
    }

    #[test]
    fn substitution() {
        let x = r("a+1");
        assert_eq!(x.subs(Var::of("a"), &RatFunc::int(3)).unwrap(), RatFunc::int(4));
        let bad = r("1/(a-3)");
        assert!(bad.subs(Var::of("a"), &RatFunc::int(3)).is_err());
    }

    #[test]
    fn mixed_denominators() {
        let x = r("1/((a+1)*(a+2))");
        let y = r("1/((a+2)*(a+3))");
        assert_eq!(&x - &y, r("2/((a+1)*(a+2)*(a+3))"));
    }
}
