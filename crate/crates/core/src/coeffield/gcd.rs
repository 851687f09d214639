//! Polynomial gcd over Z.
//!
//! The heuristic gcd (evaluate one variable at a large integer, recurse, lift
//! the result back ξ-adically, confirm by trial division) handles nearly all
//! inputs met in practice. When it gives up, a recursive primitive
//! polynomial-remainder sequence finishes the job.

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::{Monomial, Poly};
use super::vars::Var;

/// Greatest common divisor, normalized to a positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let (ca, cb) = (a.content(), b.content());
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let gc = ca.gcd(&cb);
    let gm = ma.gcd(&mb);
    let a1 = a.div_scalar(&ca).div_monomial(&ma);
    let b1 = b.div_scalar(&cb).div_monomial(&mb);
    let g = gcd_primitive(&a1, &b1);
    normalize_sign(g.scale(&gc).mul_monomial(&gm))
}

/// Least common multiple with positive leading coefficient.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    normalize_sign(&a.exact_div(&g).expect("gcd divides") * b)
}

pub(crate) fn normalize_sign(p: Poly) -> Poly {
    if p.signum() < 0 {
        -p
    } else {
        p
    }
}

/// Gcd of polynomials with unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let na = normalize_sign(a.clone());
    let nb = normalize_sign(b.clone());
    if na == nb {
        return na;
    }
    let (sa, sb) = (a.support(), b.support());
    if sa != sb {
        // A variable missing from one side cannot occur in the gcd, so the
        // other side may be replaced by its content with respect to it.
        let only = (sa ^ sb).trailing_zeros() as usize;
        let v = Var::from_index(only);
        return if sa & (1 << only) != 0 {
            gcd(&content_in(a, v), b)
        } else {
            gcd(a, &content_in(b, v))
        };
    }
    if na.len() <= nb.len() {
        if nb.exact_div(&na).is_some() {
            return na;
        }
    } else if na.exact_div(&nb).is_some() {
        return nb;
    }
    if let Some(g) = heuristic(&na, &nb, 0) {
        return g;
    }
    prs(&na, &nb)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let mut g = Poly::zero();
    let mut cs = p.coeffs_in(v);
    cs.sort_by_key(|c| c.len());
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn symmetric_mod(c: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r > half {
        r - m
    } else {
        r
    }
}

const HEU_MAX_BITS: u64 = 40_000;
const HEU_MAX_DEPTH: usize = 12;

/// Full gcd (integer content included) or `None` when the heuristic gives up.
fn heuristic(a: &Poly, b: &Poly, depth: usize) -> Option<Poly> {
    if depth > HEU_MAX_DEPTH {
        return None;
    }
    if let Some(ca) = a.constant_value() {
        return Some(Poly::constant(ca.gcd(&b.content())));
    }
    if let Some(cb) = b.constant_value() {
        return Some(Poly::constant(cb.gcd(&a.content())));
    }
    let (ca, cb) = (a.content(), b.content());
    let gc = ca.gcd(&cb);
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let gm = ma.gcd(&mb);
    let a = a.div_scalar(&ca).div_monomial(&ma);
    let b = b.div_scalar(&cb).div_monomial(&mb);
    if a.is_constant() || b.is_constant() {
        return Some(Poly::monomial(gm, gc));
    }
    let support = a.support() | b.support();
    let v = Var::from_index(support.trailing_zeros() as usize);
    let deg = a.degree_in(v).max(b.degree_in(v)) as u64;
    let norm = a.max_abs_coeff().min(b.max_abs_coeff());
    let mut xi: BigInt = norm * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * (deg + 1) > HEU_MAX_BITS {
            return None;
        }
        let ea = a.eval_var(v, &xi);
        let eb = b.eval_var(v, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            let h = heuristic(&ea, &eb, depth + 1)?;
            let g = lift(&h, &xi, v);
            if !g.is_zero() {
                let g = normalize_sign(g.div_scalar(&g.content()));
                if a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                    return Some(normalize_sign(g.scale(&gc).mul_monomial(&gm)));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Reconstructs a polynomial in `v` from its value at `v = xi` by taking
/// symmetric residues digit by digit.
fn lift(h: &Poly, xi: &BigInt, v: Var) -> Poly {
    let half: BigInt = xi / 2;
    let mut rest = h.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let terms: Vec<(Monomial, BigInt)> = rest
            .terms()
            .iter()
            .map(|(m, c)| (*m, symmetric_mod(c, xi, &half)))
            .collect();
        let digit = Poly::from_terms(terms);
        rest = (&rest - &digit).div_scalar(xi);
        digits.push(digit);
        if digits.len() > 4096 {
            return Poly::zero();
        }
    }
    Poly::from_coeffs_in(v, &digits)
}

/// Primitive polynomial remainder sequence in a main variable, recursing on
/// contents.
fn prs(a: &Poly, b: &Poly) -> Poly {
    let support = a.support() & b.support();
    let v = (0..32)
        .filter(|i| support & (1 << i) != 0)
        .map(|i| Var::from_index(i as usize))
        .min_by_key(|v| a.degree_in(*v).max(b.degree_in(*v)))
        .expect("nonconstant inputs share a variable");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let gcont = gcd(&ca, &cb);
    let mut p = primitive_coeffs(a.coeffs_in(v), &ca);
    let mut q = primitive_coeffs(b.coeffs_in(v), &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.len() == 1 {
            return gcont;
        }
        let r = prem(&p, &q);
        if r.is_empty() {
            break;
        }
        let c = r.iter().fold(Poly::zero(), |g, x| if g.is_one() { g } else { gcd(&g, x) });
        let r: Vec<Poly> = r.iter().map(|x| x.exact_div(&c).expect("content divides")).collect();
        p = q;
        q = r;
    }
    let g = Poly::from_coeffs_in(v, &q);
    normalize_sign(&g * &gcont)
}

fn primitive_coeffs(cs: Vec<Poly>, content: &Poly) -> Vec<Poly> {
    cs.into_iter()
        .map(|c| c.exact_div(content).expect("content divides"))
        .collect()
}

/// Pseudo-remainder of dense coefficient vectors (index = degree); trailing
/// zeros trimmed, empty for zero.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top].clone();
        let shift = top - db;
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&c * bc);
        }
        debug_assert!(r[top].is_zero());
        trim(&mut r);
    }
    r
}

fn trim(r: &mut Vec<Poly>) {
    while r.last().is_some_and(|x| x.is_zero()) {
        r.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn univariate() {
        let g = gcd(&p("(a+1)^3*(2*a-3)"), &p("(a+1)*(2*a-3)^2*(a+7)"));
        assert_eq!(g, p("(a+1)*(2*a-3)"));
    }

    #[test]
    fn multivariate_with_content() {
        let g = gcd(&p("6*(q-t)*(q*t+1)^2*q"), &p("4*(q-t)^2*(q*t+1)*q^3"));
        assert_eq!(g, p("2*q*(q-t)*(q*t+1)"));
    }

    #[test]
    fn coprime() {
        assert!(gcd(&p("a^2+1"), &p("a+1")).is_one());
        assert!(gcd(&p("x1-y"), &p("x2-y")).is_one());
    }

    #[test]
    fn prs_matches_heuristic() {
        let a = p("(x1-y+a)*(x1-x2+1)*(a*y+3)");
        let b = p("(x1-y+a)*(x2-y)*(a*y+3)^2");
        let want = p("(x1-y+a)*(a*y+3)");
        assert_eq!(gcd(&a, &b), want);
        assert_eq!(normalize_sign(prs(&a, &b)), want);
    }
}
