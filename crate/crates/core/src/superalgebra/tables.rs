//! Integer tables computed from explicit expansions and cached process-wide:
//! monomial structure constants, operator images of monomials, and the
//! power-sum/monomial transition matrices of each degree sector.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::superpartitions::{enumerate_superpartitions, SuperPartition};

use super::explicit::{expand_monomial, for_each_term, merge_sign, parts_of, ExplicitSuperPoly, Term};

pub type IntExpansion = Vec<(SuperPartition, BigInt)>;

type Cache<K, V> = LazyLock<RwLock<HashMap<K, Arc<V>>>>;

static PRODUCTS: Cache<(SuperPartition, SuperPartition), IntExpansion> = LazyLock::new(Default::default);
static OPERATORS: Cache<(Operator, SuperPartition), IntExpansion> = LazyLock::new(Default::default);
static TRANSITIONS: Cache<(u32, usize), Transition> = LazyLock::new(Default::default);

fn cached<K: std::hash::Hash + Eq + Clone, V>(cache: &Cache<K, V>, key: &K, make: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = cache.read().unwrap().get(key) {
        return v.clone();
    }
    let v = Arc::new(make());
    cache.write().unwrap().entry(key.clone()).or_insert(v).clone()
}

/// Whether a term lies in `m_Λ`, and with which sign. `sorted_a`/`sorted_s`
/// are the parts of `Λ`.
fn sign_in(t: &Term, a: &[u32], s: &[u32]) -> i64 {
    let n = t.exps.len();
    if t.thetas.count_ones() as usize != a.len() {
        return 0;
    }
    let mut ferm: Vec<usize> = (0..n).filter(|&i| t.thetas & (1 << i) != 0).collect();
    ferm.sort_by(|&i, &j| t.exps[j].cmp(&t.exps[i]));
    if ferm.iter().zip(a).any(|(&i, &x)| t.exps[i] as u32 != x) {
        return 0;
    }
    let mut bos: Vec<u32> = (0..n)
        .filter(|&i| t.thetas & (1 << i) == 0 && t.exps[i] > 0)
        .map(|i| t.exps[i] as u32)
        .collect();
    if bos.len() != s.len() {
        return 0;
    }
    bos.sort_unstable_by(|x, y| y.cmp(x));
    if bos != s {
        return 0;
    }
    super::explicit::permutation_sign(&ferm)
}

/// Leading term `θ_1⋯θ_m z_1^{Λ_1}⋯z_ℓ^{Λ_ℓ}` of `m_Λ` in `ℓ(Λ)` variables.
pub(crate) fn leading_term(lam: &SuperPartition) -> Term {
    let parts = parts_of(lam);
    Term {
        thetas: (1u32 << lam.m()) - 1,
        exps: parts.iter().map(|p| p.0).collect(),
    }
}

/// `m_A · m_B` in the monomial basis. The coefficient of `m_Γ` is read off as
/// the coefficient of the leading term of `m_Γ` in the explicit product; only
/// the terms of one factor dividing that leading term are enumerated.
pub fn monomial_product(a: &SuperPartition, b: &SuperPartition) -> Arc<IntExpansion> {
    cached(&PRODUCTS, &(a.clone(), b.clone()), || compute_product(a, b))
}

fn compute_product(a: &SuperPartition, b: &SuperPartition) -> IntExpansion {
    let (la, lb) = (a.length(), b.length());
    // Enumerate over the factor with fewer parts; `swap` records the order.
    let (small, big, swap) = if la <= lb { (a, b, false) } else { (b, a, true) };
    let (big_a, big_s) = (big.a_parts(), big.s_parts());
    let mut out = Vec::new();
    for g in enumerate_superpartitions(a.n() + b.n(), a.m() + b.m()) {
        let l = g.length();
        if l < la.max(lb) || l > la + lb {
            continue;
        }
        let rep = leading_term(&g);
        let mut coeff = 0i64;
        let allowed = |v: usize, e: u8, fermionic: bool| e <= rep.exps[v] && (!fermionic || rep.thetas & (1 << v) != 0);
        for_each_term(small, l, &allowed, &mut |t, st| {
            let u = Term {
                thetas: rep.thetas & !t.thetas,
                exps: rep.exps.iter().zip(&t.exps).map(|(x, y)| x - y).collect(),
            };
            if rep.thetas & t.thetas != t.thetas {
                return;
            }
            let su = sign_in(&u, &big_a, &big_s);
            if su == 0 {
                return;
            }
            let ms = if swap {
                merge_sign(u.thetas, t.thetas)
            } else {
                merge_sign(t.thetas, u.thetas)
            };
            coeff += st * su * ms;
        });
        if coeff != 0 {
            out.push((g, BigInt::from(coeff)));
        }
    }
    out
}

/// Linear operators realized on explicit superpolynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Operator {
    /// `Σ θ_i ∂/∂z_i`
    D,
    /// `Σ θ_i z_i ∂/∂z_i`
    QTilde,
    /// `Σ z_i ∂/∂θ_i`
    QPerp,
}

/// Image of `m_Γ` under an operator, in the monomial basis. All three
/// operators keep the set of variables a term touches, so `ℓ(Γ)+1`
/// variables suffice.
pub fn operator_on_monomial(op: Operator, g: &SuperPartition) -> Arc<IntExpansion> {
    cached(&OPERATORS, &(op, g.clone()), || {
        let p: ExplicitSuperPoly<BigInt> = expand_monomial(g, g.length() + 1);
        let image = match op {
            Operator::D => p.apply_d(),
            Operator::QTilde => p.apply_qtilde(),
            Operator::QPerp => p.apply_qperp(),
        };
        image
            .collect()
            .expect("operators preserve support")
            .into_iter()
            .collect()
    })
}

/// Change of basis between power sums and monomials on one sector.
#[derive(Debug)]
pub struct Transition {
    pub basis: Vec<SuperPartition>,
    pub index: HashMap<SuperPartition, usize>,
    /// Row `i`: `p_{basis[i]} = Σ_j p2m[i][j] m_{basis[j]}`.
    pub p2m: Vec<Vec<BigRational>>,
    /// Row `i`: `m_{basis[i]} = Σ_j m2p[i][j] p_{basis[j]}`.
    pub m2p: Vec<Vec<BigRational>>,
}

pub fn transition(n: u32, m: usize) -> Arc<Transition> {
    cached(&TRANSITIONS, &(n, m), || compute_transition(n, m))
}

fn int_product(f: &BTreeMap<SuperPartition, BigInt>, g: &BTreeMap<SuperPartition, BigInt>) -> BTreeMap<SuperPartition, BigInt> {
    let mut out: BTreeMap<SuperPartition, BigInt> = BTreeMap::new();
    for (a, ca) in f {
        for (b, cb) in g {
            for (c, k) in monomial_product(a, b).iter() {
                *out.entry(c.clone()).or_default() += ca * cb * k;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `p_Λ = p̃_{Λ_1}⋯p̃_{Λ_m} p_{Λ_{m+1}}⋯` in the monomial basis.
pub fn power_sum_in_monomials(lam: &SuperPartition) -> BTreeMap<SuperPartition, BigInt> {
    let mut acc: BTreeMap<SuperPartition, BigInt> = BTreeMap::new();
    acc.insert(SuperPartition::empty(), BigInt::one());
    for a in lam.a_parts() {
        let g = BTreeMap::from([(SuperPartition::from_parts(&[a], &[]).unwrap(), BigInt::one())]);
        acc = int_product(&acc, &g);
    }
    for s in lam.s_parts() {
        let g = BTreeMap::from([(SuperPartition::from_parts(&[], &[s]).unwrap(), BigInt::one())]);
        acc = int_product(&acc, &g);
    }
    acc
}

fn compute_transition(n: u32, m: usize) -> Transition {
    let basis = enumerate_superpartitions(n, m);
    let index: HashMap<SuperPartition, usize> = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let d = basis.len();
    let mut p2m = vec![vec![BigRational::zero(); d]; d];
    for (i, lam) in basis.iter().enumerate() {
        for (g, c) in power_sum_in_monomials(lam) {
            p2m[i][index[&g]] = BigRational::from_integer(c);
        }
    }
    let m2p = invert(&p2m).expect("power sums form a basis");
    Transition { basis, index, p2m, m2p }
}

/// Gauss–Jordan inverse over Q.
pub fn invert(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(p * &f);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn explicit_product(a: &SuperPartition, b: &SuperPartition) -> BTreeMap<SuperPartition, BigInt> {
        let n = (a.n() + b.n()) as usize + a.m() + b.m() + 1;
        let pa: ExplicitSuperPoly<BigInt> = expand_monomial(a, n);
        let pb: ExplicitSuperPoly<BigInt> = expand_monomial(b, n);
        pa.mul(&pb).collect().unwrap()
    }

    #[test]
    fn extraction_matches_full_expansion() {
        let cases = [
            ("(;1)", "(;1)"),
            ("(0;)", "(;1)"),
            ("(1;)", "(0;)"),
            ("(0;)", "(1;)"),
            ("(1,0;)", "(0;1)"),
            ("(2;1)", "(0;1,1)"),
            ("(;2,1)", "(1;1)"),
        ];
        for (a, b) in cases {
            let (a, b) = (sp(a), sp(b));
            let fast: BTreeMap<_, _> = monomial_product(&a, &b).iter().cloned().collect();
            assert_eq!(fast, explicit_product(&a, &b), "{a} * {b}");
        }
    }

    #[test]
    fn e1_squared() {
        let p: BTreeMap<_, _> = monomial_product(&sp("(;1)"), &sp("(;1)")).iter().cloned().collect();
        assert_eq!(p[&sp("(;2)")], BigInt::from(1));
        assert_eq!(p[&sp("(;1,1)")], BigInt::from(2));
    }

    #[test]
    fn transitions_invert() {
        let t = transition(3, 1);
        let d = t.basis.len();
        for i in 0..d {
            for j in 0..d {
                let s: BigRational = (0..d).map(|k| &t.p2m[i][k] * &t.m2p[k][j]).sum();
                assert_eq!(s, if i == j { BigRational::one() } else { BigRational::zero() });
            }
        }
    }
}
