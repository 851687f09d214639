use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeffield::params::{alpha, q, t};
use crate::coeffield::RatFunc;
use crate::superpartitions::{enumerate_superpartitions, partitions, z_factor, Partition, SuperPartition};

use super::explicit::{expand_monomial, ExplicitSuperPoly};
use super::tables::{monomial_product, operator_on_monomial, transition, Operator};
use super::AlgebraError;

/// Basis in which a [`SymSuperFunc`] is written.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    /// Monomials `m_Λ`.
    M,
    /// Power sums `p_Λ = p̃_{Λ_1}⋯p̃_{Λ_m} p_{Λ_{m+1}}⋯`.
    P,
    /// `e_Λ = ẽ_{Λ_1}⋯ẽ_{Λ_m} e_{Λ_{m+1}}⋯`.
    E,
    /// `h_Λ = h̃_{Λ_1}⋯h̃_{Λ_m} h_{Λ_{m+1}}⋯`.
    H,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
        }
    }
}

/// Named generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    E,
    ETilde,
    H,
    HTilde,
    P,
    PTilde,
    G,
    GTilde,
}

impl Generator {
    pub fn is_tilde(self) -> bool {
        matches!(self, Generator::ETilde | Generator::HTilde | Generator::PTilde | Generator::GTilde)
    }
}

/// A symmetric superpolynomial as a finite combination of basis elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSuperFunc {
    basis: Basis,
    coeffs: BTreeMap<SuperPartition, RatFunc>,
}

/// Fermionic and bosonic indices of a power-sum product.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumIndex {
    /// Strictly decreasing.
    pub fermionic: Vec<u32>,
    /// Weakly decreasing, positive.
    pub bosonic: Vec<u32>,
}

impl PowerSumIndex {
    pub fn of(lam: &SuperPartition) -> PowerSumIndex {
        PowerSumIndex {
            fermionic: lam.a_parts(),
            bosonic: lam.s_parts(),
        }
    }

    pub fn to_superpartition(&self) -> SuperPartition {
        SuperPartition::from_parts(&self.fermionic, &self.bosonic).expect("canonical power-sum index")
    }
}

/// `p_x p_y = sign · p_z`. The sign is 0 when a fermionic index repeats.
pub fn p_product(x: &PowerSumIndex, y: &PowerSumIndex) -> (i32, PowerSumIndex) {
    let mut f: Vec<u32> = x.fermionic.iter().chain(&y.fermionic).copied().collect();
    let mut inv = 0usize;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i] == f[j] {
                return (0, PowerSumIndex::default());
            }
            if f[i] < f[j] {
                inv += 1;
            }
        }
    }
    f.sort_unstable_by(|a, b| b.cmp(a));
    let mut b: Vec<u32> = x.bosonic.iter().chain(&y.bosonic).copied().collect();
    b.sort_unstable_by(|a, b| b.cmp(a));
    let sign = if inv.is_multiple_of(2) { 1 } else { -1 };
    (sign, PowerSumIndex { fermionic: f, bosonic: b })
}

fn ones(k: u32) -> Vec<u32> {
    vec![1; k as usize]
}

impl SymSuperFunc {
    pub fn zero(basis: Basis) -> SymSuperFunc {
        SymSuperFunc {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> SymSuperFunc {
        SymSuperFunc::basis_element(Basis::M, SuperPartition::empty())
    }

    pub fn basis_element(basis: Basis, lam: SuperPartition) -> SymSuperFunc {
        SymSuperFunc {
            basis,
            coeffs: BTreeMap::from([(lam, RatFunc::one())]),
        }
    }

    pub fn from_coeffs(basis: Basis, coeffs: impl IntoIterator<Item = (SuperPartition, RatFunc)>) -> SymSuperFunc {
        let mut f = SymSuperFunc::zero(basis);
        for (lam, c) in coeffs {
            f.add_term(lam, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<SuperPartition, RatFunc> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> BTreeMap<SuperPartition, RatFunc> {
        self.coeffs
    }

    pub fn coefficient(&self, lam: &SuperPartition) -> RatFunc {
        self.coeffs.get(lam).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lam: SuperPartition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&lam) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.coeffs.remove(&lam);
                }
            }
            None => {
                self.coeffs.insert(lam, c.clone());
            }
        }
    }

    /// Generator of the given kind and index in its defining basis.
    pub fn generator(kind: Generator, k: u32) -> Result<SymSuperFunc, AlgebraError> {
        if k == 0 && !kind.is_tilde() {
            return Err(AlgebraError::OutOfRange(format!("{kind:?} requires k ≥ 1")));
        }
        let sp = |a: &[u32], s: &[u32]| SuperPartition::from_parts(a, s).expect("valid generator index");
        Ok(match kind {
            Generator::E => SymSuperFunc::basis_element(Basis::M, sp(&[], &ones(k))),
            Generator::ETilde => SymSuperFunc::basis_element(Basis::M, sp(&[0], &ones(k))),
            Generator::H => SymSuperFunc::from_coeffs(
                Basis::M,
                partitions(k).into_iter().map(|l| (sp(&[], l.parts()), RatFunc::one())),
            ),
            Generator::HTilde => SymSuperFunc::from_coeffs(
                Basis::M,
                enumerate_superpartitions(k, 1).into_iter().map(|l| {
                    let w = RatFunc::int(l.a_parts()[0] as i64 + 1);
                    (l, w)
                }),
            ),
            Generator::P => SymSuperFunc::basis_element(Basis::P, sp(&[], &[k])),
            Generator::PTilde => SymSuperFunc::basis_element(Basis::P, sp(&[k], &[])),
            Generator::G | Generator::GTilde => {
                let m = kind.is_tilde() as usize;
                SymSuperFunc::from_coeffs(
                    Basis::P,
                    enumerate_superpartitions(k, m).into_iter().map(|l| {
                        let s = Partition::new(l.s_parts()).expect("partition");
                        let w = (&alpha().pow(l.length() as i32) * &RatFunc::from_bigint(z_factor(&s))).inv();
                        (l, w)
                    }),
                )
            }
        })
    }

    pub fn add(&self, other: &SymSuperFunc) -> SymSuperFunc {
        let (a, b) = self.common_basis(other);
        let mut out = a;
        for (lam, c) in b.coeffs {
            out.add_term(lam, &c);
        }
        out
    }

    pub fn sub(&self, other: &SymSuperFunc) -> SymSuperFunc {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> SymSuperFunc {
        SymSuperFunc::from_coeffs(self.basis, self.coeffs.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    fn common_basis(&self, other: &SymSuperFunc) -> (SymSuperFunc, SymSuperFunc) {
        if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_m(), other.to_m())
        }
    }

    /// Product. Stays in the p-basis when both factors are there, otherwise
    /// computed in the monomial basis.
    pub fn multiply(&self, other: &SymSuperFunc) -> SymSuperFunc {
        if self.basis == Basis::P && other.basis == Basis::P {
            let mut out = SymSuperFunc::zero(Basis::P);
            for (a, ca) in &self.coeffs {
                for (b, cb) in &other.coeffs {
                    let (s, idx) = p_product(&PowerSumIndex::of(a), &PowerSumIndex::of(b));
                    if s != 0 {
                        out.add_term(idx.to_superpartition(), &(ca * cb).scale_int(s as i64));
                    }
                }
            }
            return out;
        }
        let (f, g) = (self.to_m(), other.to_m());
        let mut acc: BTreeMap<SuperPartition, RatFunc> = BTreeMap::new();
        for (a, ca) in &f.coeffs {
            for (b, cb) in &g.coeffs {
                let c = ca * cb;
                for (gam, k) in monomial_product(a, b).iter() {
                    let term = c.scale_int(small(k));
                    let e = acc.entry(gam.clone()).or_insert_with(RatFunc::zero);
                    *e = &*e + &term;
                }
            }
        }
        SymSuperFunc::from_coeffs(Basis::M, acc)
    }

    /// Rewrites in the monomial basis.
    pub fn to_m(&self) -> SymSuperFunc {
        match self.basis {
            Basis::M => self.clone(),
            Basis::P => {
                let mut out = SymSuperFunc::zero(Basis::M);
                for (lam, c) in &self.coeffs {
                    let tr = transition(lam.n(), lam.m());
                    let row = &tr.p2m[tr.index[lam]];
                    for (j, x) in row.iter().enumerate() {
                        if !num_traits::Zero::is_zero(x) {
                            out.add_term(tr.basis[j].clone(), &(c * &RatFunc::from_rational(x)));
                        }
                    }
                }
                out
            }
            Basis::E | Basis::H => {
                let (plain, tilde) = if self.basis == Basis::E {
                    (Generator::E, Generator::ETilde)
                } else {
                    (Generator::H, Generator::HTilde)
                };
                let mut out = SymSuperFunc::zero(Basis::M);
                for (lam, c) in &self.coeffs {
                    let mut f = SymSuperFunc::one();
                    for a in lam.a_parts() {
                        f = f.multiply(&SymSuperFunc::generator(tilde, a).expect("index in range"));
                    }
                    for s in lam.s_parts() {
                        f = f.multiply(&SymSuperFunc::generator(plain, s).expect("index in range"));
                    }
                    out = out.add(&f.scale(c));
                }
                out
            }
        }
    }

    /// Rewrites in the power-sum basis.
    pub fn to_p(&self) -> SymSuperFunc {
        if self.basis == Basis::P {
            return self.clone();
        }
        let f = self.to_m();
        let mut out = SymSuperFunc::zero(Basis::P);
        for (lam, c) in &f.coeffs {
            let tr = transition(lam.n(), lam.m());
            let row = &tr.m2p[tr.index[lam]];
            for (j, x) in row.iter().enumerate() {
                if !num_traits::Zero::is_zero(x) {
                    out.add_term(tr.basis[j].clone(), &(c * &RatFunc::from_rational(x)));
                }
            }
        }
        out
    }

    /// The polynomial in `n_vars` explicit variables.
    pub fn expand(&self, n_vars: usize) -> ExplicitSuperPoly<RatFunc> {
        let f = self.to_m();
        let mut out = ExplicitSuperPoly::zero(n_vars);
        for (lam, c) in &f.coeffs {
            out = out.add(&expand_monomial::<RatFunc>(lam, n_vars).scale(c));
        }
        out
    }

    /// Inverse of [`SymSuperFunc::expand`].
    pub fn collect(p: &ExplicitSuperPoly<RatFunc>) -> Result<SymSuperFunc, AlgebraError> {
        Ok(SymSuperFunc::from_coeffs(Basis::M, p.collect()?))
    }

    /// Image under one of the explicit differential operators, in the
    /// monomial basis.
    pub fn apply(&self, op: Operator) -> SymSuperFunc {
        let f = self.to_m();
        let mut acc: BTreeMap<SuperPartition, RatFunc> = BTreeMap::new();
        for (lam, c) in &f.coeffs {
            for (gam, k) in operator_on_monomial(op, lam).iter() {
                let e = acc.entry(gam.clone()).or_insert_with(RatFunc::zero);
                *e = &*e + &c.scale_int(small(k));
            }
        }
        SymSuperFunc::from_coeffs(Basis::M, acc)
    }

    /// `d = Σ θ_i ∂/∂z_i`.
    pub fn d_operator(&self) -> SymSuperFunc {
        self.apply(Operator::D)
    }

    /// Power-sum coefficients paired with the scalar-product diagonal.
    fn pair(&self, other: &SymSuperFunc, diag: impl Fn(&SuperPartition) -> RatFunc) -> RatFunc {
        let (f, g) = (self.to_p(), other.to_p());
        let mut out = RatFunc::zero();
        for (lam, c) in &f.coeffs {
            if let Some(d) = g.coeffs.get(lam) {
                out = &out + &(&(c * d) * &diag(lam));
            }
        }
        out
    }

    /// `⟨⟨f, g⟩⟩_α`.
    pub fn scalar_alpha(&self, other: &SymSuperFunc) -> RatFunc {
        self.pair(other, p_norm_alpha)
    }

    /// `⟨⟨f, g⟩⟩_{q,t}`.
    pub fn scalar_qt(&self, other: &SymSuperFunc) -> RatFunc {
        self.pair(other, p_norm_qt)
    }
}

fn small(k: &BigInt) -> i64 {
    i64::try_from(k).expect("structure constant fits in i64")
}

fn fermionic_sign(m: usize) -> i64 {
    if (m * m.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `⟨⟨p_Λ, p_Λ⟩⟩_α = (−1)^{m(m−1)/2} α^{m+ℓ(Λ^s)} z_{Λ^s}`.
pub fn p_norm_alpha(lam: &SuperPartition) -> RatFunc {
    let s = Partition::new(lam.s_parts()).expect("partition");
    let z = RatFunc::from_bigint(z_factor(&s));
    (&alpha().pow(lam.length() as i32) * &z).scale_int(fermionic_sign(lam.m()))
}

/// `⟨⟨p_Λ, p_Λ⟩⟩_{q,t} = (−1)^{m(m−1)/2} q^{|Λ^a|} z_{Λ^s} Π (1−q^{Λ^s_i})/(1−t^{Λ^s_i})`.
pub fn p_norm_qt(lam: &SuperPartition) -> RatFunc {
    let s = Partition::new(lam.s_parts()).expect("partition");
    let mut out = RatFunc::from_bigint(z_factor(&s));
    let asum: u32 = lam.a_parts().iter().sum();
    out = &out * &q().pow(asum as i32);
    let one = RatFunc::one();
    for &k in s.parts() {
        let num = &one - &q().pow(k as i32);
        let den = &one - &t().pow(k as i32);
        out = &out * &(&num / &den);
    }
    out.scale_int(fermionic_sign(lam.m()))
}

impl fmt::Display for SymSuperFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let b = self.basis.name();
        for (i, (lam, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{b}{lam}")?;
            } else {
                write!(f, "({c})*{b}{lam}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    sp: String,
    c: &'a RatFunc,
}

impl Serialize for SymSuperFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .coeffs
            .iter()
            .rev()
            .map(|(lam, c)| Entry { sp: lam.to_string(), c })
            .collect();
        let mut st = serializer.serialize_struct("SymSuperFunc", 2)?;
        st.serialize_field("basis", self.basis.name())?;
        st.serialize_field("coeffs", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn m(entries: &[(&str, i64)]) -> SymSuperFunc {
        SymSuperFunc::from_coeffs(Basis::M, entries.iter().map(|(s, c)| (sp(s), RatFunc::int(*c))))
    }

    fn gen(kind: Generator, k: u32) -> SymSuperFunc {
        SymSuperFunc::generator(kind, k).unwrap()
    }

    #[test]
    fn products_in_monomials() {
        assert_eq!(gen(Generator::E, 1).multiply(&gen(Generator::E, 1)), m(&[("(;2)", 1), ("(;1,1)", 2)]));
        assert_eq!(gen(Generator::ETilde, 0).multiply(&gen(Generator::E, 1)), m(&[("(1;)", 1), ("(0;1)", 1)]));
        assert!(gen(Generator::PTilde, 0).multiply(&gen(Generator::PTilde, 0)).is_zero());
    }

    #[test]
    fn power_sums() {
        let p1 = gen(Generator::P, 1);
        assert_eq!(p1.multiply(&p1).to_m(), m(&[("(;2)", 1), ("(;1,1)", 2)]));
        assert_eq!(gen(Generator::P, 2).to_m(), m(&[("(;2)", 1)]));
        let (s, idx) = p_product(&PowerSumIndex::of(&sp("(0;)")), &PowerSumIndex::of(&sp("(2;)")));
        assert_eq!((s, idx.to_superpartition()), (-1, sp("(2,0;)")));
    }

    #[test]
    fn htilde_one() {
        assert_eq!(gen(Generator::HTilde, 1), m(&[("(1;)", 2), ("(0;1)", 1)]));
    }

    #[test]
    fn d_on_generators() {
        let two_p1 = gen(Generator::PTilde, 1).scale(&RatFunc::int(2));
        assert_eq!(gen(Generator::P, 2).d_operator(), two_p1.to_m());
        for k in 0..4 {
            assert_eq!(gen(Generator::E, k + 1).d_operator(), gen(Generator::ETilde, k));
            assert_eq!(gen(Generator::H, k + 1).d_operator(), gen(Generator::HTilde, k));
        }
        assert!(gen(Generator::E, 3).d_operator().d_operator().is_zero());
    }

    #[test]
    fn scalar_products() {
        let p0 = gen(Generator::PTilde, 0);
        assert_eq!(p0.scalar_alpha(&p0), alpha());
        let p21 = SymSuperFunc::basis_element(Basis::P, sp("(;2,1)"));
        assert_eq!(p21.scalar_alpha(&p21), alpha().pow(2).scale_int(2));
        let p2 = SymSuperFunc::basis_element(Basis::P, sp("(;2)"));
        let p11 = SymSuperFunc::basis_element(Basis::P, sp("(;1,1)"));
        assert!(p2.scalar_alpha(&p11).is_zero());
    }

    #[test]
    fn basis_roundtrip() {
        for (n, mm) in [(3, 0), (2, 1), (3, 2)] {
            for lam in enumerate_superpartitions(n, mm) {
                let f = SymSuperFunc::basis_element(Basis::P, lam);
                assert_eq!(f.to_m().to_p(), f);
            }
        }
    }

    #[test]
    fn expand_collect_roundtrip() {
        let f = SymSuperFunc::basis_element(Basis::M, sp("(3,1,0;2,1)"));
        assert_eq!(SymSuperFunc::collect(&f.expand(7)).unwrap(), f);
    }

    #[test]
    fn g_one() {
        assert_eq!(gen(Generator::G, 1), SymSuperFunc::from_coeffs(Basis::P, [(sp("(;1)"), alpha().inv())]));
    }
}
