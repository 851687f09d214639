//! Checks of the closed formulas against the brute-force constructions.
//! Every check works on one `Λ` (or one size) and returns an [`Outcome`], so
//! drivers can fan the work out and merge the results in any order.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeffield::params::{alpha, v};
use crate::coeffield::{RatFunc, Var};
use crate::orthobasis::{
    apply_e0tilde, apply_qperp, apply_qtilde, expand_in_orthogonal, jack, jack_inverse_alpha, macdonald, omega_hat,
    Field, OrthoError,
};
use crate::pieri::{det_generic_limit, det_pieri, lemma_identity, norm_squared, pieri, to_half_powers, PieriError};
use crate::sixvertex::{det_asm_identity, det_d_prime_entries, det_d_prime_symbolic, SixVertexError};
use crate::superalgebra::{Generator, Operator, SymSuperFunc};
use crate::superpartitions::{enumerate_superpartitions, strips, StripKind, SuperPartition};

pub type CoefficientMap = BTreeMap<SuperPartition, RatFunc>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    #[error(transparent)]
    Pieri(#[from] PieriError),
    #[error(transparent)]
    SixVertex(#[from] SixVertexError),
}

/// One disagreement, located by `(Λ, n, kind, Ω)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub lambda: String,
    pub n: u32,
    pub kind: String,
    pub omega: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: ({}, {}, {}, {}) expected {} got {}",
            self.check, self.lambda, self.n, self.kind, self.omega, self.expected, self.got
        )
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct Outcome {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(mut self, other: Outcome) -> Outcome {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
        self
    }

    /// Mismatches sorted, so that merged outcomes do not depend on order.
    pub fn sorted(mut self) -> Outcome {
        self.mismatches.sort();
        self
    }
}

/// Where a comparison happens, for reporting.
#[derive(Clone, Debug)]
pub struct Site<'a> {
    pub check: &'a str,
    pub lambda: &'a SuperPartition,
    pub n: u32,
    pub kind: &'a str,
}

impl Site<'_> {
    fn mismatch(&self, omega: impl fmt::Display, expected: &RatFunc, got: &RatFunc) -> Mismatch {
        Mismatch {
            check: self.check.to_string(),
            lambda: self.lambda.to_string(),
            n: self.n,
            kind: self.kind.to_string(),
            omega: omega.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    /// One comparison of two values.
    pub fn compare(&self, omega: impl fmt::Display, expected: &RatFunc, got: &RatFunc) -> Outcome {
        Outcome {
            checked: 1,
            mismatches: if expected == got {
                Vec::new()
            } else {
                vec![self.mismatch(omega, expected, got)]
            },
        }
    }

    /// Entry-by-entry comparison; absent keys count as zero.
    pub fn compare_maps(&self, expected: &CoefficientMap, got: &CoefficientMap) -> Outcome {
        let zero = RatFunc::zero();
        let mut out = Outcome::default();
        let keys: std::collections::BTreeSet<&SuperPartition> = expected.keys().chain(got.keys()).collect();
        for k in keys.into_iter().rev() {
            let (e, g) = (expected.get(k).unwrap_or(&zero), got.get(k).unwrap_or(&zero));
            out = out.merge(self.compare(k, e, g));
        }
        out
    }
}

/// Superpartitions with `|Λ*| ≤ max_degree` and `m ≤ max_fermion`.
pub fn degree_range(max_degree: u32, max_fermion: usize) -> Vec<SuperPartition> {
    (0..=max_degree)
        .flat_map(|n| (0..=max_fermion).flat_map(move |m| enumerate_superpartitions(n, m)))
        .collect()
}

/// Superpartitions of degree `(n|m)` with `n + m ≤ max`.
pub fn total_range(max: u32) -> Vec<SuperPartition> {
    (0..=max)
        .flat_map(|n| (0..=(max - n) as usize).flat_map(move |m| enumerate_superpartitions(n, m)))
        .collect()
}

pub fn generator_of(kind: StripKind) -> Generator {
    match kind {
        StripKind::E => Generator::E,
        StripKind::ETilde => Generator::ETilde,
        StripKind::G => Generator::G,
        StripKind::GTilde => Generator::GTilde,
    }
}

/// The `n` values a kind admits, up to `max_n`.
pub fn n_values(kind: StripKind, max_n: u32) -> std::ops::RangeInclusive<u32> {
    if kind.is_tilde() {
        0..=max_n
    } else {
        1..=max_n
    }
}

/// Closed-form Pieri coefficients as a map on `Ω`.
pub fn closed_map(lam: &SuperPartition, n: u32, kind: StripKind, field: Field) -> Result<CoefficientMap, VerifyError> {
    Ok(pieri(lam, n, kind, field)?
        .into_iter()
        .map(|c| (c.omega, c.total))
        .collect())
}

/// `f · P_Λ` expanded in the Jack basis by brute force.
pub fn oracle_map(lam: &SuperPartition, n: u32, kind: StripKind) -> Result<CoefficientMap, VerifyError> {
    let f = SymSuperFunc::generator(generator_of(kind), n).expect("n is in range for the kind");
    Ok(expand_in_orthogonal(&f.multiply(&jack(lam)?.m), Field::Alpha)?)
}

/// Closed-form Pieri coefficients against the oracle.
pub fn check_pieri(lam: &SuperPartition, n: u32, kind: StripKind) -> Result<Outcome, VerifyError> {
    let site = Site { check: "pieri", lambda: lam, n, kind: kind.name() };
    Ok(site.compare_maps(&oracle_map(lam, n, kind)?, &closed_map(lam, n, kind, Field::Alpha)?))
}

/// Which norm ratio the duality transport uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transport {
    /// `‖P_Ω‖²/‖P_Λ‖²`.
    Printed,
    /// `‖P_Λ‖²/‖P_Ω‖²`.
    Inverted,
}

/// `u_{ΛΩ}(α)` against `v_{Λ′Ω′}(1/α)` times a norm ratio, for `kind` g or g̃.
pub fn check_transport(lam: &SuperPartition, n: u32, kind: StripKind, transport: Transport) -> Result<Outcome, VerifyError> {
    let site = Site { check: "transport", lambda: lam, n, kind: kind.name() };
    let vertical = if kind.is_tilde() { StripKind::ETilde } else { StripKind::E };
    let dual = closed_map(&lam.conjugate(), n, vertical, Field::Alpha)?;
    let inv = alpha().inv();
    let a = Var::of("a");
    let mut out = Outcome::default();
    for c in pieri(lam, n, kind, Field::Alpha)? {
        let v = dual
            .get(&c.omega.conjugate())
            .map(|x| x.subs(a, &inv).expect("α ↦ 1/α"))
            .unwrap_or_default();
        let ratio = match transport {
            Transport::Printed => &norm_squared(&c.omega) / &norm_squared(lam),
            Transport::Inverted => &norm_squared(lam) / &norm_squared(&c.omega),
        };
        out = out.merge(site.compare(&c.omega, &(&v * &ratio), &c.total));
    }
    Ok(out)
}

/// `ẽ₀`, `Q̃` and `q⊥` on `P_Λ`: closed forms against the explicit operators.
pub fn check_operators(lam: &SuperPartition) -> Result<Outcome, VerifyError> {
    let j = jack(lam)?;
    let e0 = SymSuperFunc::generator(Generator::ETilde, 0).expect("ẽ₀");
    let cases = [
        ("e0tilde", e0.multiply(&j.m), apply_e0tilde(lam)),
        ("Qtilde", j.m.apply(Operator::QTilde), apply_qtilde(lam)),
        ("qperp", j.m.apply(Operator::QPerp), apply_qperp(lam)),
    ];
    let mut out = Outcome::default();
    for (name, image, closed) in cases {
        let site = Site { check: "operator", lambda: lam, n: 0, kind: name };
        out = out.merge(site.compare_maps(&expand_in_orthogonal(&image, Field::Alpha)?, &closed));
    }
    Ok(out)
}

/// An operator on the Jack basis given by a closed formula.
#[derive(Clone, Copy, Debug)]
enum Closed {
    Pieri(StripKind, u32),
    E0Tilde,
    QTilde,
    QPerp,
}

fn apply_closed(op: Closed, f: &CoefficientMap) -> Result<CoefficientMap, VerifyError> {
    let mut out = CoefficientMap::new();
    for (lam, c) in f {
        let image = match op {
            Closed::Pieri(kind, n) => closed_map(lam, n, kind, Field::Alpha)?,
            Closed::E0Tilde => apply_e0tilde(lam),
            Closed::QTilde => apply_qtilde(lam),
            Closed::QPerp => apply_qperp(lam),
        };
        for (om, x) in image {
            let e = out.entry(om).or_insert_with(RatFunc::zero);
            *e = &*e + &(c * &x);
        }
    }
    Ok(out)
}

fn combine(terms: &[(i64, &CoefficientMap)]) -> CoefficientMap {
    let mut out = CoefficientMap::new();
    for (k, f) in terms {
        for (lam, c) in *f {
            let e = out.entry(lam.clone()).or_insert_with(RatFunc::zero);
            *e = &*e + &c.scale_int(*k);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `{ẽ_{n−1}, q⊥} = n e_n` and `ẽ₀ e_n − [Q̃, e_n] = ẽ_n` on `P_Λ`, with
/// every operator taken in closed form.
pub fn check_commutators(lam: &SuperPartition, n: u32) -> Result<Outcome, VerifyError> {
    let p = CoefficientMap::from([(lam.clone(), RatFunc::one())]);
    let et = Closed::Pieri(StripKind::ETilde, n - 1);
    let e = Closed::Pieri(StripKind::E, n);
    let en_p = apply_closed(e, &p)?;

    let a = apply_closed(et, &apply_closed(Closed::QPerp, &p)?)?;
    let b = apply_closed(Closed::QPerp, &apply_closed(et, &p)?)?;
    let lhs = combine(&[(1, &a), (1, &b)]);
    let rhs = combine(&[(n as i64, &en_p)]);
    let site = Site { check: "anticommutator", lambda: lam, n, kind: "e" };
    let mut out = site.compare_maps(&rhs, &lhs);

    let a = apply_closed(Closed::E0Tilde, &en_p)?;
    let b = apply_closed(Closed::QTilde, &en_p)?;
    let c = apply_closed(e, &apply_closed(Closed::QTilde, &p)?)?;
    let lhs = combine(&[(1, &a), (-1, &b), (1, &c)]);
    let rhs = apply_closed(Closed::Pieri(StripKind::ETilde, n), &p)?;
    let site = Site { check: "commutator", lambda: lam, n, kind: "etilde" };
    out = out.merge(site.compare_maps(&rhs, &lhs));
    Ok(out)
}

/// `⟨⟨P_Λ, P_Λ⟩⟩ = ‖P_Λ‖²` and `ω̂_α(P_Λ) = ‖P_Λ‖² P_{Λ′}^{(1/α)}`.
pub fn check_norm_duality(lam: &SuperPartition) -> Result<Outcome, VerifyError> {
    let j = jack(lam)?;
    let norm = norm_squared(lam);
    let site = Site { check: "norm", lambda: lam, n: 0, kind: "-" };
    let mut out = site.compare(lam, &j.norm, &norm);
    let lhs = omega_hat(&j.p, &alpha());
    let rhs = jack_inverse_alpha(&lam.conjugate())?.to_p().scale(&norm);
    let site = Site { check: "duality", lambda: lam, n: 0, kind: "-" };
    out = out.merge(site.compare_maps(rhs.coeffs(), lhs.coeffs()));
    Ok(out)
}

/// Which power of `t` multiplies the Macdonald coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TPower {
    /// `t^{d}` as stated.
    Printed,
    /// `t^{−d}`.
    Inverted,
}

/// Conjectured Macdonald coefficients against the Gram–Schmidt expansion, in
/// `u = q^{1/2}`, `v = t^{1/2}`.
pub fn check_macdonald(lam: &SuperPartition, n: u32, kind: StripKind, power: TPower) -> Result<Outcome, VerifyError> {
    let f = SymSuperFunc::generator(generator_of(kind), n).expect("n is in range for the kind");
    let oracle: CoefficientMap = expand_in_orthogonal(&f.multiply(&macdonald(lam)?.m), Field::QT)?
        .into_iter()
        .map(|(k, c)| (k, to_half_powers(&c)))
        .collect();
    let closed: CoefficientMap = pieri(lam, n, kind, Field::QT)?
        .into_iter()
        .map(|c| {
            let total = match power {
                TPower::Printed => c.total,
                TPower::Inverted => {
                    let d = c.d.expect("qt coefficients carry d") as i32;
                    &c.total * &v().pow(-4 * d)
                }
            };
            (c.omega, total)
        })
        .collect();
    let site = Site { check: "macdonald", lambda: lam, n, kind: kind.name() };
    Ok(site.compare_maps(&oracle, &closed))
}

/// The ε-limit of the generic determinant against `Det` on every strip.
pub fn check_generic_limit(lam: &SuperPartition, n: u32, kind: StripKind) -> Outcome {
    let site = Site { check: "generic-limit", lambda: lam, n, kind: kind.name() };
    strips(lam, n, kind)
        .into_iter()
        .map(|(om, cls)| site.compare(&om, &det_pieri(&cls, Field::Alpha), &det_generic_limit(&cls)))
        .fold(Outcome::default(), Outcome::merge)
}

/// `Det` against its alternating-sign-matrix expression on every e-strip.
pub fn check_det_asm(lam: &SuperPartition, n: u32) -> Result<Outcome, VerifyError> {
    let site = Site { check: "det-asm", lambda: lam, n, kind: "e" };
    let mut out = Outcome::default();
    for (om, cls) in strips(lam, n, StripKind::E) {
        let r = det_asm_identity(&cls)?;
        out = out.merge(site.compare(&om, &r.det, &r.asm_side));
    }
    Ok(out)
}

/// The rational identity behind the induction step, in `n` formal x's.
pub fn check_lemma(n: usize) -> Outcome {
    let (lhs, rhs) = lemma_identity(n);
    let empty = SuperPartition::empty();
    let site = Site { check: "lemma", lambda: &empty, n: n as u32, kind: "-" };
    site.compare("-", &lhs, &rhs)
}

/// Largest size at which [`check_det_d_prime`] also expands both
/// determinants; beyond it the expanded forms are too large to normalize.
pub const FULL_DET_MAX: usize = 2;

/// The generic-label determinant against `D′` on formal symbols: entry by
/// entry at every size, and as expanded determinants up to [`FULL_DET_MAX`].
pub fn check_det_d_prime(n: usize) -> Result<Outcome, VerifyError> {
    let empty = SuperPartition::empty();
    let site = Site { check: "det-dprime-entry", lambda: &empty, n: n as u32, kind: "-" };
    let mut out = Outcome::default();
    for (i, j, bracket, entry) in det_d_prime_entries(n)? {
        out = out.merge(site.compare(format!("({i},{j})"), &entry, &bracket));
    }
    if n <= FULL_DET_MAX {
        let (det, dp) = det_d_prime_symbolic(n)?;
        let site = Site { check: "det-dprime", lambda: &empty, n: n as u32, kind: "-" };
        out = out.merge(site.compare("-", &dp, &det));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(degree_range(1, 1).len(), 1 + 1 + 1 + 2);
        assert_eq!(total_range(1).len(), 3);
    }

    #[test]
    fn small_checks_pass() {
        for lam in degree_range(2, 1) {
            assert!(check_pieri(&lam, 1, StripKind::E).unwrap().passed());
            assert!(check_pieri(&lam, 1, StripKind::GTilde).unwrap().passed());
            assert!(check_commutators(&lam, 1).unwrap().passed());
        }
    }

    #[test]
    fn printed_transport_fails() {
        let lam: SuperPartition = "(0;)".parse().unwrap();
        assert!(!check_transport(&lam, 1, StripKind::G, Transport::Printed).unwrap().passed());
        assert!(check_transport(&lam, 1, StripKind::G, Transport::Inverted).unwrap().passed());
    }

    #[test]
    fn mismatch_report() {
        let lam: SuperPartition = "(0;)".parse().unwrap();
        let o = check_macdonald(&lam, 1, StripKind::E, TPower::Printed).unwrap();
        assert_eq!(o.mismatches[0].omega, "(0;1)");
        assert!(o.mismatches[0].to_string().starts_with("macdonald: ((0;), 1, e, (0;1))"));
    }
}
