//! Closed-form Pieri coefficients for Jack polynomials in superspace, their
//! duals, and the conjectured Macdonald analogue.

mod det;
mod hooks;
mod rule;

pub use det::{
    bracket, bracket_matrix, coincidence_prefactor, det_dual, det_dual_direct, det_generic_limit, det_pieri, generic_bracket,
    from_half_powers, generic_bracket_qt, label_value, lemma_identity, to_half_powers,
};
pub use hooks::{factor_a, factor_b, hooks, lower_hook, norm_squared, upper_hook, HookValue};
pub use rule::{
    col_cells, column_contribution, d_stat, dual_sign, phi, phi_conjugate, psi_prime, row_contribution, sign_exponent, strip_sign,
    Contribution,
};

use serde::Serialize;

use crate::coeffield::params::v;
use crate::coeffield::RatFunc;
use crate::orthobasis::Field;
use crate::superpartitions::{strips, StripKind, SuperPartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PieriError {
    #[error("{0} requires n ≥ 1")]
    OutOfRange(StripKind),
    #[error("no (q,t) rule is available for {0}")]
    NoQtRule(StripKind),
}

/// One coefficient `Λ → Ω` with its factors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PieriCoefficient {
    pub omega: SuperPartition,
    pub sign: i32,
    pub psi: RatFunc,
    pub det: RatFunc,
    /// The `d` statistic; present in the `(q,t)` case only.
    pub d: Option<i64>,
    pub total: RatFunc,
}

/// All coefficients of `f·P_Λ` for `f` one of `e_n`, `ẽ_n`, `g_n`, `g̃_n`,
/// sorted decreasingly by `Ω`. In the `(q,t)` case the values are in
/// `u = q^{1/2}`, `v = t^{1/2}`.
pub fn pieri(lam: &SuperPartition, n: u32, kind: StripKind, field: Field) -> Result<Vec<PieriCoefficient>, PieriError> {
    if n == 0 && !kind.is_tilde() {
        return Err(PieriError::OutOfRange(kind));
    }
    if field == Field::QT && !kind.is_vertical() {
        return Err(PieriError::NoQtRule(kind));
    }
    let mut out = Vec::new();
    for (om, cls) in strips(lam, n, kind) {
        let coeff = if kind.is_vertical() {
            let sign = strip_sign(&cls, false);
            let mut psi = psi_prime(&cls, lam, &om, field);
            let det = det_pieri(&cls, field);
            let (d, total) = match field {
                Field::Alpha => (None, &psi * &det),
                Field::QT => {
                    psi = to_half_powers(&psi);
                    let d = d_stat(&cls);
                    (Some(d), &(&psi * &det) * &v().pow(2 * d as i32))
                }
            };
            PieriCoefficient {
                omega: om.clone(),
                sign,
                psi,
                det,
                d,
                total: total.scale_int(sign as i64),
            }
        } else {
            let sign = dual_sign(lam, &om);
            let psi = phi_conjugate(lam, &om);
            let det = det_dual(lam, &om);
            let total = (&psi * &det).scale_int(sign as i64);
            PieriCoefficient {
                omega: om.clone(),
                sign,
                psi,
                det,
                d: None,
                total,
            }
        };
        out.push(coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::parse;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn from_empty() {
        for n in 1..4 {
            let c = pieri(&sp("(;)"), n, StripKind::E, Field::Alpha).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c[0].omega, SuperPartition::from_parts(&[], &vec![1; n as usize]).unwrap());
            assert!(c[0].total.is_one());
        }
    }

    #[test]
    fn large_example() {
        let c = pieri(&sp("(6,4,3;5,2,1)"), 3, StripKind::E, Field::Alpha).unwrap();
        let target = sp("(5,2,0;7,5,4,1)");
        let got = c.iter().find(|x| x.omega == target).unwrap();
        let want = parse(
            "(1/1152)*a^4*(2*a+3)*(3*a+4)*(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)\
             /((4*a+3)*(5*a+4)*(7*a+6)*(2*a+1)*(a+1)^10)",
        )
        .unwrap();
        assert_eq!(got.total, want);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(pieri(&sp("(;)"), 0, StripKind::E, Field::Alpha).is_err());
        assert!(pieri(&sp("(;)"), 1, StripKind::G, Field::QT).is_err());
    }
}
