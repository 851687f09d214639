use crate::coeffield::params::{alpha, q, t};
use crate::coeffield::RatFunc;
use crate::orthobasis::Field;
use crate::superpartitions::{Cell, SuperPartition, SuperPartitionError};

/// Upper and lower hook-lengths of a cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookValue {
    pub upper: RatFunc,
    pub lower: RatFunc,
}

fn power(x: &RatFunc, e: i64) -> RatFunc {
    x.pow(e as i32)
}

/// `h_Λ(s)`: `ℓ_{Λ^⊛}(s) + α(a_{Λ^*}(s)+1)`, or `1 − t^{ℓ_{Λ^⊛}(s)} q^{a_{Λ^*}(s)+1}`.
pub fn upper_hook(lam: &SuperPartition, s: Cell, field: Field) -> RatFunc {
    let leg = lam.circled().leg(s);
    let arm = lam.star().arm(s) + 1;
    match field {
        Field::Alpha => &RatFunc::int(leg) + &alpha().scale_int(arm),
        Field::QT => &RatFunc::one() - &(&power(&t(), leg) * &power(&q(), arm)),
    }
}

/// `h^Λ(s)`: `ℓ_{Λ^*}(s) + 1 + α a_{Λ^⊛}(s)`, or `1 − t^{ℓ_{Λ^*}(s)+1} q^{a_{Λ^⊛}(s)}`;
/// off `Λ^*` it is 1, or `1 − t` in the `(q,t)` case.
pub fn lower_hook(lam: &SuperPartition, s: Cell, field: Field) -> RatFunc {
    if !lam.star().contains(s) {
        return match field {
            Field::Alpha => RatFunc::one(),
            Field::QT => &RatFunc::one() - &t(),
        };
    }
    let leg = lam.star().leg(s) + 1;
    let arm = lam.circled().arm(s);
    match field {
        Field::Alpha => &RatFunc::int(leg) + &alpha().scale_int(arm),
        Field::QT => &RatFunc::one() - &(&power(&t(), leg) * &power(&q(), arm)),
    }
}

pub fn hooks(lam: &SuperPartition, s: Cell, field: Field) -> Result<HookValue, SuperPartitionError> {
    if !lam.circled().contains(s) {
        return Err(SuperPartitionError::CellOutside(s));
    }
    Ok(HookValue {
        upper: upper_hook(lam, s, field),
        lower: lower_hook(lam, s, field),
    })
}

/// `A = h_Λ(s)/h_Ω(s)`.
pub fn factor_a(lam: &SuperPartition, om: &SuperPartition, s: Cell, field: Field) -> RatFunc {
    &upper_hook(lam, s, field) / &upper_hook(om, s, field)
}

/// `B = h^Ω(s)/h^Λ(s)`.
pub fn factor_b(lam: &SuperPartition, om: &SuperPartition, s: Cell, field: Field) -> RatFunc {
    &lower_hook(om, s, field) / &lower_hook(lam, s, field)
}

/// `‖P_Λ‖² = (−1)^{m(m−1)/2} α^m Π_{s∈Λ^*} h_Λ(s)/h^Λ(s)`.
pub fn norm_squared(lam: &SuperPartition) -> RatFunc {
    let m = lam.m();
    let mut out = alpha().pow(m as i32);
    for s in lam.star().cells() {
        out = &out * &(&upper_hook(lam, s, Field::Alpha) / &lower_hook(lam, s, Field::Alpha));
    }
    if (m * m.saturating_sub(1) / 2) % 2 == 1 {
        out = -out;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn single_cell() {
        let h = hooks(&sp("(;1)"), Cell::new(1, 1), Field::Alpha).unwrap();
        assert_eq!((h.upper, h.lower), (alpha(), RatFunc::one()));
        let h = hooks(&sp("(;1)"), Cell::new(1, 1), Field::QT).unwrap();
        assert_eq!(h.upper, &RatFunc::one() - &q());
        assert_eq!(h.lower, &RatFunc::one() - &t());
        let h = hooks(&sp("(0;1)"), Cell::new(1, 1), Field::Alpha).unwrap();
        assert_eq!(h.upper, &RatFunc::one() + &alpha());
        assert!(hooks(&sp("(;1)"), Cell::new(2, 1), Field::Alpha).is_err());
    }

    #[test]
    fn small_norms() {
        assert_eq!(norm_squared(&sp("(0;)")), alpha());
        assert_eq!(norm_squared(&sp("(;1)")), alpha());
    }
}
