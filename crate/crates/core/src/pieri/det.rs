use std::collections::HashMap;

use crate::coeffield::params::{alpha, eps, u, v};
use crate::coeffield::{determinant, Poly, RatFunc, Var};
use crate::orthobasis::Field;
use crate::superpartitions::{classify_strip, Cell, LabelRelation, StripClassification, SuperPartition};

/// Value of a label on the cell `(a, b)`: `αb − a`, or the monomial
/// `q^{b/2} t^{−a/2} = u^b v^{−a}` in the `(q,t)` case.
pub fn label_value(c: Cell, field: Field) -> RatFunc {
    match field {
        Field::Alpha => &alpha().scale_int(c.col as i64) - &RatFunc::int(c.row as i64),
        Field::QT => &u().pow(c.col as i32) * &v().pow(-(c.row as i32)),
    }
}

/// `α/((x−y+α)(x−y))` for label values `x`, `y`.
pub fn generic_bracket(x: &RatFunc, y: &RatFunc) -> RatFunc {
    let d = x - y;
    &alpha() / &(&(&d + &alpha()) * &d)
}

/// `(t−1)(q^{1/2}−q^{−1/2}) / ((T−T^{−1})(q^{1/2}T − q^{−1/2}T^{−1}))` with
/// `T = t^{(x−y)/2}` given as the quotient of the label monomials.
pub fn generic_bracket_qt(x: &RatFunc, y: &RatFunc) -> RatFunc {
    let tt = x / y;
    let one = RatFunc::one();
    let num = &(&v().pow(2) - &one) * &(&u() - &u().inv());
    let ut = &u() * &tt;
    let den = &(&tt - &tt.inv()) * &(&ut - &ut.inv());
    &num / &den
}

/// `[x;y]`: the generic value when no y label shares the x label's line, 1
/// when the two labels share it, 0 when another y label does.
pub fn bracket(x: Cell, y: Cell, rel: LabelRelation, field: Field) -> RatFunc {
    match rel {
        LabelRelation::Same => RatFunc::one(),
        LabelRelation::Other => RatFunc::zero(),
        LabelRelation::None => {
            let (xv, yv) = (label_value(x, field), label_value(y, field));
            match field {
                Field::Alpha => generic_bracket(&xv, &yv),
                Field::QT => generic_bracket_qt(&xv, &yv),
            }
        }
    }
}

/// Rows `[x_i; y_j]`, preceded by a row of ones when there is one more y
/// label than x labels.
pub fn bracket_matrix(cls: &StripClassification, field: Field) -> Vec<Vec<RatFunc>> {
    let (nx, ny) = (cls.xlabels.len(), cls.ylabels.len());
    let mut rows = Vec::with_capacity(ny);
    if ny > nx {
        rows.push(vec![RatFunc::one(); ny]);
    }
    for i in 0..nx {
        rows.push(
            (0..ny)
                .map(|j| bracket(cls.xlabels[i], cls.ylabels[j], cls.relation(i, j), field))
                .collect(),
        );
    }
    rows
}

/// `Det_{Ω/Λ}` of a vertical strip.
pub fn det_pieri(cls: &StripClassification, field: Field) -> RatFunc {
    let m = bracket_matrix(cls, field);
    if m.is_empty() {
        return RatFunc::one();
    }
    determinant(&m)
}

pub(crate) fn invert_alpha(x: &RatFunc) -> RatFunc {
    x.subs(Var::of("a"), &alpha().inv()).expect("α ↦ 1/α keeps denominators nonzero")
}

/// `Det′_{Ω/Λ} = Det_{Ω′/Λ′}(1/α)`, times α when `Ω` gains a circle.
pub fn det_dual(lam: &SuperPartition, om: &SuperPartition) -> RatFunc {
    let cls = classify_strip(&lam.conjugate(), &om.conjugate()).expect("conjugate of a horizontal strip is vertical");
    let d = invert_alpha(&det_pieri(&cls, Field::Alpha));
    if om.m() > lam.m() {
        &d * &alpha()
    } else {
        d
    }
}

/// `Det′` written directly on `Ω/Λ`: labels read bottom to top (left to
/// right) with their ordinary values, entries `α/((y_j−x_i+1)(y_j−x_i))`
/// off the shared-column cases and a top row of α's when `Ω` gains a circle.
pub fn det_dual_direct(cls: &StripClassification) -> RatFunc {
    let (nx, ny) = (cls.xlabels.len(), cls.ylabels.len());
    let mut rows = Vec::new();
    if ny > nx {
        rows.push(vec![alpha(); ny]);
    }
    for i in 0..nx {
        rows.push(
            (0..ny)
                .map(|j| match cls.relation(i, j) {
                    LabelRelation::Same => RatFunc::one(),
                    LabelRelation::Other => RatFunc::zero(),
                    LabelRelation::None => {
                        let x = label_value(cls.xlabels[i], Field::Alpha);
                        let y = label_value(cls.ylabels[j], Field::Alpha);
                        let d = &y - &x;
                        &alpha() / &(&(&d + &RatFunc::one()) * &d)
                    }
                })
                .collect(),
        );
    }
    if rows.is_empty() {
        return RatFunc::one();
    }
    determinant(&rows)
}

/// `Det` as the limit of the all-generic determinant: every x label is
/// shifted by ε, the generic matrix is multiplied by `(y−x−α)` for each x
/// label left-adjacent to a y label and by `(x−y)` for each x label sharing
/// its cell with a y label, and ε is set to 0.
pub fn det_generic_limit(cls: &StripClassification) -> RatFunc {
    let (nx, ny) = (cls.xlabels.len(), cls.ylabels.len());
    let xs: Vec<RatFunc> = cls
        .xlabels
        .iter()
        .map(|c| &label_value(*c, Field::Alpha) + &eps())
        .collect();
    let ys: Vec<RatFunc> = cls.ylabels.iter().map(|c| label_value(*c, Field::Alpha)).collect();
    let mut rows = Vec::new();
    if ny > nx {
        rows.push(vec![RatFunc::one(); ny]);
    }
    for x in &xs {
        rows.push(ys.iter().map(|y| generic_bracket(x, y)).collect());
    }
    if rows.is_empty() {
        return RatFunc::one();
    }
    let prefactor = coincidence_prefactor(cls, &xs, &ys);
    let full = &prefactor * &determinant(&rows);
    full.subs(Var::of("eps"), &RatFunc::zero())
        .expect("the limit exists")
}

/// `Π (y_j−x_i−α)` over x labels left-adjacent to a y label times
/// `Π (x_i−y_j)` over x labels sharing their cell with a y label, evaluated
/// at the given label values.
pub fn coincidence_prefactor(cls: &StripClassification, xs: &[RatFunc], ys: &[RatFunc]) -> RatFunc {
    let mut prefactor = RatFunc::one();
    for (i, xc) in cls.xlabels.iter().enumerate() {
        for (j, yc) in cls.ylabels.iter().enumerate() {
            if xc.row != yc.row {
                continue;
            }
            if xc.col + 1 == yc.col {
                prefactor = &prefactor * &(&(&ys[j] - &xs[i]) - &alpha());
            } else if xc == yc {
                prefactor = &prefactor * &(&xs[i] - &ys[j]);
            }
        }
    }
    prefactor
}

/// Checks, symbolically in `x_1..x_n`, `y` and `α`,
/// `(1−(y+1−α)/α) Π (x_i−y+α−1)/(x_i−y+α) + ((y+1−α)/α) Π (x_i−y−1)/(x_i−y)
///  = 1 − Σ_i [x_i;y] ((x_i+1−α)/α) Π_{k≠i} (x_k−x_i−1)/(x_k−x_i)`.
/// Returns both sides.
pub fn lemma_identity(n: usize) -> (RatFunc, RatFunc) {
    let a = alpha();
    let one = RatFunc::one();
    let y = RatFunc::sym("y");
    let xs: Vec<RatFunc> = (1..=n).map(|i| RatFunc::sym(&format!("x{i}"))).collect();
    let w = &(&(&y + &one) - &a) / &a;
    let mut p1 = RatFunc::one();
    let mut p2 = RatFunc::one();
    for x in &xs {
        let d = x - &y;
        p1 = &p1 * &(&(&(&d + &a) - &one) / &(&d + &a));
        p2 = &p2 * &(&(&d - &one) / &d);
    }
    let lhs = &(&(&one - &w) * &p1) + &(&w * &p2);
    let mut sum = RatFunc::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut term = &generic_bracket(xi, &y) * &(&(&(xi + &one) - &a) / &a);
        for (k, xk) in xs.iter().enumerate() {
            if k != i {
                let d = xk - xi;
                term = &term * &(&(&d - &one) / &d);
            }
        }
        sum = &sum + &term;
    }
    (lhs, &one - &sum)
}

/// Substitutes `q = u²`, `t = v²`.
pub fn to_half_powers(x: &RatFunc) -> RatFunc {
    let b = HashMap::from([(Var::of("q"), u().pow(2)), (Var::of("t"), v().pow(2))]);
    x.substitute(&b).expect("monomial substitution")
}

/// Inverse of [`to_half_powers`]: `u^{2k} ↦ q^k`, `v^{2k} ↦ t^k`, or `None`
/// when some power of `u` or `v` is odd.
pub fn from_half_powers(x: &RatFunc) -> Option<RatFunc> {
    let halve = |p: &Poly| -> Option<Poly> {
        let (uu, vv, q, t) = (Var::of("u"), Var::of("v"), Var::of("q"), Var::of("t"));
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let (eu, ev) = (m.exp(uu), m.exp(vv));
            if eu % 2 == 1 || ev % 2 == 1 {
                return None;
            }
            let mut m = *m;
            m.set_exp(uu, 0);
            m.set_exp(vv, 0);
            m.set_exp(q, m.exp(q) + eu / 2);
            m.set_exp(t, m.exp(t) + ev / 2);
            terms.push((m, c.clone()));
        }
        Some(Poly::from_terms(terms))
    };
    Some(RatFunc::new(halve(x.num())?, halve(x.den())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::parse;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn half_powers_round_trip() {
        let x = parse("(q*t^2-1)/(q-t)").unwrap();
        assert_eq!(from_half_powers(&to_half_powers(&x)), Some(x));
        assert_eq!(from_half_powers(&u()), None);
    }

    #[test]
    fn bracket_example() {
        let b = bracket(Cell::new(1, 7), Cell::new(2, 6), LabelRelation::None, Field::Alpha);
        assert_eq!(b, parse("a/((2*a+1)*(a+1))").unwrap());
    }

    #[test]
    fn example_matrix_value() {
        // x1 = y2 share a new square, x2 is left of y3.
        let cls = classify_strip(&sp("(2,0;6,5,1)"), &sp("(6,3;6,1,1)")).unwrap();
        let d = det_pieri(&cls, Field::Alpha);
        assert_eq!(d, parse("a/((5*a+4)*(6*a+4))").unwrap());
        assert_eq!(det_generic_limit(&cls), d);
    }

    #[test]
    fn lemma_small() {
        for n in 1..=2 {
            let (l, r) = lemma_identity(n);
            assert_eq!(l, r);
        }
    }
}
