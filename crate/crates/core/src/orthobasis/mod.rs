//! Jack and Macdonald polynomials in superspace, built by orthogonalizing the
//! monomial basis along the dominance order, together with the closed-form
//! actions of `ẽ₀`, `Q̃` and `q⊥` and the duality `ω̂_α`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::coeffield::params::alpha;
use crate::coeffield::{RatFunc, Var};
use crate::pieri::{col_cells, factor_a, factor_b, sign_exponent};
use crate::superalgebra::tables::transition;
use crate::superalgebra::{Basis, SymSuperFunc};
use crate::superpartitions::{cell_kinds, strips, CellKind, Partition, StripKind, SuperPartition};

/// Coefficient field of a family: `Q(α)` for Jack, `Q(q,t)` for Macdonald.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Alpha,
    QT,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Alpha => "alpha",
            Field::QT => "qt",
        }
    }

    pub fn parse(s: &str) -> Option<Field> {
        match s {
            "alpha" => Some(Field::Alpha),
            "qt" => Some(Field::QT),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrthoError {
    #[error("P_{0} has zero norm; the scalar product is degenerate")]
    Singular(SuperPartition),
}

/// `P_Λ` in the monomial and power-sum bases, with its norm.
#[derive(Clone, Debug)]
pub struct JackExpansion {
    pub lambda: SuperPartition,
    pub field: Field,
    pub m: SymSuperFunc,
    pub p: SymSuperFunc,
    /// `⟨⟨P_Λ, P_Λ⟩⟩`.
    pub norm: RatFunc,
}

impl Serialize for JackExpansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Entry<'a> {
            sp: String,
            c: &'a RatFunc,
        }
        let coeffs: Vec<Entry> = self
            .m
            .coeffs()
            .iter()
            .rev()
            .map(|(l, c)| Entry { sp: l.to_string(), c })
            .collect();
        let mut st = serializer.serialize_struct("JackExpansion", 3)?;
        st.serialize_field("lambda", &self.lambda.to_string())?;
        st.serialize_field("basis", "m")?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

type Cache = LazyLock<RwLock<HashMap<(SuperPartition, Field), Arc<JackExpansion>>>>;

static CACHE: Cache = LazyLock::new(Default::default);

/// Jack polynomial `P_Λ^{(α)}`.
pub fn jack(lam: &SuperPartition) -> Result<Arc<JackExpansion>, OrthoError> {
    orthogonal(lam, Field::Alpha)
}

/// Macdonald polynomial `P_Λ^{(q,t)}`.
pub fn macdonald(lam: &SuperPartition) -> Result<Arc<JackExpansion>, OrthoError> {
    orthogonal(lam, Field::QT)
}

fn scalar(f: &SymSuperFunc, g: &SymSuperFunc, field: Field) -> RatFunc {
    match field {
        Field::Alpha => f.scalar_alpha(g),
        Field::QT => f.scalar_qt(g),
    }
}

/// `P_Λ = m_Λ − Σ_{Γ<Λ} ⟨⟨m_Λ, P_Γ⟩⟩/⟨⟨P_Γ, P_Γ⟩⟩ · P_Γ`.
pub fn orthogonal(lam: &SuperPartition, field: Field) -> Result<Arc<JackExpansion>, OrthoError> {
    let key = (lam.clone(), field);
    if let Some(j) = CACHE.read().unwrap().get(&key) {
        return Ok(j.clone());
    }
    let tr = transition(lam.n(), lam.m());
    let m_lam = SymSuperFunc::basis_element(Basis::M, lam.clone());
    let row = &tr.m2p[tr.index[lam]];
    let m_lam_p = SymSuperFunc::from_coeffs(
        Basis::P,
        row.iter()
            .enumerate()
            .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
            .map(|(j, x)| (tr.basis[j].clone(), RatFunc::from_rational(x))),
    );
    let mut pm = m_lam;
    let mut pp = m_lam_p.clone();
    for g in tr.basis.iter().filter(|g| *g != lam && g.dominated_by(lam)) {
        let j = orthogonal(g, field)?;
        let c = &scalar(&m_lam_p, &j.p, field) / &j.norm;
        if c.is_zero() {
            continue;
        }
        pm = pm.sub(&j.m.scale(&c));
        pp = pp.sub(&j.p.scale(&c));
    }
    let norm = scalar(&pp, &pp, field);
    if norm.is_zero() {
        return Err(OrthoError::Singular(lam.clone()));
    }
    let j = Arc::new(JackExpansion {
        lambda: lam.clone(),
        field,
        m: pm,
        p: pp,
        norm,
    });
    Ok(CACHE.write().unwrap().entry(key).or_insert(j).clone())
}

/// Coefficients of `f` in the basis `{P_Ω}` of the given family, found by
/// peeling off the largest monomial repeatedly.
pub fn expand_in_orthogonal(f: &SymSuperFunc, field: Field) -> Result<BTreeMap<SuperPartition, RatFunc>, OrthoError> {
    let mut rest = f.to_m();
    let mut out = BTreeMap::new();
    while let Some((top, c)) = rest.coeffs().iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        let j = orthogonal(&top, field)?;
        rest = rest.sub(&j.m.scale(&c));
        out.insert(top, c);
    }
    Ok(out)
}

/// Substitutes `α ↦ value` in every coefficient.
pub fn substitute_alpha(f: &SymSuperFunc, value: &RatFunc) -> SymSuperFunc {
    let a = Var::of("a");
    SymSuperFunc::from_coeffs(
        f.basis(),
        f.coeffs()
            .iter()
            .map(|(l, c)| (l.clone(), c.subs(a, value).expect("α substitution"))),
    )
}

/// `P_Λ^{(1/α)}` in the monomial basis.
pub fn jack_inverse_alpha(lam: &SuperPartition) -> Result<SymSuperFunc, OrthoError> {
    Ok(substitute_alpha(&jack(lam)?.m, &alpha().inv()))
}

/// `ω̂`: `p_n ↦ (−1)^{n−1} c p_n`, `p̃_ℓ ↦ (−1)^ℓ c p̃_ℓ`, extended
/// multiplicatively; `c` is α or 1/α.
pub fn omega_hat(f: &SymSuperFunc, c: &RatFunc) -> SymSuperFunc {
    let f = f.to_p();
    SymSuperFunc::from_coeffs(
        Basis::P,
        f.coeffs().iter().map(|(l, x)| {
            let flips: u32 = l.a_parts().iter().sum::<u32>() + l.s_parts().iter().map(|s| s - 1).sum::<u32>();
            let w = &c.pow(l.length() as i32) * x;
            (l.clone(), if flips.is_multiple_of(2) { w } else { -w })
        }),
    )
}

fn signed(e: usize, x: RatFunc) -> RatFunc {
    if e.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// `ẽ₀ P_Λ = Σ_Ω (−1)^{#(Ω/Λ)} Π_{s∈col} A(s) · P_Ω` over `Ω` with one new circle.
pub fn apply_e0tilde(lam: &SuperPartition) -> BTreeMap<SuperPartition, RatFunc> {
    circle_action(lam, |_| RatFunc::one())
}

/// `Q̃ = Σ θ_i z_i ∂/∂z_i`: as `ẽ₀` with the extra factor
/// `(1−i+α(j−1))/α` for the new circle at `(i,j)`.
pub fn apply_qtilde(lam: &SuperPartition) -> BTreeMap<SuperPartition, RatFunc> {
    circle_action(lam, |(i, j)| {
        let lin = &RatFunc::int(1 - i as i64) + &alpha().scale_int(j as i64 - 1);
        &lin / &alpha()
    })
}

fn circle_action(lam: &SuperPartition, extra: impl Fn((u32, u32)) -> RatFunc) -> BTreeMap<SuperPartition, RatFunc> {
    let mut out = BTreeMap::new();
    for (om, cls) in strips(lam, 0, StripKind::ETilde) {
        let circle = cls.cells_of(CellKind::NewCircle)[0];
        let mut c: RatFunc = col_cells(lam, &cls.cells)
            .into_iter()
            .map(|s| factor_a(lam, &om, s, Field::Alpha))
            .product();
        c = &c * &extra((circle.row, circle.col));
        let c = signed(sign_exponent(&cls.cells, false), c);
        if !c.is_zero() {
            out.insert(om, c);
        }
    }
    out
}

/// `q⊥ = Σ z_i ∂/∂θ_i`: `q⊥ P_Λ = Σ_Ω (−1)^{#(Ω/Λ)} Π_{s∈col} B(s) · P_Ω`
/// over `Ω` obtained by turning one circle of `Λ` into a square.
pub fn apply_qperp(lam: &SuperPartition) -> BTreeMap<SuperPartition, RatFunc> {
    let mut out = BTreeMap::new();
    for circle in lam.circles() {
        let mut star: Vec<u32> = lam.star().parts().to_vec();
        let r = circle.row as usize;
        if star.len() < r {
            star.resize(r, 0);
        }
        star[r - 1] += 1;
        let Some(star) = Partition::new(star) else { continue };
        let Ok(om) = SuperPartition::from_diagrams(star, lam.circled().clone()) else {
            continue;
        };
        let cells = cell_kinds(lam, &om).expect("same circled diagram");
        let c: RatFunc = col_cells(lam, &cells)
            .into_iter()
            .map(|s| factor_b(lam, &om, s, Field::Alpha))
            .product();
        out.insert(om, signed(sign_exponent(&cells, false), c));
    }
    out
}

/// `‖P_Ω‖²/‖P_Λ‖²` from the closed norm formula.
pub fn norm_ratio(lam: &SuperPartition, om: &SuperPartition) -> RatFunc {
    &crate::pieri::norm_squared(om) / &crate::pieri::norm_squared(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::parse;
    use crate::superalgebra::Generator;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_heads() {
        for k in 1..4 {
            let e = SymSuperFunc::generator(Generator::E, k).unwrap();
            let lam = SuperPartition::from_parts(&[], &vec![1; k as usize]).unwrap();
            assert_eq!(jack(&lam).unwrap().m, e);
            let et = SymSuperFunc::generator(Generator::ETilde, k).unwrap();
            let lam = SuperPartition::from_parts(&[0], &vec![1; k as usize]).unwrap();
            assert_eq!(jack(&lam).unwrap().m, et);
        }
    }

    #[test]
    fn one_row_jack() {
        let j = jack(&sp("(;2)")).unwrap();
        assert_eq!(j.m.coefficient(&sp("(;1,1)")), parse("2/(a+1)").unwrap());
    }

    #[test]
    fn orthogonality() {
        for lam in crate::superpartitions::enumerate_superpartitions(3, 1) {
            for om in crate::superpartitions::enumerate_superpartitions(3, 1) {
                if lam != om {
                    let (a, b) = (jack(&lam).unwrap(), jack(&om).unwrap());
                    assert!(a.p.scalar_alpha(&b.p).is_zero(), "{lam} {om}");
                }
            }
        }
    }

    #[test]
    fn operator_examples() {
        let e0 = apply_e0tilde(&sp("(;)"));
        assert_eq!(e0, BTreeMap::from([(sp("(0;)"), RatFunc::one())]));
        assert!(apply_qtilde(&sp("(;)")).is_empty());
        assert!(apply_qperp(&sp("(;1)")).is_empty());
        assert_eq!(apply_qperp(&sp("(0;)")).len(), 1);
    }

    #[test]
    fn omega_hat_generators() {
        let p2 = SymSuperFunc::generator(Generator::P, 2).unwrap();
        assert_eq!(omega_hat(&p2, &alpha()), p2.scale(&-alpha()));
        let g2 = SymSuperFunc::generator(Generator::G, 2).unwrap();
        assert_eq!(omega_hat(&g2, &alpha()).to_m(), SymSuperFunc::generator(Generator::E, 2).unwrap());
    }
}
