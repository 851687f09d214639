use std::collections::HashMap;

use proptest::prelude::*;
use superjack::coeffield::params::{alpha, q, t};
use superjack::coeffield::{determinant, determinant_cofactor, leading_sign, RatFunc, Var};
use superjack::sixvertex::{enumerate_asm, Asm};
use superjack::superpartitions::{enumerate_superpartitions, strips, StripKind, SuperPartition};

fn small_poly() -> impl Strategy<Value = RatFunc> {
    (prop::collection::vec(-4i64..=4, 1..4), prop::collection::vec(-3i64..=3, 0..3), 0i32..3).prop_map(
        |(ca, cq, et)| {
            let a = ca
                .iter()
                .enumerate()
                .fold(RatFunc::zero(), |acc, (k, &c)| &acc + &alpha().pow(k as i32).scale_int(c));
            let b = cq
                .iter()
                .enumerate()
                .fold(RatFunc::zero(), |acc, (k, &c)| &acc + &(&q().pow(k as i32) * &t()).scale_int(c));
            &(&a + &b) * &t().pow(et)
        },
    )
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_poly(), small_poly()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

fn superpartition() -> impl Strategy<Value = SuperPartition> {
    let all: Vec<SuperPartition> = (0..=6).flat_map(|n| (0..=3).flat_map(move |m| enumerate_superpartitions(n, m))).collect();
    prop::sample::select(all)
}

fn kind() -> impl Strategy<Value = StripKind> {
    prop::sample::select(vec![StripKind::E, StripKind::ETilde, StripKind::G, StripKind::GTilde])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_text_round_trip(x in ratfunc()) {
        let back: RatFunc = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn ratfunc_canonical_denominator(x in ratfunc()) {
        prop_assert_eq!(leading_sign(&RatFunc::from_poly(x.den().clone())), 1);
    }

    #[test]
    fn ratfunc_field_laws(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(x in ratfunc(), y in ratfunc(), k in 2i64..6) {
        let b = HashMap::from([(Var::of("a"), RatFunc::int(k)), (Var::of("q"), &alpha() + &RatFunc::int(k))]);
        if let (Ok(sx), Ok(sy), Ok(sxy), Ok(sx_y)) =
            (x.substitute(&b), y.substitute(&b), (&x * &y).substitute(&b), (&x + &y).substitute(&b))
        {
            prop_assert_eq!(sxy, &sx * &sy);
            prop_assert_eq!(sx_y, &sx + &sy);
        }
    }

    #[test]
    fn determinant_matches_cofactor(entries in prop::collection::vec(ratfunc(), 9)) {
        let m: Vec<Vec<RatFunc>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        prop_assert_eq!(determinant(&m), determinant_cofactor(&m));
    }

    #[test]
    fn conjugation_is_an_involution(l in superpartition()) {
        let c = l.conjugate();
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!((c.n(), c.m()), (l.n(), l.m()));
    }

    #[test]
    fn superpartition_text_and_json_round_trip(l in superpartition()) {
        let back: SuperPartition = l.to_string().parse().unwrap();
        prop_assert_eq!(&back, &l);
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<SuperPartition>(&json).unwrap(), l);
    }

    #[test]
    fn conjugation_reverses_dominance(l in superpartition(), o in superpartition()) {
        prop_assert_eq!(l.dominated_by(&o), o.conjugate().dominated_by(&l.conjugate()));
    }

    #[test]
    fn strips_have_the_generator_degree(l in superpartition(), k in kind(), n in 0u32..3) {
        prop_assume!(n > 0 || k.is_tilde());
        for (om, cls) in strips(&l, n, k) {
            prop_assert_eq!(om.n(), l.n() + n);
            prop_assert_eq!(om.m(), l.m() + k.is_tilde() as usize);
            prop_assert!(l.star().is_contained_in(om.star()));
            prop_assert!(l.circled().is_contained_in(om.circled()));
            prop_assert_eq!(cls.kind, k);
        }
    }

    #[test]
    fn strips_conjugate_between_e_and_g(l in superpartition(), n in 1u32..3, tilde in any::<bool>()) {
        let (e, g) = if tilde { (StripKind::ETilde, StripKind::GTilde) } else { (StripKind::E, StripKind::G) };
        let mut via_g: Vec<SuperPartition> = strips(&l, n, g).into_iter().map(|(o, _)| o.conjugate()).collect();
        let mut via_e: Vec<SuperPartition> = strips(&l.conjugate(), n, e).into_iter().map(|(o, _)| o).collect();
        via_g.sort();
        via_e.sort();
        prop_assert_eq!(via_g, via_e);
    }
}

#[test]
fn asms_are_valid_and_counted() {
    let counts = [1, 1, 2, 7, 42, 429];
    for (n, &count) in counts.iter().enumerate() {
        let all = enumerate_asm(n);
        assert_eq!(all.len(), count);
        for a in &all {
            assert_eq!(Asm::new(a.entries().to_vec()).as_ref(), Some(a));
            for i in 0..n {
                assert_eq!(a.entries()[i].iter().map(|&x| x as i32).sum::<i32>(), 1);
                assert_eq!((0..n).map(|k| a.entry(k, i) as i32).sum::<i32>(), 1);
            }
        }
    }
}
