//! Acceptance criteria 1–10. Each criterion writes one PASS/FAIL line to
//! stderr. Two criteria have outcomes that differ from the stated expectation
//! (see the README); the test asserts those documented outcomes rather than
//! hiding them.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use superjack::coeffield::params::alpha;
use superjack::coeffield::{parse, parse_list};
use superjack::orthobasis::Field;
use superjack::pieri::pieri;
use superjack::sixvertex::{asm_sum, Flavor, SpectralData};
use superjack::superpartitions::{StripKind, SuperPartition};
use superjack::verify::*;

struct Line {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn report(id: u32, title: &'static str, start: Instant, pass: bool, detail: String) -> Line {
    // Written to stderr directly so the lines survive output capture.
    let line = format!(
        "criterion {id:>2} {} {title}: {detail} [{:.1}s]\n",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    std::io::stderr().write_all(line.as_bytes()).expect("stderr is writable");
    Line { id, title, pass, detail }
}

fn summary(o: &Outcome) -> String {
    match o.mismatches.first() {
        None => format!("{} checks", o.checked),
        Some(m) => format!("{} of {} checks differ; first {m}", o.mismatches.len(), o.checked),
    }
}

fn fold(parts: Vec<Outcome>) -> Outcome {
    parts.into_iter().fold(Outcome::default(), Outcome::merge).sorted()
}

fn sweep(
    lams: &[SuperPartition],
    kinds: &[StripKind],
    max_n: u32,
    f: impl Fn(&SuperPartition, u32, StripKind) -> Outcome + Sync,
) -> Outcome {
    let tasks: Vec<(&SuperPartition, u32, StripKind)> = lams
        .iter()
        .flat_map(|l| kinds.iter().flat_map(move |&k| n_values(k, max_n).map(move |n| (l, n, k))))
        .collect();
    fold(tasks.par_iter().map(|&(l, n, k)| f(l, n, k)).collect())
}

fn criterion_1() -> Line {
    let t = Instant::now();
    let lam: SuperPartition = "(6,4,3;5,2,1)".parse().unwrap();
    let target: SuperPartition = "(5,2,0;7,5,4,1)".parse().unwrap();
    let want = parse(
        "(1/1152)*a^4*(2*a+3)*(3*a+4)*(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)\
         /((4*a+3)*(5*a+4)*(7*a+6)*(2*a+1)*(a+1)^10)",
    )
    .unwrap();
    let got = pieri(&lam, 3, StripKind::E, Field::Alpha)
        .unwrap()
        .into_iter()
        .find(|c| c.omega == target);
    let pass = got.as_ref().is_some_and(|c| c.total.to_string() == want.to_string());
    report(1, "large Pieri coefficient", t, pass, format!("total {}", got.map(|c| c.total.to_string()).unwrap_or_default()))
}

fn criterion_2() -> Line {
    let t = Instant::now();
    let data = SpectralData::new(
        parse_list("7a-1,5a-3,4a-4").unwrap(),
        parse_list("6a-2,3a-5,a-7").unwrap(),
        alpha(),
    )
    .unwrap();
    let s = asm_sum(&data, Flavor::Alpha);
    let want = parse("-(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)/a^6").unwrap();
    report(2, "ASM sum", t, s == want, format!("sum {s}"))
}

fn criterion_3(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let o = sweep(range, &[StripKind::E, StripKind::ETilde], 2, |l, n, k| check_pieri(l, n, k).unwrap());
    report(3, "Pieri rules against the oracle", t, o.passed(), summary(&o))
}

fn criterion_4(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let kinds = [StripKind::G, StripKind::GTilde];
    let oracle = sweep(range, &kinds, 2, |l, n, k| check_pieri(l, n, k).unwrap());
    let printed = sweep(range, &kinds, 2, |l, n, k| check_transport(l, n, k, Transport::Printed).unwrap());
    let inverted = sweep(range, &kinds, 2, |l, n, k| check_transport(l, n, k, Transport::Inverted).unwrap());
    let detail = format!(
        "oracle: {}; transport with ‖P_Ω‖²/‖P_Λ‖²: {}; transport with ‖P_Λ‖²/‖P_Ω‖²: {}",
        summary(&oracle),
        summary(&printed),
        summary(&inverted)
    );
    report(4, "dual Pieri rules", t, oracle.passed() && printed.passed(), detail)
}

fn criterion_5(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let ops = fold(range.par_iter().map(|l| check_operators(l).unwrap()).collect());
    let comm = fold(
        range
            .par_iter()
            .flat_map(|l| (1..=2).into_par_iter().map(move |n| check_commutators(l, n).unwrap()))
            .collect(),
    );
    let detail = format!("operators: {}; commutators: {}", summary(&ops), summary(&comm));
    report(5, "operator actions and commutators", t, ops.passed() && comm.passed(), detail)
}

fn criterion_6() -> Line {
    let t = Instant::now();
    let o = fold((1..=3).map(check_lemma).collect());
    report(6, "rational identity for n = 1, 2, 3", t, o.passed(), summary(&o))
}

fn criterion_7(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let o = sweep(range, &[StripKind::E, StripKind::ETilde], 2, check_generic_limit);
    report(7, "determinants as limits of the generic determinant", t, o.passed(), summary(&o))
}

fn criterion_8(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let o = fold(range.par_iter().map(|l| check_norm_duality(l).unwrap()).collect());
    report(8, "norms and duality", t, o.passed(), summary(&o))
}

fn criterion_9(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let kinds = [StripKind::E, StripKind::ETilde];
    let printed = sweep(range, &kinds, 2, |l, n, k| check_macdonald(l, n, k, TPower::Printed).unwrap());
    let inverted = sweep(range, &kinds, 2, |l, n, k| check_macdonald(l, n, k, TPower::Inverted).unwrap());
    let status = |o: &Outcome| {
        if o.passed() {
            format!("conjecture verified on range ({} checks)", o.checked)
        } else {
            format!("counterexample found ({})", summary(o))
        }
    };
    let detail = format!("with t^d: {}; with t^-d: {}", status(&printed), status(&inverted));
    report(9, "Macdonald Pieri conjecture", t, printed.passed(), detail)
}

fn criterion_10(range: &[SuperPartition]) -> Line {
    let t = Instant::now();
    let asm = sweep(range, &[StripKind::E], 2, |l, n, _| check_det_asm(l, n).unwrap());
    let dp = fold((1..=3).map(|n| check_det_d_prime(n).unwrap()).collect());
    let detail = format!(
        "Det vs ASM sum: {}; Det vs D′ (entrywise n ≤ 3, expanded n ≤ {FULL_DET_MAX}): {}",
        summary(&asm),
        summary(&dp)
    );
    report(10, "determinants, ASMs and Izergin–Korepin", t, asm.passed() && dp.passed(), detail)
}

#[test]
fn acceptance() {
    let wide = degree_range(4, 2);
    let small = total_range(4);
    let mac = degree_range(3, 2);
    let lines = vec![
        criterion_8(&small),
        criterion_1(),
        criterion_2(),
        criterion_3(&wide),
        criterion_4(&wide),
        criterion_5(&small),
        criterion_6(),
        criterion_7(&wide),
        criterion_9(&mac),
        criterion_10(&wide),
    ];
    // The printed transport ratio is inverted and the printed power of t in
    // the Macdonald rule has the wrong sign; both fail as documented.
    let expected_failures = [4, 9];
    for l in &lines {
        let expected = !expected_failures.contains(&l.id);
        assert_eq!(l.pass, expected, "criterion {} ({}): {}", l.id, l.title, l.detail);
    }
}
