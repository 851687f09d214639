use rayon::prelude::*;
use serde::Serialize;
use superjack::coeffield::params::{alpha, u};
use superjack::coeffield::{parse, parse_list, RatFunc};
use superjack::orthobasis::{jack, macdonald, Field};
use superjack::pieri::{from_half_powers, pieri};
use superjack::sixvertex::{asm_sum, asm_weight, enumerate_asm, ik_asm_relation, Asm, Flavor, SpectralData};
use superjack::superpartitions::{StripKind, SuperPartition};
use superjack::verify::{
    check_commutators, check_det_asm, check_det_d_prime, check_generic_limit, check_lemma, check_macdonald,
    check_norm_duality, check_operators, check_pieri, check_transport, degree_range, n_values, total_range, Mismatch, FULL_DET_MAX,
    Outcome, Site, TPower, Transport, VerifyError,
};

use crate::args::*;
use crate::output::{table, Document};
use crate::Failure;

pub fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Jack(a) => expansion(a, Field::Alpha),
        Command::Macdonald(a) => expansion(a, Field::QT),
        Command::Pieri(a) => pieri_table(a),
        Command::VerifyPieri(a) => verify_pieri(a),
        Command::VerifyDual(a) => verify_dual(a),
        Command::VerifyCommutators(a) => verify_commutators(a),
        Command::VerifyDuality(a) => verify_duality(a),
        Command::VerifyMacdonald(a) => verify_macdonald(a),
        Command::AsmSum(a) => asm_sum_table(a),
        Command::VerifySixvertex(a) => verify_sixvertex(a),
    }
}

fn lambda(s: &str) -> Result<SuperPartition, Failure> {
    s.parse().map_err(|e| Failure::input(format!("invalid --lambda {s:?}: {e}")))
}

fn kind(k: KindArg) -> StripKind {
    match k {
        KindArg::E => StripKind::E,
        KindArg::Etilde => StripKind::ETilde,
        KindArg::G => StripKind::G,
        KindArg::Gtilde => StripKind::GTilde,
    }
}

fn field(f: FieldArg) -> Field {
    match f {
        FieldArg::Alpha => Field::Alpha,
        FieldArg::Qt => Field::QT,
    }
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    if jobs == Some(0) {
        return Err(Failure::input("--jobs must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::input(format!("cannot start worker threads: {e}")))
}

fn expansion(a: ExpansionArgs, f: Field) -> Result<u8, Failure> {
    let lam = lambda(&a.lambda)?;
    let p = match f {
        Field::Alpha => jack(&lam),
        Field::QT => macdonald(&lam),
    }
    .map_err(Failure::compute)?;
    let rows: Vec<Vec<String>> = p.m.coeffs().iter().rev().map(|(l, c)| vec![l.to_string(), c.to_string()]).collect();
    let title = match f {
        Field::Alpha => "Jack",
        Field::QT => "Macdonald",
    };
    let pretty = format!("{title} P_{lam} in the monomial basis\n{}", table(&["m", "coefficient"], &rows));
    Document::new(&*p, vec!["sp", "c"], rows, pretty).emit(a.output.format, a.output.out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct CoefficientRow {
    omega: String,
    sign: i32,
    psi: String,
    det: String,
    d: Option<i64>,
    total: String,
}

#[derive(Serialize)]
struct PieriDocument {
    lambda: String,
    n: u32,
    kind: &'static str,
    field: &'static str,
    coefficients: Vec<CoefficientRow>,
}

fn pieri_table(a: PieriArgs) -> Result<u8, Failure> {
    let lam = lambda(&a.lambda)?;
    let (k, f) = (kind(a.kind), field(a.field));
    let coeffs = pieri(&lam, a.n, k, f).map_err(|e| Failure::input(e.to_string()))?;
    // qt values come in u = q^(1/2), v = t^(1/2); print q, t where possible.
    let show = |x: &RatFunc| match f {
        Field::Alpha => x.to_string(),
        Field::QT => from_half_powers(x).unwrap_or_else(|| x.clone()).to_string(),
    };
    let doc = PieriDocument {
        lambda: lam.to_string(),
        n: a.n,
        kind: k.name(),
        field: f.name(),
        coefficients: coeffs
            .into_iter()
            .map(|c| CoefficientRow {
                omega: c.omega.to_string(),
                sign: c.sign,
                psi: show(&c.psi),
                det: show(&c.det),
                d: c.d,
                total: show(&c.total),
            })
            .collect(),
    };
    let rows: Vec<Vec<String>> = doc
        .coefficients
        .iter()
        .map(|c| {
            vec![
                doc.lambda.clone(),
                c.omega.clone(),
                doc.kind.to_string(),
                doc.n.to_string(),
                c.sign.to_string(),
                c.psi.clone(),
                c.det.clone(),
                c.d.map(|d| d.to_string()).unwrap_or_default(),
                c.total.clone(),
            ]
        })
        .collect();
    let mut pretty = format!(
        "{}_{} · P_{} ({}): {} coefficients\n",
        doc.kind,
        doc.n,
        doc.lambda,
        doc.field,
        doc.coefficients.len()
    );
    for c in &doc.coefficients {
        pretty += &format!("\nΩ = {}  sign {:+}\n  psi    {}\n  det    {}\n", c.omega, c.sign, c.psi, c.det);
        if let Some(d) = c.d {
            pretty += &format!("  d      {d}\n");
        }
        pretty += &format!("  total  {}\n", c.total);
    }
    let header = vec!["lambda", "omega", "kind", "n", "sign", "psi", "det", "d", "total"];
    Document::new(&doc, header, rows, pretty).emit(a.output.format, a.output.out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct Report {
    verb: &'static str,
    status: String,
    checked: usize,
    mismatches: Vec<Mismatch>,
}

/// Emits a verification outcome and returns `fail_code` on any mismatch.
fn report(verb: &'static str, outcome: Outcome, output: &Output, conjecture: bool, fail_code: u8) -> Result<u8, Failure> {
    let outcome = outcome.sorted();
    let status = match (outcome.passed(), conjecture) {
        (true, true) => "conjecture verified on range",
        (false, true) => "counterexample found",
        (true, false) => "all checks passed",
        (false, false) => "mismatch",
    };
    let rows: Vec<Vec<String>> = outcome
        .mismatches
        .iter()
        .map(|m| {
            vec![
                m.check.clone(),
                m.lambda.clone(),
                m.n.to_string(),
                m.kind.clone(),
                m.omega.clone(),
                m.expected.clone(),
                m.got.clone(),
            ]
        })
        .collect();
    let mut pretty = format!("{verb}: {status} ({} checks", outcome.checked);
    match outcome.mismatches.first() {
        None => pretty += ")\n",
        Some(m) => pretty += &format!(", {} mismatches)\nfirst: {m}\n", outcome.mismatches.len()),
    }
    let doc = Report {
        verb,
        status: status.to_string(),
        checked: outcome.checked,
        mismatches: outcome.mismatches,
    };
    let header = vec!["check", "lambda", "n", "kind", "omega", "expected", "got"];
    let document = Document::new(&doc, header, rows, pretty);
    document.emit(output.format, output.out.as_deref())?;
    match doc.mismatches.first() {
        None => Ok(0),
        Some(m) => {
            eprintln!("{status}: {m}");
            Ok(fail_code)
        }
    }
}

fn merge_all(parts: Vec<Result<Outcome, VerifyError>>) -> Result<Outcome, Failure> {
    parts
        .into_iter()
        .try_fold(Outcome::default(), |acc, o| Ok(acc.merge(o.map_err(Failure::compute)?)))
}

fn tasks<'a>(lams: &'a [SuperPartition], kinds: &[StripKind], max_n: u32) -> Vec<(&'a SuperPartition, u32, StripKind)> {
    lams.iter()
        .flat_map(|l| kinds.iter().flat_map(move |&k| n_values(k, max_n).map(move |n| (l, n, k))))
        .collect()
}

fn kinds_or(k: Option<KindArg>, default: &[StripKind]) -> Vec<StripKind> {
    k.map(|k| vec![kind(k)]).unwrap_or_else(|| default.to_vec())
}

fn degree_lams(r: &Range) -> Vec<SuperPartition> {
    degree_range(r.max_degree, r.max_fermion.unwrap_or(2))
}

fn total_lams(r: &Range) -> Vec<SuperPartition> {
    total_range(r.max_degree)
        .into_iter()
        .filter(|l| r.max_fermion.is_none_or(|m| l.m() <= m))
        .collect()
}

fn verify_pieri(a: VerifyArgs) -> Result<u8, Failure> {
    let lams = degree_lams(&a.range);
    let kinds = kinds_or(a.kind, &[StripKind::E, StripKind::ETilde]);
    let work = tasks(&lams, &kinds, a.range.max_n);
    let parts = pool(a.output.jobs)?.install(|| {
        work.par_iter()
            .map(|&(l, n, k)| {
                let o = check_pieri(l, n, k)?;
                Ok(o.merge(check_generic_limit(l, n, k)))
            })
            .collect()
    });
    report("verify-pieri", merge_all(parts)?, &a.output, false, 2)
}

fn verify_dual(a: VerifyDualArgs) -> Result<u8, Failure> {
    let v = a.verify;
    let kinds = kinds_or(v.kind, &[StripKind::G, StripKind::GTilde]);
    if kinds.iter().any(|k| k.is_vertical()) {
        return Err(Failure::input("verify-dual takes --kind g or gtilde"));
    }
    let transport = match a.transport {
        TransportArg::Printed => Transport::Printed,
        TransportArg::Inverted => Transport::Inverted,
    };
    let lams = degree_lams(&v.range);
    let work = tasks(&lams, &kinds, v.range.max_n);
    let parts = pool(v.output.jobs)?.install(|| {
        work.par_iter()
            .map(|&(l, n, k)| Ok(check_pieri(l, n, k)?.merge(check_transport(l, n, k, transport)?)))
            .collect()
    });
    report("verify-dual", merge_all(parts)?, &v.output, false, 2)
}

fn verify_commutators(a: VerifyArgs) -> Result<u8, Failure> {
    if a.kind.is_some() {
        return Err(Failure::input("verify-commutators does not take --kind"));
    }
    let lams = total_lams(&a.range);
    let max_n = a.range.max_n;
    let parts: Vec<Result<Outcome, VerifyError>> = pool(a.output.jobs)?.install(|| {
        let ops = lams.par_iter().map(check_operators);
        let comm = lams
            .par_iter()
            .flat_map(|l| (1..=max_n).into_par_iter().map(move |n| check_commutators(l, n)));
        let lemma = (1..=max_n.max(3) as usize).into_par_iter().map(|n| Ok(check_lemma(n)));
        ops.chain(comm).chain(lemma).collect()
    });
    report("verify-commutators", merge_all(parts)?, &a.output, false, 2)
}

fn verify_duality(a: VerifyArgs) -> Result<u8, Failure> {
    if a.kind.is_some() {
        return Err(Failure::input("verify-duality does not take --kind"));
    }
    let lams = total_lams(&a.range);
    let parts = pool(a.output.jobs)?.install(|| lams.par_iter().map(check_norm_duality).collect());
    report("verify-duality", merge_all(parts)?, &a.output, false, 2)
}

fn verify_macdonald(a: VerifyMacdonaldArgs) -> Result<u8, Failure> {
    let kinds = kinds_or(a.kind, &[StripKind::E, StripKind::ETilde]);
    if kinds.iter().any(|k| !k.is_vertical()) {
        return Err(Failure::input("verify-macdonald takes --kind e or etilde"));
    }
    let power = match a.t_power {
        TPowerArg::D => TPower::Printed,
        TPowerArg::MinusD => TPower::Inverted,
    };
    let lams = degree_range(a.max_degree, a.max_fermion);
    let work = tasks(&lams, &kinds, a.max_n);
    let parts = pool(a.output.jobs)?.install(|| {
        work.par_iter()
            .map(|&(l, n, k)| check_macdonald(l, n, k, power))
            .collect()
    });
    report("verify-macdonald", merge_all(parts)?, &a.output, true, 3)
}

fn verify_sixvertex(a: VerifySixvertexArgs) -> Result<u8, Failure> {
    let lams = degree_lams(&a.range);
    let work = tasks(&lams, &[StripKind::E], a.range.max_n);
    let size = a.symbolic_size;
    let parts: Vec<Result<Outcome, VerifyError>> = pool(a.output.jobs)?.install(|| {
        let asm = work.par_iter().map(|&(l, n, _)| check_det_asm(l, n));
        let dp = (1..=size).into_par_iter().map(check_det_d_prime);
        let ik = (1..=size).into_par_iter().map(check_ik);
        asm.chain(dp).chain(ik).collect()
    });
    report("verify-sixvertex", merge_all(parts)?, &a.output, false, 2)
}

/// Izergin–Korepin determinant against the prefactor times the ASM sum: on
/// formal symbols up to the full-expansion size, beyond it at integer `X`,
/// `Y` with `u` kept formal.
fn check_ik(n: usize) -> Result<Outcome, VerifyError> {
    let data = if n <= FULL_DET_MAX {
        SpectralData::symbolic_qt(n)
    } else {
        let ints = |start: i64| (0..n as i64).map(|k| RatFunc::int(start + 2 * k)).collect();
        SpectralData::new(ints(2), ints(3), u())?
    };
    let (det, rhs) = ik_asm_relation(&data)?;
    let empty = SuperPartition::empty();
    let site = Site { check: "izergin-korepin", lambda: &empty, n: n as u32, kind: "-" };
    Ok(site.compare("-", &det, &rhs))
}

fn values(flag: &str, s: &str) -> Result<Vec<RatFunc>, Failure> {
    parse_list(s).map_err(|e| Failure::input(format!("invalid --{flag} {s:?}: {e}")))
}

#[derive(Serialize)]
struct AsmTerm {
    asm: Asm,
    weight: String,
}

#[derive(Serialize)]
struct AsmDocument {
    n: usize,
    field: &'static str,
    x: Vec<String>,
    y: Vec<String>,
    a: String,
    sum: String,
    terms: Vec<AsmTerm>,
}

fn asm_sum_table(a: AsmSumArgs) -> Result<u8, Failure> {
    let xs = a.x.as_deref().map(|s| values("x", s)).transpose()?;
    let ys = a.y.as_deref().map(|s| values("y", s)).transpose()?;
    let n = match (a.n, &xs, &ys) {
        (Some(n), _, _) => n,
        (None, Some(v), _) | (None, None, Some(v)) => v.len(),
        (None, None, None) => return Err(Failure::input("asm-sum needs --n or --x")),
    };
    for (flag, v) in [("x", &xs), ("y", &ys)] {
        if let Some(v) = v {
            if v.len() != n {
                return Err(Failure::input(format!("--{flag} has {} values but n is {n}", v.len())));
            }
        }
    }
    let (flavor, f) = match a.field {
        FieldArg::Alpha => (Flavor::Alpha, Field::Alpha),
        FieldArg::Qt => (Flavor::QT, Field::QT),
    };
    let mut data = match flavor {
        Flavor::Alpha => SpectralData::symbolic_alpha(n),
        Flavor::QT => SpectralData::symbolic_qt(n),
    };
    if let Some(x) = xs {
        data.xs = x;
    }
    if let Some(y) = ys {
        data.ys = y;
    }
    data.a = match &a.a {
        Some(s) => parse(s).map_err(|e| Failure::input(format!("invalid --a {s:?}: {e}")))?,
        None if flavor == Flavor::Alpha => alpha(),
        None => u(),
    };
    let jobs = a.output.jobs;
    let asms = enumerate_asm(n);
    let terms: Vec<AsmTerm> = pool(jobs)?.install(|| {
        asms.into_par_iter()
            .map(|m| {
                let weight = asm_weight(&m, &data, flavor).to_string();
                AsmTerm { asm: m, weight }
            })
            .collect()
    });
    let sum = asm_sum(&data, flavor);
    let doc = AsmDocument {
        n,
        field: f.name(),
        x: data.xs.iter().map(|v| v.to_string()).collect(),
        y: data.ys.iter().map(|v| v.to_string()).collect(),
        a: data.a.to_string(),
        sum: sum.to_string(),
        terms,
    };
    let mut rows: Vec<Vec<String>> = doc.terms.iter().map(|t| vec![asm_text(&t.asm), t.weight.clone()]).collect();
    rows.push(vec!["sum".to_string(), doc.sum.clone()]);
    let pretty = format!(
        "{} alternating sign matrices of size {n}\nx = {}\ny = {}\na = {}\n{}",
        doc.terms.len(),
        doc.x.join(", "),
        doc.y.join(", "),
        doc.a,
        table(&["asm", "weight"], &rows)
    );
    Document::new(&doc, vec!["asm", "weight"], rows, pretty).emit(a.output.format, a.output.out.as_deref())?;
    Ok(0)
}

fn asm_text(m: &Asm) -> String {
    serde_json::to_string(m).expect("an ASM is plain data")
}
