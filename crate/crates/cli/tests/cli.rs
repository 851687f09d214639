use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use superjack::coeffield::parse;

fn superjack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjack"))
        .args(args)
        .env_remove("SUPERJACK_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("UTF-8 diagnostics")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/output.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).expect("schema compiles")
}

/// Parses a JSON document and checks it against the shipped schema.
fn json(o: &Output) -> Value {
    let v: Value = serde_json::from_str(&stdout(o)).expect("valid JSON");
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
    v
}

#[test]
fn large_coefficient_in_table() {
    let o = superjack(&["pieri", "--lambda", "(6,4,3;5,2,1)", "--n", "3", "--kind", "e", "--field", "alpha", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let row = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["omega"] == "(5,2,0;7,5,4,1)")
        .expect("Ω present");
    let want = parse(
        "(1/1152)*a^4*(2*a+3)*(3*a+4)*(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)\
         /((4*a+3)*(5*a+4)*(7*a+6)*(2*a+1)*(a+1)^10)",
    )
    .unwrap();
    assert_eq!(parse(row["total"].as_str().unwrap()).unwrap(), want);
    assert_eq!(row["d"], Value::Null);
}

#[test]
fn csv_columns() {
    let o = superjack(&["pieri", "--lambda", "(0;1)", "--n", "1", "--kind", "e", "--field", "qt", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda,omega,kind,n,sign,psi,det,d,total"));
    assert_eq!(lines.next(), Some("(0;1),(0;2),e,1,1,1,1,0,1"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn qt_values_use_q_and_t() {
    let o = superjack(&["pieri", "--lambda", "(0;1)", "--n", "1", "--kind", "e", "--field", "qt", "--format", "json"]);
    let doc = json(&o);
    assert_eq!(doc["coefficients"][1]["det"], "(q*t-t)/(q*t-1)");
}

#[test]
fn asm_sum_example() {
    let o = superjack(&["asm-sum", "--n", "3", "--x", "7a-1,5a-3,4a-4", "--y", "6a-2,3a-5,a-7", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["terms"].as_array().unwrap().len(), 7);
    let want = parse("-(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)/a^6").unwrap();
    assert_eq!(parse(doc["sum"].as_str().unwrap()).unwrap(), want);
}

#[test]
fn asm_sum_symbolic() {
    let o = superjack(&["asm-sum", "--n", "2", "--field", "qt", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["x"], serde_json::json!(["X1", "X2"]));
    assert_eq!(doc["a"], "u");
}

#[test]
fn verify_pieri_default_range() {
    let o = superjack(&["verify-pieri", "--max-degree", "4", "--max-fermion", "2", "--n", "2", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["status"], "all checks passed");
    assert!(doc["checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_dual_transport() {
    let ok = superjack(&["verify-dual", "--max-degree", "2", "--format", "json"]);
    assert_eq!(code(&ok), 0);
    json(&ok);
    let bad = superjack(&["verify-dual", "--max-degree", "2", "--transport", "printed", "--format", "json"]);
    assert_eq!(code(&bad), 2);
    let doc = json(&bad);
    assert_eq!(doc["status"], "mismatch");
    let err = stderr(&bad);
    assert!(err.contains("((0;), 1, g, (0;1)) expected a+1 got (1)/(a+1)"), "{err}");
}

#[test]
fn verify_macdonald_reports() {
    let printed = superjack(&["verify-macdonald", "--max-degree", "2", "--format", "json"]);
    assert_eq!(code(&printed), 3);
    assert_eq!(json(&printed)["status"], "counterexample found");
    let inverted = superjack(&["verify-macdonald", "--max-degree", "2", "--t-power", "minus-d"]);
    assert_eq!(code(&inverted), 0);
    assert!(stdout(&inverted).contains("conjecture verified on range"));
}

#[test]
fn other_suites_pass() {
    for verb in ["verify-commutators", "verify-duality", "verify-sixvertex"] {
        let mut args = vec![verb, "--max-degree", "3", "--format", "json"];
        if verb == "verify-sixvertex" {
            args.extend(["--symbolic-size", "2"]);
        }
        let o = superjack(&args);
        assert_eq!(code(&o), 0, "{verb}: {}", stderr(&o));
        assert_eq!(json(&o)["status"], "all checks passed");
    }
}

#[test]
fn expansions_validate() {
    for verb in ["jack", "macdonald"] {
        let o = superjack(&[verb, "--lambda", "(1;1)", "--format", "json"]);
        assert_eq!(code(&o), 0);
        let doc = json(&o);
        assert_eq!(doc["coeffs"][0]["sp"], "(1;1)");
        assert_eq!(doc["coeffs"][0]["c"], "1");
    }
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["verify-dual", "--max-degree", "3", "--transport", "printed", "--format", "csv"];
    let one = superjack(&[&args[..], &["--jobs", "1"]].concat());
    let four = superjack(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 2);
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_superjack"))
        .args(args)
        .env("SUPERJACK_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(one.stdout, env.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("superjack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jack.json");
    let o = superjack(&["jack", "--lambda", "(0;2)", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["lambda"], "(0;2)");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn malformed_input_exits_one() {
    let cases: [&[&str]; 7] = [
        &["pieri", "--lambda", "(1,1;)", "--n", "1", "--kind", "e"],
        &["pieri", "--lambda", "(1;1)", "--n", "1", "--kind", "q"],
        &["pieri", "--lambda", "(1;1)", "--n", "0", "--kind", "e"],
        &["pieri", "--lambda", "(1;1)", "--n", "1", "--kind", "g", "--field", "qt"],
        &["asm-sum", "--n", "2", "--x", "1,2,3"],
        &["verify-pieri", "--jobs", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = superjack(args);
        assert_eq!(code(&o), 1, "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let o = superjack(&[flag]);
        assert_eq!(code(&o), 0);
        assert!(!o.stdout.is_empty());
    }
}
