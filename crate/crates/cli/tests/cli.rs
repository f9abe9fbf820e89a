use std::process::Command;

use serde_json::Value;
use shpl_cli::run;
use shpl_core::{DecompositionTableau, ShiftedTableau, StandardShiftedTableau};

fn shpl(args: &[&str]) -> shpl_cli::Outcome {
    run(std::iter::once("shpl").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = shpl(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn insertion_commands() {
    let out = shpl(&["insert-mixed", "3415961254"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "P_mix: 1 1 2 3' 4 / 4 5 5 / 6 9'\nQ_mix: 1 2 4 5 9 / 3 6 8 / 7 10\n"
    );
    let v = json(&["insert-sk", "3415961254"]);
    assert_eq!(v["p"], "96524 / 511 / 34");
    assert_eq!(v["q"], "1 2 4 5 9 / 3 6 8 / 7 10");
    assert_eq!(v["shape"], serde_json::json!([5, 3, 2]));
    let v = json(&["rsk", "3415961254"]);
    assert_eq!(v["p"], "1 1 2 4 / 3 4 5 5 / 6 / 9");
    assert_eq!(
        shpl(&["mread", "1 1 2 3' 4 / 4 5 5 / 6 9'"]).stdout,
        "3451196524\n"
    );
}

#[test]
fn printed_tableaux_reparse() {
    let v = json(&["insert-mixed", "63212245"]);
    let p: ShiftedTableau = v["p"].as_str().unwrap().parse().unwrap();
    assert_eq!(p.to_string(), v["p"]);
    let q: StandardShiftedTableau = v["q"].as_str().unwrap().parse().unwrap();
    assert_eq!(q.to_string(), v["q"]);
    let v = json(&["insert-sk", "63212245"]);
    let r: DecompositionTableau = v["p"].as_str().unwrap().parse().unwrap();
    assert_eq!(r.to_string(), v["p"]);
    let phi = json(&["phi", v["p"].as_str().unwrap()]);
    assert_eq!(phi["tableau"], "1 2' 2 2 3' 4 5 6'");
    let psi = json(&["psi", "1 2' 2 2 3' 4 5 6'"]);
    assert_eq!(psi["ssdt"], "63212245");
}

#[test]
fn classes_of_content_three_two() {
    let v = json(&["classes", "--content", "3,2", "--kind", "shifted"]);
    assert_eq!(v["shifted"].as_array().unwrap().len(), 5);
    assert!(v.get("plactic").is_none());
    let v = json(&["classes", "--content", "3,2", "--kind", "plactic"]);
    assert_eq!(v["plactic"].as_array().unwrap().len(), 3);
    let text = shpl(&["classes", "--content", "3,2"]).stdout;
    assert!(
        text.contains("  1 1 1 2' / 2 | 21121 21211 22111\n"),
        "{text}"
    );
}

#[test]
fn coefficient_commands() {
    let v = json(&[
        "lrcoef", "--lambda", "2,1", "--mu", "2", "--nu", "1", "--method", "all",
    ]);
    for key in ["plactic", "rectify", "boxadd", "coefficient"] {
        assert_eq!(v[key], 1, "{key}");
    }
    let v = json(&[
        "lrcoef", "--lambda", "2,1", "--mu", "2", "--nu", "1", "--method", "rectify",
    ]);
    assert_eq!(v["method"], "rectify");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
    let v = json(&[
        "lrcoef", "--lambda", "2,1", "--mu", "2", "--nu", "1", "--method", "plactic",
    ]);
    assert!(v["witnesses"].is_null());
    let v = json(&["gcoef", "--lambda", "3,1", "--mu", "3,1"]);
    assert_eq!(v["coefficient"], 1);
    assert_eq!(
        shpl(&["gcoef", "--lambda", "3,1"]).stdout,
        "P_(3,1) = s_(3,1) + s_(2,2) + s_(2,1,1)\n"
    );
    let out = shpl(&["schur", "--basis", "P", "--shape", "3,1", "--vars", "2"]);
    assert_eq!(
        out.stdout,
        "P_(3,1)(x1,x2) = x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3\n"
    );
    let v = json(&["schur", "--basis", "Q", "--shape", "1", "--vars", "2"]);
    assert_eq!(v["polynomial"], "2*x1 + 2*x2");
    let v = json(&["schur", "--basis", "s", "--shape", "2,2", "--vars", "2"]);
    assert_eq!(v["polynomial"], "x1^2*x2^2");
}

#[test]
fn jdt_and_standardization_commands() {
    assert_eq!(
        shpl(&["rectify", "_ _ _ 1 4 / _ 2 3 5 / 6 7"]).stdout,
        "1 2 3 4 / 5 6 7\n"
    );
    assert_eq!(shpl(&["rectify", "_ 1 / 2"]).stdout, "1 2\n");
    // semistandard rectification goes through the reading word, not slides
    assert_eq!(shpl(&["rectify", "_ 1 1 / 2"]).stdout, "1 1 2'\n");
    assert_eq!(shpl(&["rectify", "_ 1 / 1"]).code, 2);
    assert_eq!(shpl(&["delta", "1 2 4 5 9 / 3 6 8 / 7 10"]).code, 0);
    assert_eq!(shpl(&["stan", "23314211"]).stdout, "46718523\n");
    assert_eq!(
        shpl(&["stan", "--kind", "ssdt", "96524 / 511 / 34"]).code,
        0
    );
}

#[test]
fn verify_and_appendix() {
    for suite in ["niltlb", "relations", "pieri", "lr-agreement", "cauchy"] {
        let out = shpl(&["verify", "--suite", suite, "--max-size", "5"]);
        assert_eq!(out.code, 0, "{suite}: {}", out.stdout);
        assert!(out.stdout.contains("PASS"));
    }
    let golden = include_str!("data/appendix.golden");
    assert_eq!(shpl(&["appendix"]).stdout, golden);
    let rows = json(&["appendix"]);
    assert_eq!(rows.as_array().unwrap().len(), 75);
}

#[test]
fn skew_expansion_is_labelled() {
    let out = shpl(&["skew-expand", "--lambda", "3,1", "--mu", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("EXPERIMENTAL"));
    assert_eq!(
        json(&["skew-expand", "--lambda", "3,1", "--mu", "1"])["experimental"],
        true
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["classes", "--content", "2,2,1", "--format", "json"];
    assert_eq!(shpl(&args), shpl(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(shpl(&["insert-mixed", "12a"]).code, 2);
    assert_eq!(
        shpl(&["lrcoef", "--lambda", "2,2", "--mu", "1", "--nu", "1"]).code,
        2
    );
    assert_eq!(shpl(&["frobnicate"]).code, 2);
    assert_eq!(shpl(&["mread", "1 1", "--bogus"]).code, 2);
    let out = shpl(&["lrcoef", "--lambda", "5,4", "--mu", "1", "--nu", "8"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("budget"));
    assert_eq!(shpl(&["delta", "1 2 / 3"]).code, 0);
    assert_eq!(shpl(&["--help"]).code, 0);
}

#[test]
fn binary_reports_exit_codes_and_budget_env() {
    let bin = env!("CARGO_BIN_EXE_shpl");
    let ok = Command::new(bin)
        .args(["mread", "1 2' 3"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "213\n");
    let bad = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let capped = Command::new(bin)
        .args(["classes", "--content", "2,1"])
        .env("SHPL_MAX_SIZE", "2")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
}
