use std::fs;
use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use zastava_cli::{execute, Cli, Outcome};

fn run(args: &[&str]) -> Result<Outcome, String> {
    let cli = Cli::try_parse_from(std::iter::once("zastava").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    execute(&cli)
}

fn text(args: &[&str]) -> String {
    let out = run(args).unwrap();
    assert!(out.ok, "{}", out.output);
    out.output
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zastava")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap())
}

#[test]
fn jfun_c2_closed_form() {
    assert_eq!(
        text(&["jfun", "--type", "C2", "--alpha", "1,1"]),
        "(1 - q^3*z1) / [(1 - q) (1 - q*z1) (1 - q*z1^2*z2^-2) (1 - q^2*z1^-1*z2^2) (1 - q^2)]"
    );
}

#[test]
fn jfun_series() {
    let out = text(&["jfun", "--type", "C2", "--alpha", "1,1", "--series", "1"]);
    assert!(out.ends_with("series to q^1: 1 + q + q*z1 + q*z1^2*z2^-2"), "{out}");
}

#[test]
fn demazure_zero_weight_is_one() {
    assert_eq!(text(&["demazure", "--type", "A1", "--lambda", "0", "--hat"]), "1");
}

#[test]
fn demazure_global_a1() {
    assert_eq!(text(&["demazure", "--type", "A1", "--lambda", "1", "--global"]), "(z1^-1 + z1) / [(1 - q)]");
}

#[test]
fn fold_prints_parent() {
    let out = text(&["fold", "--type", "G2"]);
    assert!(out.starts_with("type G2\nparent D4\nd 3\n"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&text(&["fold", "--type", "F4", "--format", "json"])).unwrap();
    assert_eq!(json["parent"], "E6");
    assert_eq!(json["d"], 2);
}

#[test]
fn hilbert_closed_form_and_degreewise() {
    let closed = text(&["hilbert", "--fixture", "g2_reduced", "--closed-form"]);
    assert!(closed.starts_with("(1 - q^4*z1^-1*z2)"), "{closed}");
    let dims = text(&["hilbert", "--fixture", "c2_full", "--degree", "1"]);
    assert_eq!(dims, "1\t1\nq\t1\nq*z1\t1\nq*z1^2*z2^-2\t1");
}

#[test]
fn toda_solve_and_check() {
    let solved = text(&["toda", "solve", "--op", "a1_toda", "--box", "2"]);
    assert_eq!(solved, "0\t1\n1\t(z1^-1 + z1) / [(1 - q)]\n2\t(z1^-2 + 1 + z1^2 + q) / [(1 - q) (1 - q^2)]");
    assert!(text(&["toda", "check", "--op", "a1_toda", "--box", "4"]).starts_with("PASS"));
}

#[test]
fn verify_weights_passes() {
    let (code, out) = binary(&["verify", "--suite", "weights"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS folding-identity"));
}

#[test]
fn verify_is_deterministic() {
    let a = text(&["verify", "--suite", "whittaker", "--format", "json"]);
    let b = text(&["verify", "--suite", "whittaker", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn corollary_without_configs_is_skipped() {
    let (code, out) = binary(&["verify", "--suite", "corollary"]);
    assert_eq!(code, 0);
    assert!(out.contains("skipped: no external operator configs"));
}

fn operator_dir(name: &str, eigen_constant: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::create_dir_all(&dir).unwrap();
    let doc = format!(
        r#"{{
  "type": "A1",
  "terms": [
    {{"shift": [-1], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}]}},
    {{"shift": [0], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}]}},
    {{"shift": [1], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}, {{"coeff": "-1", "q": 1, "x": [1]}}]}}
  ],
  "eigenvalue": [[0, [-1], "1"], [0, [0], "{eigen_constant}"], [0, [1], "1"]],
  "provenance": "test"
}}"#
    );
    fs::write(dir.join("a1_alt.json"), doc).unwrap();
    dir
}

#[test]
fn corollary_with_equivalent_config_passes() {
    let dir = operator_dir("ops_equivalent", "1");
    let (code, out) = binary(&["verify", "--suite", "corollary", "--operators", dir.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS corollary A1"), "{out}");
}

#[test]
fn corollary_with_inequivalent_config_fails() {
    let dir = operator_dir("ops_inequivalent", "0");
    let (code, out) = binary(&["verify", "--suite", "corollary", "--operators", dir.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("first counterexample: configs 1 and 2 differ at λ = 1"), "{out}");
}

#[test]
fn bad_input_is_an_error() {
    assert!(run(&["jfun", "--type", "A2", "--alpha", "1"]).is_err());
    assert!(run(&["jfun", "--type", "A1", "--alpha", "-1"]).is_err());
    assert!(run(&["demazure", "--type", "A1", "--lambda", "-1"]).is_err());
    assert!(run(&["verify", "--suite", "nope"]).is_err());
    let (code, _) = binary(&["toda", "solve", "--op", "missing.json", "--box", "1"]);
    assert_eq!(code, 2);
}
