use std::time::Instant;

use zastava_core::verify::{bundled_operators, run_suite, Suite};

fn run(suite: Suite) {
    let ops = bundled_operators();
    let t = Instant::now();
    let report = run_suite(suite, &ops);
    for c in &report.checks {
        println!("{c}");
    }
    println!("{suite:?} took {:?}", t.elapsed());
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn main_suite() {
    run(Suite::Main);
}

#[test]
fn weights_suite() {
    run(Suite::Weights);
}

#[test]
fn whittaker_suite() {
    run(Suite::Whittaker);
}

#[test]
fn corollary_suite_skips_without_second_config() {
    let report = run_suite(Suite::Corollary, &bundled_operators());
    assert!(report.passed());
    assert!(report.checks[0].detail.starts_with("skipped"));
}

mod common;

#[test]
fn corollary_accepts_equivalent_configs() {
    let mut ops = bundled_operators();
    ops.push(common::a1_shifted_config("1"));
    let report = run_suite(Suite::Corollary, &ops);
    assert!(report.passed(), "{:?}", report.first_failure());
    assert_eq!(report.checks[0].status, zastava_core::verify::Status::Pass);
}

#[test]
fn corollary_rejects_inequivalent_configs() {
    let mut ops = bundled_operators();
    ops.push(common::a1_shifted_config("0"));
    let report = run_suite(Suite::Corollary, &ops);
    assert!(!report.passed());
    println!("{}", report.first_failure().unwrap());
}
