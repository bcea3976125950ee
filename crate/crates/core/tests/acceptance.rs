mod common;

use zastava_core::fixtures;
use zastava_core::verify::{self, Check, Status};

fn report(n: usize, checks: &[Check]) -> bool {
    let ok = checks.iter().all(Check::passed);
    let detail: Vec<String> = checks.iter().map(|c| format!("[{}] {}", c.name, c.detail)).collect();
    println!("criterion {n:>2}: {} {}", if ok { "PASS" } else { "FAIL" }, detail.join("; "));
    ok
}

fn main() {
    let mut bundled_plus_second = verify::bundled_operators();
    bundled_plus_second.push(common::a1_shifted_config("1"));
    let bundled_only = verify::corollary(&verify::bundled_operators(), 3);
    assert_eq!(bundled_only.len(), 1);
    assert_eq!(bundled_only[0].status, Status::Skipped);
    assert_eq!(bundled_only[0].detail, "skipped: no external operator configs");
    let paired = verify::corollary(&bundled_plus_second, 3);
    assert!(paired.iter().all(|c| c.status != Status::Skipped));

    let criteria: Vec<Vec<Check>> = vec![
        vec![verify::theorem_main("C2", &fixtures::c2_reduced())],
        vec![verify::theorem_main("G2", &fixtures::g2_reduced())],
        vec![verify::a1_tower(4)],
        vec![verify::elimination(10)],
        vec![verify::folding_identity(6)],
        vec![verify::resubstitution(5)],
        vec![verify::psi_hat_properties(3)],
        vec![verify::toda_chain(6)],
        paired.into_iter().chain(bundled_only).collect(),
        vec![verify::series_positivity(5, 12)],
    ];
    let results: Vec<bool> = criteria.iter().enumerate().map(|(i, c)| report(i + 1, c)).collect();
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", results.len());
}
