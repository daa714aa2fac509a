//! Runs every acceptance criterion and prints one PASS/FAIL line for each.

use std::io::Write;

use k3tensor_core::accept::{criterion, AcceptOptions};

/// Criteria whose stated values are not reproducible, with the checks expected to fail.
const KNOWN_FAILURES: [(u8, &[&str]); 2] = [
    (4, &["char-poly Phi_53214@22sympent", "char-poly Phi_53214@23sympent"]),
    (5, &["eta rr window"]),
];

#[test]
fn acceptance() {
    let quick = std::env::var("K3TENSOR_ACCEPT_QUICK").is_ok_and(|v| v == "1");
    let opts = AcceptOptions { quick };
    // Direct writes bypass the test harness capture, so the lines show in plain `cargo test`.
    let mut err = std::io::stderr().lock();
    let mut unexpected = Vec::new();
    for id in 1..=13u8 {
        let r = criterion(id, &opts).unwrap();
        writeln!(err, "{} [{:.2}s]", r.line(), r.elapsed.as_secs_f64()).unwrap();
        for c in r.checks.iter().filter(|c| !c.passed()) {
            writeln!(err, "    {}: expected {}, got {}", c.name, c.expected, c.got).unwrap();
        }
        let known: &[&str] = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map_or(&[], |(_, v)| v);
        let mut failing = r.failing();
        failing.sort();
        let mut want = known.to_vec();
        want.sort();
        if failing != want {
            unexpected.push(format!("criterion {id}: failing {failing:?}, expected {want:?}"));
        }
        if let Some(gap) = r.known_gap {
            writeln!(err, "    known gap: {gap}").unwrap();
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
