//! The named verification suites must all pass at their default ranges.

use skyscraper_core::verify::{run_all, VerifyOptions};

#[test]
fn every_suite_passes_at_default_depth() {
    let outcomes = run_all(&VerifyOptions::default());
    assert_eq!(outcomes.len(), 23);
    for outcome in &outcomes {
        println!(
            "{} {}: {}",
            if outcome.passed { "ok  " } else { "FAIL" },
            outcome.name,
            outcome.detail
        );
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
    assert!(failed.is_empty(), "{} suite(s) failed", failed.len());
}

#[test]
fn shallow_depth_still_runs_every_suite() {
    let outcomes = run_all(&VerifyOptions { oracle_max_n: 4 });
    assert_eq!(outcomes.len(), 23);
    assert!(outcomes.iter().all(|o| o.passed));
}
