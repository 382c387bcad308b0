//! Randomized invariants of kernel verification, 100 seeded trials each.

mod common;

use common::*;

const TRIALS: u64 = 100;

fn check(name: &str, f: fn(u64) -> Trial, seed: u64) {
    let failures = run_property(f, seed, TRIALS);
    assert!(
        failures.is_empty(),
        "{name}: {} failures\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn non_negativity() {
    check("non-negativity", prop_non_negativity, 1_000);
}

#[test]
fn rotation_invariance() {
    check("rotation", prop_rotation_invariance, 2_000);
}

#[test]
fn flip_invariance() {
    check("flip", prop_flip_invariance, 3_000);
}

#[test]
fn lift_soundness() {
    check("lift", prop_lift_soundness, 4_000);
}

#[test]
fn fisher_consistency() {
    check("fisher", prop_fisher_consistency, 5_000);
}

#[test]
fn h4_oracle_agreement() {
    check("h4 oracle", prop_h4_oracle_agreement, 6_000);
}
