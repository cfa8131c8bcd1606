//! Acceptance gate: one test per shipped criterion, each printing a single
//! pass/fail line.  Every test delegates to the named checks in
//! `twisted_demazure::verify` so the CLI `verify` subcommand and this gate
//! exercise identical code paths.

use std::time::Instant;

use twisted_demazure::verify::{run_check, CheckOutcome};

/// Runs the named checks and panics with full detail if any fail.
fn gate(criterion: &str, label: &str, names: &[&str], time_limit_secs: Option<u64>) {
    let start = Instant::now();
    let outcomes: Vec<CheckOutcome> = names
        .iter()
        .map(|n| run_check(n).unwrap_or_else(|| panic!("unknown check name: {n}")))
        .collect();
    let elapsed = start.elapsed();
    let passed = outcomes.iter().all(|o| o.passed);
    let within_limit = time_limit_secs.map_or(true, |lim| elapsed.as_secs() < lim);
    let status = if passed && within_limit { "PASS" } else { "FAIL" };
    println!("{criterion} {status} ({elapsed:.2?}): {label}");
    for o in &outcomes {
        if !o.passed {
            eprintln!("  check {} failed: {}", o.name, o.detail);
        }
    }
    assert!(
        passed,
        "{criterion} failed: {:?}",
        outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| format!("{}: {}", o.name, o.detail))
            .collect::<Vec<_>>()
    );
    if let Some(lim) = time_limit_secs {
        assert!(
            within_limit,
            "{criterion} exceeded its time budget: {elapsed:.2?} >= {lim}s"
        );
    }
}

#[test]
fn criterion_1_fundamental_dimensions() {
    gate(
        "criterion 1",
        "fundamental graded Weyl module dimensions across all twisted families",
        &[
            "fundamental-dimensions-e6-2",
            "fundamental-dimensions-d4-3",
            "fundamental-dimensions-a4-2",
            "fundamental-dimensions-a5-2",
            "fundamental-dimensions-d4-2",
        ],
        Some(120),
    );
}

#[test]
fn criterion_2_fundamental_decompositions() {
    gate(
        "criterion 2",
        "exact multisets of irreducible summands for fundamental modules",
        &[
            "fundamental-decompositions-d4-3",
            "fundamental-decompositions-e6-2",
            "fundamental-decompositions-a4-2",
            "fundamental-decompositions-a5-2",
            "fundamental-decompositions-d4-2",
        ],
        None,
    );
}

#[test]
fn criterion_3_translation_operator_identity() {
    gate(
        "criterion 3",
        "restricted affine Demazure operator along a translation word matches \
         the finite longest-word operator on a shifted sum",
        &["translation-operator-identity-d4-3"],
        None,
    );
}

#[test]
fn criterion_4_quadruple_bond_series() {
    gate(
        "criterion 4",
        "rank-one quadruple-bond family: odd series dimensions and smallest decomposition",
        &["quadruple-bond-series"],
        None,
    );
}

#[test]
fn criterion_5_product_dimension_law() {
    gate(
        "criterion 5",
        "graded Weyl dimensions factor over fundamental dimensions on a dense grid",
        &["product-dimension-law"],
        Some(300),
    );
}

#[test]
fn criterion_6_tensor_factorization() {
    gate(
        "criterion 6",
        "restricted-character multiplicativity on sampled level/weight triples",
        &["tensor-factorization"],
        None,
    );
}

#[test]
fn criterion_7_operator_properties() {
    gate(
        "criterion 7",
        "operator laws: idempotence, reduced-word independence, translation \
         composition, level invariance, independent character oracle agreement",
        &[
            "operator-idempotence",
            "reduced-word-independence",
            "translation-composition",
            "level-invariance",
            "character-oracle-agreement",
        ],
        None,
    );
}

#[test]
fn criterion_8_untwisted_rank_one_series() {
    gate(
        "criterion 8",
        "untwisted rank-one series: powers of two and the degree-zero bucket \
         of the smallest restricted module",
        &["untwisted-sl2-series"],
        None,
    );
}
