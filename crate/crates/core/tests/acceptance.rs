//! The acceptance gate: one test per criterion, each printing a PASS/FAIL
//! line. Every identity is exact, so there are no tolerances anywhere.

use ftft_core::repro::{run_single, Verdict};

fn run(id: &str) {
    let row = run_single(id).expect("unknown check id");
    println!("{} {} — {}", row.verdict, row.id, row.detail);
    assert_eq!(row.verdict, Verdict::Pass, "{}: {}", row.id, row.detail);
}

#[test]
fn criterion_01_fermionic_tensor_q8() {
    run("01-fermionic-tensor-q8");
}

#[test]
fn criterion_02_tenfold_d1_rows() {
    run("02-tenfold-d1-rows");
}

#[test]
fn criterion_03_clifford_parity_extension() {
    run("03-clifford-parity-extension");
}

#[test]
fn criterion_04_two_group_extension_count() {
    run("04-two-group-extension-count");
}

#[test]
fn criterion_05_serre_oracle() {
    run("05-serre-oracle");
}

#[test]
fn criterion_06_ungrsym_equivalence() {
    run("06-ungrsym-equivalence");
}

#[test]
fn criterion_07_alpha_oracle() {
    run("07-alpha-oracle");
}

#[test]
fn criterion_08_stellar_morita_verdicts() {
    run("08-stellar-morita-verdicts");
}

#[test]
fn criterion_09_tft2d_end_to_end() {
    run("09-tft2d-end-to-end");
}

#[test]
fn criterion_10_tft1d_reps_and_conversion() {
    run("10-tft1d-reps-and-conversion");
}

#[test]
fn criterion_11_adjunction_suite() {
    run("11-adjunction-suite");
}

#[test]
fn full_suite_report_is_deterministic() {
    let a = ftft_core::repro::run_suite(true);
    let b = ftft_core::repro::run_suite(true);
    let strip = |r: &ftft_core::repro::ReproReport| -> Vec<(String, String)> {
        r.rows
            .iter()
            .map(|row| (format!("{} {}", row.verdict, row.id), row.detail.clone()))
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}
