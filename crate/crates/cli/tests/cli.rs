//! End-to-end exercises of the command-line contract: fixture round trips,
//! exit codes, clause restriction, enumeration output, Morita verdicts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ftft(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftft"))
        .args(args)
        .env("FTFT_FIXTURE_DIR", dir)
        .output()
        .expect("spawn ftft")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn fixture_check_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let out = ftft(&["fixture", "q8"], dir.path());
    assert!(out.status.success(), "{out:?}");
    let path = dir.path().join("q8.json");
    let first = std::fs::read_to_string(&path).unwrap();
    let out = ftft(&["check", path.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS"));
    // writing again produces the identical bytes
    let out = ftft(&["fixture", "q8"], dir.path());
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
}

#[test]
fn clifford_fixture_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = ftft(
        &["fixture", "clifford", "--p", "1", "--q", "1"],
        dir.path(),
    );
    assert!(out.status.success());
    let path = dir.path().join("clifford.json");
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["kind"], "superalgebra");
    assert_eq!(doc["parity"].as_array().unwrap().len(), 4);
}

#[test]
fn broken_strong_grading_exits_one_with_the_clause_named() {
    let dir = tempfile::tempdir().unwrap();
    let out = ftft(&["fixture", "trivial-theory", "--group", "pin1-plus"], dir.path());
    assert!(out.status.success());
    let path = dir.path().join("trivial-theory.json");
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // zero every product with two T-sector factors: associativity survives
    // (the T-part becomes a square-zero ideal) but strong grading fails
    let labels = ["1", "T", "c", "cT"];
    let t_sector = |l: &str| l == "T" || l == "cT";
    let mult = doc["ambient"]["mult"].as_array_mut().unwrap();
    let dim = mult.len();
    for i in 0..dim {
        for j in 0..dim {
            // ambient basis order: (x_g, i·x_g) pairs in group order
            let gi = labels[i / 2];
            let gj = labels[j / 2];
            if t_sector(gi) && t_sector(gj) {
                let row = mult[i].as_array_mut().unwrap();
                let cell = row[j].as_array_mut().unwrap();
                for entry in cell.iter_mut() {
                    *entry = serde_json::json!("0");
                }
            }
        }
    }
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = ftft(&["check", broken.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stdout(&out).contains("strong-grading"),
        "clause not named: {}",
        stdout(&out)
    );
    // --clause restricts the report to the named clause
    let out = ftft(
        &[
            "check",
            broken.to_str().unwrap(),
            "--clause",
            "grading-valid/strong-grading",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = ftft(&["check", bad.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = ftft(&["check", "/nonexistent/x.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = ftft(&["fixture", "no-such-fixture"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn two_group_enumerate_prints_the_four_classes() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ftft(&["fixture", "o2-model"], dir.path()).status.success());
    let path = dir.path().join("o2-model.json");
    let out = ftft(&["two-group", "enumerate", path.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"Gamma=[0] Xi_class=0".to_string()));
    assert!(lines.contains(&"Gamma=[1] Xi_class=1".to_string()));
}

#[test]
fn morita_search_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["stellar-c", "stellar-cl1-plus", "stellar-cl1-minus"] {
        assert!(ftft(&["fixture", name], dir.path()).status.success());
    }
    assert!(ftft(
        &["fixture", "stellar-c-shifted", "--out", dir.path().join("shifted.json").to_str().unwrap()],
        dir.path()
    )
    .status
    .success());
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let out = ftft(
        &["morita-search", &p("stellar-c.json"), &p("shifted.json")],
        dir.path(),
    );
    assert_eq!(stdout(&out).trim(), "NONE");
    let out = ftft(
        &[
            "morita-search",
            &p("stellar-cl1-plus.json"),
            &p("stellar-cl1-minus.json"),
        ],
        dir.path(),
    );
    assert_eq!(stdout(&out).trim(), "NONE");
    let out = ftft(
        &[
            "morita-search",
            &p("stellar-cl1-plus.json"),
            &p("stellar-cl1-plus.json"),
        ],
        dir.path(),
    );
    assert_eq!(stdout(&out).trim(), "WITNESS");
}

#[test]
fn reproduce_quick_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = ftft(&["reproduce", "--suite", "quick"], dir.path());
    let b = ftft(&["reproduce", "--suite", "quick"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().count() >= 11);
}

#[test]
fn tft1d_and_cohomology_commands() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ftft(&["fixture", "q8"], dir.path()).status.success());
    let path: PathBuf = dir.path().join("q8.json");
    let out = ftft(
        &["cohomology", "--group", path.to_str().unwrap(), "--degree", "2"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("Z2^2"));
}
