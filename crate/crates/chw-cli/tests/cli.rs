//! End-to-end tests of the `chw` binary: output formats, exit codes,
//! and the matrix file interface.

use std::io::Write;
use std::process::{Command, Output};

fn chw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn nf_prints_canonical_form() {
    let out = chw(&["nf", "--n", "2", "x1^-1 x2^2 x1 x2^2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "; [0,0]\n");

    let out = chw(&["nf", "--n", "3", "(x1 x2)^2"]);
    assert_eq!(stdout(&out), "x1 x2 x1 x2 ; [0,0,0]\n");

    let out = chw(&["nf", "--n", "2", "x1^3"]);
    assert_eq!(stdout(&out), "x1 ; [1,0]\n");
}

#[test]
fn nf_round_trips_its_own_output() {
    let first = stdout(&chw(&["nf", "--n", "3", "x2^-3 (x1 x3)^2 x2"]));
    let again = stdout(&chw(&["nf", "--n", "3", first.trim()]));
    assert_eq!(first, again);
}

#[test]
fn parse_errors_exit_with_code_two() {
    let out = chw(&["nf", "--n", "2", "x1^"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());

    let out = chw(&["nf", "--n", "2", "x3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = chw(&["apply", "--n", "3", "--auto", "a[1,1]", "x1"]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown flags are usage errors.
    let out = chw(&["nf", "--rank", "2", "x1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_and_induced() {
    let out = chw(&["apply", "--n", "3", "--auto", "a[1,2]", "x1"]);
    assert_eq!(stdout(&out), "x2 x1 x2 ; [0,-1,0]\n");

    let out = chw(&["induced", "--n", "3", "--auto", "a[1,2]"]);
    let text = stdout(&out);
    assert!(text.contains("x1 -> x2 x1 x2"));
    assert!(text.contains("x2 -> x2"));
    assert!(text.contains("-1 0 0"));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let args = ["verify", "--n", "3", "--suite", "all", "--seed", "0", "--json"];
    let first = chw(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = chw(&args);
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");

    let reports: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for report in reports {
        assert_eq!(report["failed"], 0);
        assert_eq!(report["n"], 3);
        assert_eq!(report["seed"], 0);
        assert!(!report["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_text_mode_and_single_suite() {
    let out = chw(&["verify", "--n", "3", "--suite", "monoid"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all checks passed"));

    // Rank below the gate is a usage error, not a verification failure.
    let out = chw(&["verify", "--n", "2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(2));

    // The monoid suite alone accepts rank two.
    let out = chw(&["verify", "--n", "2", "--suite", "monoid"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cohomology_outputs() {
    let out = chw(&["h1", "--n", "4"]);
    assert_eq!(stdout(&out), "Z^8 x (Z/2)^4\n");

    let out = chw(&["h2", "--n", "3"]);
    assert_eq!(stdout(&out), "(Z/2)^3\n");

    let out = chw(&["h1", "--n", "3", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["free_rank"], 3);
    assert_eq!(json["torsion"].as_array().unwrap().len(), 3);

    let out = chw(&["h1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn snf_reads_both_formats() {
    let mut plain = tempfile::NamedTempFile::new().unwrap();
    writeln!(plain, "2 4\n6 8").unwrap();
    let out = chw(&["snf", "--file", plain.path().to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("invariant factors: [2 4]"), "got {text}");
    assert!(text.contains("rank: 2"));

    let mut json_file = tempfile::NamedTempFile::new().unwrap();
    writeln!(json_file, "[[2,4],[6,8]]").unwrap();
    let out = chw(&[
        "snf",
        "--file",
        json_file.path().to_str().unwrap(),
        "--json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["invariant_factors"][0], "2");
    assert_eq!(json["invariant_factors"][1], "4");
    assert_eq!(json["rank"], 2);

    let out = chw(&["snf", "--file", "/nonexistent/matrix.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ball_counts() {
    let out = chw(&["ball", "--n", "2", "--len", "2", "--box", "1"]);
    assert_eq!(stdout(&out), "45\n");
    let out = chw(&["ball", "--n", "3", "--len", "1", "--box", "0"]);
    assert_eq!(stdout(&out), "4\n");
}
