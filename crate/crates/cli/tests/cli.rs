//! End-to-end checks of the binary: flags, exit codes, determinism, and the
//! exact output strings pinned by the interface.

use std::process::{Command, Output};

fn openbps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_openbps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn vertex_w_prints_the_canonical_form() {
    let out = openbps(&["vertex-w", "[1]", "[]", "[]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1/(x - x^-1)");
}

#[test]
fn char_prints_the_integer() {
    let out = openbps(&["char", "[2,1]", "[1,1,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
    let bad = openbps(&["char", "[2]", "[1]"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn bps_run_is_integral_and_deterministic() {
    let a = openbps(&[
        "bps",
        "--geometry",
        "c3-brane(0)",
        "--max-degree",
        "3",
        "--workers",
        "1",
    ]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let b = openbps(&[
        "bps",
        "--geometry",
        "c3-brane(0)",
        "--max-degree",
        "3",
        "--workers",
        "4",
    ]);
    assert_eq!(stdout(&a), stdout(&b), "reports must not depend on workers");
    assert!(stdout(&a).contains("\"all_pass\": true"));
    let no_cache = openbps(&[
        "bps",
        "--geometry",
        "c3-brane(0)",
        "--max-degree",
        "3",
        "--no-cache",
    ]);
    assert_eq!(stdout(&a), stdout(&no_cache));
}

#[test]
fn csv_and_json_agree_on_the_numbers() {
    let json = openbps(&["bps", "--geometry", "c3-brane(1)", "--max-degree", "2"]);
    let csv = openbps(&[
        "bps",
        "--geometry",
        "c3-brane(1)",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    let j = stdout(&json);
    let c = stdout(&csv);
    // Genus-0 values for windings [1], [1,1], [2] at framing 1.
    assert!(j.contains("\"0\": \"1\""));
    assert!(c.contains("1;[1];0:1"));
    assert!(c.contains("2;[1,1];0:-1"));
    assert!(c.contains("2;[2];0:-1"));
}

#[test]
fn class_filter_selects_rows() {
    let out = openbps(&[
        "bps",
        "--geometry",
        "conifold-brane(0)",
        "--max-degree",
        "2",
        "--class",
        "1,1",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).filter(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("1,1;[1];"));
}

#[test]
fn geometry_files_round_trip_through_the_binary() {
    let dir = std::env::temp_dir().join("openbps-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("strip.json");
    let emitted = openbps(&["emit", "--geometry", "strip-2(1)"]);
    assert!(emitted.status.success());
    std::fs::write(&path, stdout(&emitted)).unwrap();
    let from_file = openbps(&[
        "bps",
        "--geometry",
        path.to_str().unwrap(),
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    let from_builtin = openbps(&[
        "bps",
        "--geometry",
        "strip-2(1)",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&from_builtin));
}

#[test]
fn negative_framing_flag_is_accepted() {
    let by_flag = openbps(&[
        "bps",
        "--geometry",
        "c3-brane",
        "--framing",
        "-2",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    assert!(by_flag.status.success(), "{}", String::from_utf8_lossy(&by_flag.stderr));
    let by_name = openbps(&[
        "bps",
        "--geometry",
        "c3-brane(-2)",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&by_flag), stdout(&by_name));
}

#[test]
fn unknown_geometry_lists_the_catalog() {
    let out = openbps(&["bps", "--geometry", "banana", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("conifold"), "{err}");
    assert!(err.contains("c3-brane"), "{err}");
}

#[test]
fn semi_projective_mode_is_rejected() {
    let out = openbps(&[
        "openclosed",
        "--geometry",
        "c3-brane(0)",
        "--semi-projective",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("equivariant"), "{err}");
}

#[test]
fn openclosed_reports_the_identity() {
    let out = openbps(&[
        "openclosed",
        "--geometry",
        "conifold-brane(1)",
        "--max-degree",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"correspondence_identity_holds\": true"));
    assert!(text.contains("\"fan_fourfold\""));
}

#[test]
fn scoped_verify_passes_and_reports_lines() {
    let out = openbps(&[
        "verify",
        "--geometry",
        "conifold",
        "--max-degree",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.is_empty() || l.starts_with("PASS")));
}
