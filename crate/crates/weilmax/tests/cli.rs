//! End-to-end checks of the command-line binary: pinned literal outputs,
//! exit codes, format switching, and config file handling.

use std::process::{Command, Output};

fn weilmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilmax"))
        .args(args)
        .env_remove("LMFDB_BASE_URL")
        .env_remove("LMFDB_CACHE_DIR")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn fg_prints_the_polynomial_literal() {
    let out = weilmax(&["fg", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t^3-5t^2+6t-1\n");
}

#[test]
fn cyclic_prints_exceptions_against_the_bound() {
    let out = weilmax(&["cyclic", "3", "49"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "exceptions: none; a-priori bound: {7}\n");
}

#[test]
fn scan3_markdown_lists_three_classes() {
    let out = weilmax(&["scan3", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let class_rows = text
        .lines()
        .filter(|l| l.starts_with("| maximal_field") || l.starts_with("| exceeder"))
        .count();
    assert_eq!(class_rows, 3, "expected three class rows:\n{text}");
    for needle in ["377", "440", "385", "M_3^0(4)"] {
        assert!(text.contains(needle), "missing {needle}:\n{text}");
    }
}

#[test]
fn hg_row_carries_label_and_points() {
    let out = weilmax(&["hg", "3", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["3.4.h_ba_cl", "377", "t^6+7t^5+26t^4+63t^3+104t^2+112t+64"] {
        assert!(text.contains(needle), "missing {needle}:\n{text}");
    }
}

#[test]
fn minclass_lists_both_tied_classes() {
    let out = weilmax(&["minclass", "3", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3.4.ah_ba_acl") && text.contains("3.4.ag_r_abj"));
}

#[test]
fn json_output_is_machine_readable() {
    let out = weilmax(&["fg", "3", "--format", "json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs[0]["rows"][0]["f_g"], "t^3-5t^2+6t-1");
}

#[test]
fn verify_is_deterministic_and_honors_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("fast.conf");
    std::fs::write(&conf, "scan_q_list = 4, 9\n").unwrap();
    let args = ["verify", "--config", conf.to_str().unwrap(), "--format", "json"];
    let first = weilmax(&args);
    let second = weilmax(&args);
    assert!(first.status.success(), "{}", stdout(&first));
    assert_eq!(first.stdout, second.stdout, "verify output must be reproducible");
    let docs: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let rows = docs[0]["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] == "PASS"));
    assert!(rows.iter().any(|r| r["stage"] == "scan_q9"));
    assert!(rows.iter().all(|r| r["stage"] != "scan_q16"));
}

#[test]
fn usage_errors_exit_with_code_two() {
    assert_eq!(weilmax(&["hg", "3", "7"]).status.code(), Some(2));
    assert_eq!(weilmax(&["fg"]).status.code(), Some(2));
    assert_eq!(weilmax(&["lmfdb-check"]).status.code(), Some(2));
    assert_eq!(weilmax(&["lmfdb-check", "not-a-label"]).status.code(), Some(2));
}

#[test]
fn environment_errors_exit_with_code_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = weilmax(&[
        "lmfdb-check",
        "3.4.h_ba_cl",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3), "offline fetch without cache");
}

#[test]
fn bad_config_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "no_such_key = 1\n").unwrap();
    let out = weilmax(&["fg", "3", "--config", conf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
