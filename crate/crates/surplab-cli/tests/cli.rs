//! End-to-end checks of the binary: exit codes, file handling, report
//! shape.

use std::path::PathBuf;
use std::process::{Command, Output};

fn surplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surplab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("surplab-cli-test-{name}"))
}

#[test]
fn maxcut_on_triangle_file() {
    let path = tmp("k3.txt");
    std::fs::write(&path, "n 3\n0 1\n0 2\n1 2\n").unwrap();
    let out = surplab(&["maxcut", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("maxcut value: 2"), "{stdout}");
    assert!(stdout.contains("surplus: 0.5"), "{stdout}");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn gen_then_stability_roundtrip() {
    let path = tmp("cliques.txt");
    let out = surplab(&[
        "gen",
        "--family",
        "disjoint_cliques",
        "--sizes",
        "15,15,15,15",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = surplab(&[
        "stability",
        "--input",
        path.to_str().unwrap(),
        "--clique-target",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0), "exact clique union certifies");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("certified"), "{stdout}");
    assert!(stdout.contains("edit distance 0"), "{stdout}");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn stability_rejects_noise_with_exit_2() {
    let out = surplab(&[
        "stability",
        "--gen",
        r#"{"family":"gnp","n":60,"p":0.5,"seed":1}"#,
        "--clique-target",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("not certified"), "{stdout}");
}

#[test]
fn malformed_input_is_exit_1_with_line() {
    let path = tmp("bad.txt");
    std::fs::write(&path, "n 3\n0 1\n0 zero\n").unwrap();
    let out = surplab(&["maxcut", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 3"), "{stderr}");
    std::fs::remove_file(&path).unwrap();

    let out = surplab(&["maxcut", "--input", "/nonexistent/ग.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_params_are_exit_1_with_field() {
    let out = surplab(&[
        "extract",
        "--gen",
        r#"{"family":"complete","n":8}"#,
        "--eps",
        "0.7",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("eps"), "{stderr}");

    let out = surplab(&["gen", "--family", "paley", "--q", "7"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains('q'), "{stderr}");
}

#[test]
fn verify_suite_exit_codes_and_json() {
    let json = tmp("verify.json");
    let out = surplab(&[
        "verify",
        "--suite",
        "weyl",
        "--count",
        "25",
        "--seed",
        "1",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("suite weyl: 25/25 pass"), "{stdout}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["schema"], "surplab.report/1");
    assert_eq!(report["command"], "verify");
    assert_eq!(report["findings"]["type"], "verify");
    assert!(report["timing"]["seconds"].is_number());
    std::fs::remove_file(&json).unwrap();

    let out = surplab(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn certify_and_spectrum_run() {
    let out = surplab(&[
        "certify",
        "--gen",
        r#"{"family":"clique_minus_matching","n":10}"#,
        "--rank",
        "4",
        "--iters",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("NegEigenSum"), "{stdout}");
    assert!(stdout.contains("feasible: true"), "{stdout}");

    let out = surplab(&["spectrum", "--gen", r#"{"family":"complete","n":6}"#]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("interlacing: ok=true"), "{stdout}");
}

#[test]
fn extract_master_reports_stages() {
    let out = surplab(&[
        "extract",
        "--gen",
        r#"{"family":"disjoint_cliques","sizes":[20,20,20]}"#,
        "--mode",
        "master",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("clique: size 20"), "{stdout}");
}

#[test]
fn gen_stdout_is_canonical_text() {
    let out = surplab(&["gen", "--family", "paley", "--q", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("n 5\n"), "{stdout}");
    assert_eq!(stdout.lines().count(), 6, "header plus five edges");
}

#[test]
fn workers_flag_agrees_with_serial() {
    let gen = r#"{"family":"gnp","n":18,"p":0.5,"seed":9}"#;
    let a = surplab(&["maxcut", "--gen", gen]);
    let b = surplab(&["maxcut", "--gen", gen, "--workers", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(a.stdout).unwrap(),
        String::from_utf8(b.stdout).unwrap()
    );
}

#[test]
fn help_exits_zero() {
    let out = surplab(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
