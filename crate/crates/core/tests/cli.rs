use std::process::Command;

use lscat::cli::{run, Output, EXIT_CERT, EXIT_COMPUTE, EXIT_OK, EXIT_USAGE};

fn lscat(args: &[&str]) -> Output {
    run(std::iter::once("lscat").chain(args.iter().copied()))
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("lscat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn cat_prints_value_and_traces() {
    let out = lscat(&["cat", "L(5,1) # T3"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "cat = 3");
    assert!(lines[1].starts_with("upper: DIM[3]"));
    assert!(lines[2].starts_with("lower: PULLBACK[3]"));
}

#[test]
fn cat_verify_and_check_round_trip() {
    let out = lscat(&["cat", "S1~S2 # L(3,1)", "--cert", "--verify"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("certificate verified\n"));
    let start = out.stdout.find("certificate v1").unwrap();
    let end = out.stdout.find("catalog fact").or(out.stdout.find("certificate verified")).unwrap();
    let cert = &out.stdout[start..end];
    let path = temp_file("cover.cert", cert);
    let out = lscat(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);

    let bad = temp_file("bad.cert", &cert.replacen("bound=3", "bound=2", 1));
    let out = lscat(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_CERT);
    assert!(out.stdout.contains("violation:"));
    assert!(out.stdout.ends_with("certificate REJECTED\n"));
}

#[test]
fn catalog_facts_are_listed() {
    let out = lscat(&["cat", "Poinc", "--verify"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("catalog fact:"));
}

#[test]
fn ganea_reports_product_value() {
    let out = lscat(&["ganea", "RP2xS1", "--n", "2", "--verify"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("cat(M x S^2) = 4\n"));
}

#[test]
fn generated_complex_feeds_back_in() {
    let dcx = lscat(&["gen", "T3"]);
    assert_eq!(dcx.code, EXIT_OK);
    let path = temp_file("t3.dcx", &dcx.stdout);
    let p = path.to_str().unwrap();
    assert_eq!(lscat(&["homology", p, "--coeffs", "Z"]).stdout, lscat(&["homology", "T3", "--coeffs", "Z"]).stdout);
    assert_eq!(lscat(&["cat", p]).stdout.lines().next(), Some("cat = 3"));
    let cl = lscat(&["cuplength", p]);
    assert!(cl.stdout.starts_with("cl = 3\nwitness: "));
    let pi1 = lscat(&["pi1", p]);
    assert!(pi1.stdout.starts_with("computed = InfiniteNonFree"), "{}", pi1.stdout);
}

#[test]
fn homology_table() {
    let out = lscat(&["homology", "L(7,3)", "--coeffs", "Z"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("Z/7"), "{}", out.stdout);
    let jobs = lscat(&["homology", "L(7,3)", "--coeffs", "Z", "--jobs", "4"]);
    assert_eq!(out.stdout, jobs.stdout);
}

#[test]
fn detect_and_degree_one() {
    let out = lscat(&["detect", "S1~S2 # L(3,1)"]);
    assert!(out.stdout.starts_with("unknown"));
    assert!(out.stdout.contains("double cover"));
    assert!(lscat(&["detect", "RP3"]).stdout.starts_with("detectable"));
    let out = lscat(&["degree1", "S1xS2", "T3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("no degree-one map"), "{}", out.stdout);
}

#[test]
fn ring_table_lists_products() {
    let out = lscat(&["ring", "RP3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("fundamental class: 1"), "{}", out.stdout);
}

#[test]
fn exit_codes() {
    let out = lscat(&["cat", "L(4,2)"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("expressions:"));
    assert_eq!(lscat(&["cat", "T3 # # S3"]).code, EXIT_USAGE);
    assert_eq!(lscat(&["cat", "Foo"]).code, EXIT_USAGE);
    assert_eq!(lscat(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(lscat(&["homology", "T3", "--coeffs", "1"]).code, EXIT_USAGE);
    assert_eq!(lscat(&["homology", "Poinc"]).code, EXIT_COMPUTE);
    assert_eq!(lscat(&["cat", "/nonexistent/x.dcx"]).code, EXIT_USAGE);
    assert_eq!(lscat(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_uses_the_same_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lscat");
    let ok = Command::new(bin).args(["ganea", "RP3", "--n", "1", "--verify"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("cat(M x S^1) = 4"));
    let bad = Command::new(bin).args(["cat", "L(4,2)"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
