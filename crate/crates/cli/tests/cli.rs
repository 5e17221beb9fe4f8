//! End-to-end runs of the `fpure` binary.

use std::process::{Command, Output};

use fpure::poly::{parse_ideal, parse_polynomial, parse_ring};
use fpure::{DetFamily, DetIdealSpec};
use serde_json::Value;

fn fpure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpure")).args(args).env_remove("FPURE_FORMAT").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    fpure(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = fpure(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn documented_exit_codes() {
    assert_eq!(code(&["check", "symbolic-fpure", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "2"]), 0);
    assert_eq!(code(&["check", "symbolic-fpure", "--ideal", "example-5.10", "-p", "3"]), 1);
    assert_eq!(code(&["check", "initial-equality", "--family", "pfaffian", "-r", "5", "-t", "2", "-n", "2", "-p", "5"]), 0);
    assert_eq!(code(&["check", "fedder", "--ideal", "example-5.10"]), 0);
    assert_eq!(code(&["check", "compare-powers", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "2"]), 1);
}

#[test]
fn usage_and_budget_errors_exit_2() {
    assert_eq!(code(&["check", "symbolic-fpure", "--family", "generic", "-r", "2", "-s", "3", "-t", "3", "-p", "2"]), 2);
    assert_eq!(code(&["check", "symbolic-fpure"]), 2);
    assert_eq!(code(&["check", "rees-fpure", "--ideal", "triangle"]), 2);
    assert_eq!(code(&["check", "no-such-criterion"]), 2);
    assert_eq!(code(&["check", "fedder", "--family", "generic", "-r", "2", "-s", "3", "-t", "2", "-p", "4"]), 2);
    let over = ["--max-spairs", "5", "check", "symbolic-fpure", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "3"];
    assert_eq!(code(&over), 2);
    assert!(String::from_utf8(fpure(&over).stdout).unwrap().contains("budget-exceeded"));
}

#[test]
fn parse_errors_carry_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "ring p=3 vars x,y; order grevlex;\nx*y +* y").unwrap();
    let out = fpure(&["check", "fedder", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn ideal_files_and_builtins() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.txt");
    std::fs::write(&path, "ring p=2 vars x,y,z; order grevlex; x*y, y*z, x*z").unwrap();
    let file = json(&["check", "symbolic-fpure", "--ideal", path.to_str().unwrap()]);
    let builtin = json(&["check", "symbolic-fpure", "--ideal", "triangle"]);
    assert_eq!(file["verdict"], "holds");
    assert_eq!(file["witness"], builtin["witness"]);
    assert_eq!(file["witness"], "x*y*z");
    // -p must agree with the file
    assert_eq!(code(&["check", "fedder", "--ideal", path.to_str().unwrap(), "-p", "3"]), 2);
}

/// Every polynomial in `v` re-parses in `ring` to one printing the same.
fn assert_round_trip(ring: &str, polys: &[Value]) {
    let ring = parse_ring(ring).unwrap();
    for p in polys {
        let s = p.as_str().unwrap();
        assert_eq!(parse_polynomial(&ring, s).unwrap().to_string(), s);
    }
}

#[test]
fn printed_polynomials_re_parse() {
    let cases: &[&[&str]] = &[
        &["compute", "symbolic-power", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "3", "-n", "2"],
        &["compute", "pfaffians", "--family", "pfaffian", "-r", "5", "-t", "2", "-p", "3"],
        &["compute", "minors", "--family", "symmetric", "-r", "3", "-t", "2", "-p", "5"],
        &["compute", "initial-ideal", "--family", "hankel", "-c", "5", "-t", "2", "-p", "5", "-n", "2"],
        &["compute", "ordinary-power", "--ideal", "example-5.10", "-n", "2"],
        &["compute", "squarefree-symbolic", "--ideal", "triangle", "-n", "3"],
    ];
    for args in cases {
        let v = json(args);
        let r = &v["result"];
        assert_round_trip(r["ring"].as_str().unwrap(), r["generators"].as_array().unwrap());
        // the text rendering is itself an ideal file
        let text = stdout(args);
        let (_, gens) = parse_ideal(&text).unwrap();
        let printed: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        let expected: Vec<String> = r["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect();
        assert_eq!(printed, expected, "{args:?}");
    }
}

#[test]
fn witnesses_re_parse_to_the_family_polynomial() {
    let v = json(&["check", "corh", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "2"]);
    let fam = DetFamily::new(DetIdealSpec::generic(3, 3, 2), 2).unwrap();
    let w = parse_polynomial(fam.ring(), v["witness"].as_str().unwrap()).unwrap();
    assert_eq!(w.to_string(), fam.witness_t().unwrap().to_string());

    let v = json(&["compute", "witness", "--family", "pfaffian", "-r", "5", "-t", "2", "-p", "3"]);
    let fam = DetFamily::new(DetIdealSpec::pfaffian(5, 2), 3).unwrap();
    let ring = parse_ring(v["result"]["ring"].as_str().unwrap()).unwrap();
    let w = parse_polynomial(&ring, v["result"]["polynomial"].as_str().unwrap()).unwrap();
    assert_eq!(w.to_string(), fam.witness(2).unwrap().to_string());

    let v = json(&["compute", "rees-presentation", "--family", "generic", "-r", "2", "-s", "3", "-t", "2", "-p", "3"]);
    assert_eq!(v["result"]["within_bound"], true);
    assert_round_trip(v["result"]["ring"].as_str().unwrap(), v["result"]["equations"].as_array().unwrap());
}

#[test]
fn reports_are_deterministic() {
    let runs: &[&[&str]] = &[
        &["--no-timings", "--format", "json", "check", "symbolic-fpure", "--family", "hankel", "-c", "5", "-t", "2", "-p", "2"],
        &["--no-timings", "--format", "json", "--jobs", "3", "reproduce", "paper-examples", "--only", "ex5.10,waldschmidt,compare-powers"],
        &["compute", "depth", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "2", "--max-n", "2"],
        &["compute", "betti", "--ideal", "example-5.10", "-p", "5"],
    ];
    for args in runs {
        let a = fpure(args);
        let b = fpure(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn reproduce_single_item() {
    let v = json(&["reproduce", "paper-examples", "--only", "ex5.10"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
    assert_eq!(v["records"][0]["id"], "ex5.10");
    let text = stdout(&["reproduce", "paper-examples", "--only", "ex5.10", "--format", "text"]);
    assert!(text.starts_with("PASS ex5.10"), "{text}");
    assert_eq!(code(&["reproduce", "paper-examples", "--only", "nope"]), 2);
}

#[test]
fn format_follows_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fpure"))
        .args(["compute", "degree-bound", "--family", "hankel", "-c", "4", "-t", "2"])
        .env("FPURE_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"].as_array().unwrap().len(), 8);
}

#[test]
fn depth_table_and_single_values() {
    let v = json(&["compute", "depth", "--family", "generic", "-r", "3", "-s", "3", "-t", "2", "-p", "2", "--max-n", "2"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["depth"], 5);
    assert_eq!(rows[1]["depth"], 3);
    assert_eq!(stdout(&["compute", "reg", "--ideal", "triangle"]).trim(), "1");
    assert_eq!(stdout(&["compute", "depth", "--ideal", "triangle"]).trim(), "1");
}
