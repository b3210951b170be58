//! End-to-end runs of the `dmod` binary.

use std::process::{Command, Output};

fn dmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn bfct_prints_roots_with_multiplicities() {
    let o = dmod(&["bfct", "--ring", "x,y", "--poly", "2*x*y"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().any(|l| l == "roots: (-1, 2)"), "{}", stdout(&o));
}

#[test]
fn json_output_is_structured() {
    let o = dmod(&["bfct", "--ring", "x,y,z", "--poly", "x*y*z*(z-y)*(y+z)", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "bfct");
    assert_eq!(v["ring"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(v["roots"], serde_json::json!([[-3, 2, 1], [-5, 4, 1], [-1, 1, 3], [-3, 4, 1], [-1, 2, 1]]));
}

#[test]
fn annihilator_generators_one_per_line() {
    let o = dmod(&["ann-poly", "--ring", "x,y", "--poly", "2*x*y", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gens: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(gens.len(), 4);
    let text = dmod(&["ann-poly", "--ring", "x,y", "--poly", "2*x*y"]);
    assert_eq!(stdout(&text).lines().collect::<Vec<_>>(), gens);
}

#[test]
fn malformed_input_exits_with_usage_error() {
    let o = dmod(&["bfct", "--ring", "x,y", "--poly", "2*x*"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error [usage]"), "{}", stderr(&o));
    assert_eq!(dmod(&["bfct", "--poly", "x"]).status.code(), Some(1));
    assert_eq!(dmod(&["bfct", "--ring", "x", "--poly", "3"]).status.code(), Some(1));
    assert_eq!(dmod(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn unsupported_branch_exits_with_computation_error() {
    let o = dmod(&["ann-falpha", "--ring", "x,y,z,w", "--poly", "x^2+y^2+z^2+w^2", "--alpha", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("requires SST Alg. 5.3.15"), "{}", stderr(&o));
    let j = dmod(&["ann-falpha", "--ring", "x,y,z,w", "--poly", "x^2+y^2+z^2+w^2", "--alpha", "-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stderr(&j).trim()).unwrap();
    assert_eq!(v["error"], "unsupported");
}

#[test]
fn check_root_takes_roots_of_b() {
    let yes = dmod(&["check-root", "--ring", "x,y", "--poly", "x^2-y^3", "--alpha", "-5/6"]);
    assert_eq!(stdout(&yes), "root: yes\nmultiplicity: 1\n");
    let no = dmod(&["check-root", "--ring", "x,y", "--poly", "x^2-y^3", "--alpha", "5/6"]);
    assert_eq!(stdout(&no), "root: no\nmultiplicity: 0\n");
}

#[test]
fn gb_detects_the_operator_algebra() {
    // Dx*x = x*Dx + 1 only in the Weyl algebra.
    let o = dmod(&["gb", "--ring", "x", "--poly", "Dx*x"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "x*Dx+1\n");
    let o = dmod(&["gb", "--ring", "x", "--poly", "x*Dx-1", "--poly", "Dx^3*x"]);
    assert_eq!(stdout(&o), "Dx^2\nx*Dx-1\n");
    let c = dmod(&["gb", "--ring", "x,y", "--poly", "x^2-1", "--poly", "y-x", "--ord", "lp"]);
    assert_eq!(stdout(&c), "y^2-1\nx-y\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["annfs", "--ring", "x,y", "--poly", "x^3+y^2+x*y^2"];
    let first = dmod(&args);
    assert!(first.status.success());
    for _ in 0..3 {
        assert_eq!(dmod(&args).stdout, first.stdout);
    }
}

#[test]
fn verify_passes_the_built_in_corpus() {
    let o = dmod(&["verify"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.starts_with("SKIP")), "{out}");
}
