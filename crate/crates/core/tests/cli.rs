use std::path::PathBuf;
use std::process::{Command, Output};

use ratcurve::report::CurveReport;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn analyze_cubic() {
    let path = fixture("cuspidal_cubic");
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report = CurveReport::from_json(&text).unwrap();
    assert_eq!(report.to_json() + "\n", text);
    assert_eq!(report.invariants.tau, 2);
    assert_eq!(report.invariants.verdict.unwrap().exponents, Some([1, 2]));
    assert_eq!(report.cuspidality.status, "cuspidal");
    assert!(report.cross_checks.iter().all(|c| c.pass));
}

#[test]
fn analyze_text_and_flags() {
    let path = fixture("quartic_e6_a");
    let o = run(&["analyze", path.to_str().unwrap(), "--text", "--skip-dual", "--max-q", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("kind: nearly free"));
    assert!(text.contains("dual: -"));
    assert!(text.contains("a_seq: [0, 2, 6, 14, 25, 39, 56]"));
}

#[test]
fn analyze_deep() {
    let path = fixture("cuspidal_cubic");
    let v = json(&run(&["analyze", path.to_str().unwrap(), "--deep"]));
    let tilde = v["tilde_kernels"].as_array().unwrap();
    assert_eq!(tilde.len(), 2);
    assert_eq!(tilde[0]["k1"], 2);
    assert_eq!(tilde[1]["k2"], 4);
}

#[test]
fn exit_codes() {
    let o = run(&["analyze", fixture("improper_double_conic").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("improper: e = 2"));
    let o = run(&["analyze", fixture("invalid_common_factor").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["implicitize", "/nonexistent/curve.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["pullback", fixture("quintic_free").to_str().unwrap(), "--point", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn subcommands() {
    let quintic = fixture("quintic_free");
    let q = quintic.to_str().unwrap();
    assert_eq!(json(&run(&["pullback", q, "--point", "1,0,0"]))["pullback"], "t^2");
    assert_eq!(json(&run(&["pullback", q, "--point", "0,0,1"]))["pullback"], "s^3");
    let v = json(&run(&["freeness", q]));
    assert_eq!(v["verdict"], "free");
    assert_eq!(v["exponents"], serde_json::json!([2, 2]));
    let v = json(&run(&["tjurina", q]));
    assert_eq!((v["tau"].as_u64(), v["delta"].as_u64()), (Some(12), Some(6)));
    let cubic = fixture("cuspidal_cubic");
    let c = cubic.to_str().unwrap();
    assert_eq!(json(&run(&["implicitize", c]))["equation"], "x*z^2 - y^3");
    assert_eq!(json(&run(&["mubasis", c]))["mu"], serde_json::json!([1, 2]));
    let v = json(&run(&["dual", c]));
    assert_eq!(v["equation"], "27*u*w^2 + 4*v^3");
    assert_eq!(v["lines"][0]["line"], "u");
    let v = json(&run(&["cuspidal", fixture("nodal_cubic").to_str().unwrap()]));
    assert_eq!(v["status"], "not cuspidal");
    let o = run(&["forms", c, "--q", "3", "--text"]);
    assert_eq!(stdout(&o), "q: 3\nc0: 1\nc1: 2\nc2: 1\na: 17\n");
}

#[test]
fn nonic_freeness() {
    let v = json(&run(&["freeness", fixture("nonic_ordinary").to_str().unwrap()]));
    assert_eq!(v["verdict"], "neither");
    assert_eq!(v["mdr"], 2);
}

#[test]
fn octic_forms_threshold() {
    let f = fixture("octic_nearly_free");
    let at = |q: &str| json(&run(&["forms", f.to_str().unwrap(), "--q", q]))["c1"].as_u64().unwrap();
    assert_eq!(at("7"), 43);
    assert_eq!(at("8"), 42);
}
