use std::process::{Command, Output};

use serde_json::Value;

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("run casimir")
}

fn casimir_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .env("CASIMIR_THREADS", threads)
        .output()
        .expect("run casimir")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    serde_json::from_str(&stdout(&casimir(&all))).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

#[test]
fn exit_codes() {
    let o = casimir(&["energy", "--triangle", "2,3,6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not hyperbolic"));

    let o = casimir(&["hyperbolic", "--spectrum-file", "/nonexistent/lengths.csv"]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(
        casimir(&["energy", "--triangle", "2,3,7", "--terms", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(casimir(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        casimir_threads(&["tail", "--j-hi", "100"], "zero")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_spectrum_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "# lengths\n1.0,2\n2.0,x\n").unwrap();
    let o = casimir(&["hyperbolic", "--spectrum-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let o = casimir(&[
        "energy",
        "--triangle",
        "2,3,7",
        "--tail-j-hi",
        "100000",
        "--output",
        "json",
    ]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
}

#[test]
fn energy_json_fields() {
    let v = json(&["energy", "--triangle", "2,3,7", "--tail-j-hi", "100000"]);
    assert!((num(&v["elliptic"]["value"]) - 0.875_676).abs() < 5e-7);
    assert!((num(&v["hyperbolic"]["value"]) - -0.568_085_1).abs() < 1e-6);
    assert_eq!(v["spectrum"]["total_multiplicity"], 51);
    assert_eq!(v["assumption"]["verified_through"], 51);
    let c = &v["hyperbolic"]["components"];
    let total = num(&c["b1"]) + num(&c["b2"]) + num(&c["b3"]);
    assert!((total - num(&v["hyperbolic"]["tail_bound"])).abs() < 1e-9);
}

#[test]
fn tail_constants() {
    let v = json(&["tail", "--j-hi", "10000000"]);
    assert!((num(&v["b1"]) - 0.138_415).abs() < 1e-5);
    assert!((num(&v["b2"]) - 0.155_402).abs() < 1e-5);
    assert!((num(&v["b3"]) - 0.000_075).abs() < 5e-6);
    assert!((num(&v["constants"]["b2_prefactor"]) - 0.311_949).abs() < 1e-5);
}

#[test]
fn cone_free_elliptic_is_zero() {
    let v = json(&["elliptic", "--volume", "12.5"]);
    assert_eq!(num(&v["value"]), 0.0);
    assert_eq!(v["signature"]["cone_orders"], Value::Array(vec![]));
}

#[test]
fn identity_lies_in_interval() {
    let v = json(&["identity", "--volume", "0.1495996"]);
    assert_eq!(v["inside_interval"], Value::Bool(true));
    let (lo, hi) = (num(&v["interval"][0]), num(&v["interval"][1]));
    let x = num(&v["value"]);
    assert!(lo < x && x < hi);
}

#[test]
fn enumerated_spectrum_csv() {
    let text = stdout(&casimir(&[
        "spectrum",
        "--enumerate",
        "12",
        "--output",
        "csv",
    ]));
    let first = text.lines().next().unwrap();
    let (len, mult) = first.split_once(',').unwrap();
    assert!((len.parse::<f64>().unwrap() - 0.983_987).abs() < 1e-6);
    assert_eq!(mult, "1");
}

#[test]
fn spectrum_file_matches_table() {
    let csv = stdout(&casimir(&["spectrum", "--output", "csv"]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    std::fs::write(&path, &csv).unwrap();
    let from_file = json(&["hyperbolic", "--spectrum-file", path.to_str().unwrap()]);
    let from_table = json(&["hyperbolic"]);
    assert_eq!(from_file["value"], from_table["value"]);
    assert_eq!(from_file["spectrum"]["provenance"], "file");
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = [
        "energy",
        "--triangle",
        "2,3,7",
        "--enumerate",
        "10",
        "--tail-j-hi",
        "300000",
        "--output",
        "json",
    ];
    let one = stdout(&casimir_threads(&args, "1"));
    let four = stdout(&casimir_threads(&args, "4"));
    assert_eq!(one, four);
}

#[test]
fn verify_reports_both_tails() {
    let text = stdout(&casimir(&["verify-237"]));
    assert!(text.contains("certified lower bound"));
    assert!(text.contains("lower bound, stated tail"));
}
