use std::process::{Command, Output};

use serde_json::Value;

fn k3theta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3theta")).args(args).output().expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = k3theta(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn value(v: &Value) -> (f64, f64) {
    (v["value"][0].as_f64().unwrap(), v["value"][1].as_f64().unwrap())
}

#[test]
fn d90_at_t10_axis() {
    let v = json_ok(&["eval", "d90", "--at", "0,0,1,0,0"]);
    assert_eq!(value(&v), (3125.0, 0.0));
}

#[test]
fn burkhardt_b4_at_first_axis() {
    let v = json_ok(&["eval", "burkhardt", "--weight", "4", "--at", "1,0,0,0,0"]);
    assert_eq!(value(&v), (1.0, 0.0));
}

#[test]
fn b18_series_vanishes_on_diagonal() {
    let v = json_ok(&["qexp", "burkhardt", "--weight", "18", "--locus", "z=w"]);
    assert_eq!(v, serde_json::json!([]));
}

#[test]
fn dk_theta_leading_term() {
    let v = json_ok(&["qexp", "dk-theta", "--k", "1", "--locus", "z=w", "--order", "1"]);
    let first = &v[0];
    assert_eq!(first["c"], "3");
    assert_eq!(first["e1"], "1/3");
    assert_eq!(first["e2"], "0");
    assert_eq!(first["u"], 0);
}

#[test]
fn molien_prefix() {
    let v = json_ok(&["molien", "--max-degree", "12"]);
    let got: Vec<&str> = v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(got, ["1", "0", "0", "0", "1", "0", "1", "0", "1", "0", "2", "0", "3"]);
}

#[test]
fn theta_matches_negated_z() {
    // θ_j(τ, z, τ') is even in z for even characteristics
    let a = json_ok(&["eval", "theta", "--index", "3", "--tau", "0.1+1.1i", "--z", "0.2+0.3i", "--tau-prime", "-0.2+1.3i"]);
    let b = json_ok(&["eval", "theta", "--index", "3", "--tau", "0.1+1.1i", "--z", "-0.2-0.3i", "--tau-prime", "-0.2+1.3i"]);
    let (ar, ai) = value(&a);
    let (br, bi) = value(&b);
    assert!((ar - br).abs() < 1e-12 && (ai - bi).abs() < 1e-12);
}

#[test]
fn inverse_period_flags_diagonal() {
    let v = json_ok(&[
        "eval", "inverse-period", "--tau", "0.1+1.2i", "--z", "0.05+0.1i", "--w", "0.05+0.1i", "--tau-prime", "-0.1+1.1i",
    ]);
    assert_eq!(v["t18_vanishes"], true);
    let v = json_ok(&[
        "eval", "inverse-period", "--tau", "0.1+1.2i", "--z", "0.05+0.1i", "--w", "0.2-0.1i", "--tau-prime", "-0.1+1.1i",
    ]);
    assert_eq!(v["t18_vanishes"], false);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "invariants", "--samples", "3", "--seed", "7"];
    let a = k3theta(&args);
    let b = k3theta(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports: Value = serde_json::from_slice(&a.stdout).unwrap();
    for r in reports.as_array().unwrap() {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["runtime_ms"], 0);
    }
}

#[test]
fn failing_check_exits_one() {
    // a tolerance no floating-point residual can meet
    let out = k3theta(&["verify", "theta", "--samples", "2", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.as_array().unwrap().iter().any(|r| r["status"] == "fail"));
}

#[test]
fn inadmissible_input_exits_two() {
    let cases: [&[&str]; 5] = [
        &["eval", "theta", "--index", "1", "--tau", "1i", "--z", "2i", "--tau-prime", "1i"],
        &["eval", "theta", "--index", "1", "--tau", "1i", "--z", "0", "--tau-prime", "1i", "--radius", "0"],
        &["eval", "theta", "--index", "11", "--tau", "1i", "--z", "0", "--tau-prime", "1i"],
        &["eval", "burkhardt", "--weight", "5", "--at", "1,0,0,0,0"],
        &["eval", "d90", "--at", "1,2,3"],
    ];
    for args in cases {
        let out = k3theta(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    assert_eq!(k3theta(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(k3theta(&["eval", "theta", "--tau", "1i"]).status.code(), Some(2));
}
