use std::process::{Command, Output};

use serde_json::Value;

fn nval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nval"))
        .args(args)
        .env("NVAL_THREADS", "2")
        .output()
        .expect("run nval")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn pn_sigma_all_routes() {
    let out = nval(&["pn", "--n", "3", "--m", "2", "--route", "all", "--basis", "sigma"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["sigma"], "σ1^3 - 27*σ3");
    assert_eq!(v["all_routes_agree"], true);
    assert_eq!(v["routes"].as_array().unwrap().len(), 4);
    assert_eq!(v["command"], "pn");
}

#[test]
fn pn_text_and_single_route() {
    let out = nval(&["pn", "--n", "2", "--m", "3", "--route", "blockpower", "--out", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p_2(z; x1, x2, x3) = σ1^4 - 8*σ1^2*σ2 + 16*σ2^2 - 64*σ4"), "{text}");
}

#[test]
fn pn_skips_oversized_routes() {
    let v = json(&nval(&["pn", "--n", "16", "--basis", "raw"]));
    assert_eq!(v["skipped_routes"], serde_json::json!(["kronecker"]));
    assert_eq!(v["all_routes_agree"], true);
    assert!(v["sigma"].is_null());
}

#[test]
fn output_is_reproducible() {
    let args = ["assoc", "--n", "4", "--samples", "50", "--seed", "99"];
    let a = nval(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_nval")).args(args).env("NVAL_THREADS", "5").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn disc_check_n3() {
    let out = nval(&["disc-check", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["constant_abs"], "16");
    assert_eq!(v["ok"], true);
}

#[test]
fn factor_coeffs_small_table() {
    let out = nval(&["factor-coeffs", "--n", "5", "--out", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, ["(5,0,0) -> 1", "(2,0,1) -> - 5^4", "(0,1,1) -> 5^5"]);
}

#[test]
fn wendt_values_and_symmetries() {
    let v = json(&nval(&["wendt", "--n", "4", "--m", "2"]));
    assert_eq!(v["det_matrix"], "-375");
    assert_eq!(v["agree"], true);
    assert_eq!(v["helou"]["ok"], true);
    assert_eq!(v["wendt_mn"]["orthosymmetric"], true);

    let out = nval(&["wendt", "--n", "3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["wendt_mn"]["w_persymmetric"], true);
    assert_eq!(v["wendt_mn"]["w_symmetric"], false);
}

#[test]
fn divis_and_usage_errors() {
    let out = nval(&["divis", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["divisibility"]["divisible_by_n4"], true);
    assert_eq!(v["divisibility"]["divisible_by_n5"], false);
    assert_eq!(v["weighted_binomial_sum"]["lhs"], "625");

    assert_eq!(nval(&["divis", "--n", "9"]).status.code(), Some(2));
    assert_eq!(nval(&["pn", "--n", "3", "--route", "bogus"]).status.code(), Some(2));
    assert_eq!(nval(&["irred"]).status.code(), Some(2));
    assert_eq!(nval(&["wendt-criterion", "--p", "3", "--k", "4"]).status.code(), Some(2));
}

#[test]
fn irreducibility_inputs() {
    let v = json(&nval(&["irred", "--coeffs", "-1,0,1"]));
    assert_eq!(v["certificate"]["status"], "Reducible");
    let v = json(&nval(&["irred", "--pn", "2", "--args", "2,3", "--zpow", "2"]));
    assert_eq!(v["input"]["coeffs"], serde_json::json!(["1", "0", "-10", "0", "1"]));
    assert_eq!(v["certificate"]["status"], "Irreducible");
    let poly = r#"{"vars":["t"],"terms":[{"exp":[2],"coeff":"1"},{"exp":[1],"coeff":"-10"},{"exp":[0],"coeff":"1"}]}"#;
    let v = json(&nval(&["irred", "--poly", poly]));
    assert_eq!(v["certificate"]["method"], "degree-patterns");
}

#[test]
fn campaigns_and_criterion() {
    let v = json(&nval(&["family-check", "--family", "p2", "--samples", "100"]));
    assert_eq!(v["summary"]["failed"], 0);
    let v = json(&nval(&["wendt-criterion", "--q-limit", "60"]));
    assert_eq!(v["all_agree"], true);
    let out = nval(&["compose-check", "--f", "1,-2", "--g", "0,3,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["all_agree"], true);
}
