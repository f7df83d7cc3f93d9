use std::process::Command;

use serde_json::Value;

fn evenpoint(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_evenpoint"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = evenpoint(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("json output")
}

#[test]
fn legendre_example() {
    let v = json(&[
        "symbols",
        "legendre",
        "--q",
        "5",
        "--class",
        "t^2+4*t+1",
        "--place",
        "t^2+2t+3",
    ]);
    assert_eq!(v["symbol"], "+1");
}

#[test]
fn reciprocity_and_hilbert() {
    let v = json(&[
        "symbols",
        "reciprocity",
        "--q",
        "7",
        "--f-poly",
        "t^3+t+1",
        "--g-poly",
        "t^2+1",
    ]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["lhs"], v["rhs"]);
    let v = json(&["symbols", "hilbert", "--q", "5", "--a", "t", "--b", "2", "--place", "t"]);
    assert_eq!(v["symbol"], "-1");
}

#[test]
fn graph_exports() {
    let v = json(&["graph", "build", "--q", "5", "--max-degree", "2"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    let (code, dot, _) = evenpoint(&["graph", "build", "--q", "3", "--max-degree", "2", "--export", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph"));
    let (_, csv, _) = evenpoint(&["graph", "build", "--q", "5", "--max-degree", "2", "--export", "csv"]);
    let (_, again, _) = evenpoint(&["graph", "build", "--q", "5", "--max-degree", "2", "--export", "csv"]);
    assert_eq!(csv, again);
}

#[test]
fn sing_and_delta_on_curve() {
    let v = json(&["sing", "--model", "curve", "--q", "5", "--f", "x^3-x"]);
    assert_eq!(v["dimension"], 3);
    let v = json(&[
        "delta",
        "--model",
        "curve",
        "--q",
        "5",
        "--f",
        "x^3-x",
        "--removed",
        "x^2+2",
    ]);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn even_check_over_range() {
    let v = json(&["even-check", "--q", "3", "--max-degree", "2"]);
    assert_eq!(v["all_agree"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 7);
}

#[test]
fn density_and_gst() {
    let v = json(&[
        "density", "--q", "5", "--degree", "5", "--class", "t", "--class", "t+1", "--sign", "+", "--sign", "-",
    ]);
    assert!((v["result"]["fraction"].as_f64().unwrap() - 0.25).abs() < 0.05);
    let v = json(&["gst", "--q", "5", "--class", "t"]);
    assert_eq!(v["verdict"]["verdict"], "witness_found");
}

#[test]
fn curve_analyze_reports_zeta() {
    let v = json(&["curve", "analyze", "--q", "3", "--f", "x^5-x+1", "--max-degree", "2"]);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["jacobian_order"], 29);
    assert_eq!(v["zeta"]["order"], 29);
}

#[test]
fn usage_and_bound_errors() {
    assert_eq!(evenpoint(&["sing", "--q", "4"]).0, 2);
    assert_eq!(
        evenpoint(&["symbols", "legendre", "--class", "t", "--place", "t^2+1"]).0,
        2
    );
    assert_eq!(evenpoint(&["curve", "analyze", "--q", "5", "--f", "x^4+1"]).0, 2);
    assert_eq!(evenpoint(&["curve", "analyze", "--q", "11", "--f", "x^3+x+1"]).0, 3);
}

#[test]
fn output_to_file() {
    let path = std::env::temp_dir().join(format!("evenpoint-cli-test-{}.json", std::process::id()));
    let (code, out, _) = evenpoint(&["sing", "--q", "5", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dimension"], 1);
    std::fs::remove_file(path).ok();
}
