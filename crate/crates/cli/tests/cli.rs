use std::process::{Command, Output};

use minrem::singfun::f_closed;
use minrem::{CubicNumber, Rational};

fn minrem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minrem"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = minrem(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    minrem(args).status.code().unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn expand_forms() {
    assert_eq!(
        stdout(&["expand", "5", "7", "mrcf"]).trim(),
        "1; -1/3, +1/2"
    );
    assert_eq!(stdout(&["expand", "1", "2", "ocf"]).trim(), "0; 2");
    let rr = stdout(&["expand", "1", "3", "rrcf"]);
    let lines: Vec<&str> = rr.lines().collect();
    assert!(lines[0].starts_with('#'));
    assert_eq!(lines[1], "1; 2, 2");
    assert_eq!(stdout(&["expand", "-5", "7", "ocf"]).trim(), "-1; 3, 2");
}

#[test]
fn expand_errors_are_usage_errors() {
    assert_eq!(code(&["expand", "1", "0", "ocf"]), 2);
    assert_eq!(code(&["expand", "1", "-3", "ocf"]), 2);
    assert_eq!(code(&["expand", "3", "2", "mrcf"]), 2);
    assert_eq!(code(&["expand", "-1", "2", "rrcf"]), 2);
    assert_eq!(code(&["expand", "x", "2", "ocf"]), 2);
    assert_eq!(code(&["expand", "1", "2", "bogus"]), 2);
}

#[test]
fn expand_json_is_structured() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "expand", "5", "7", "mrcf"])).unwrap();
    assert_eq!(v["x"], "5/7");
    assert_eq!(v["text"], "1; -1/3, +1/2");
    assert_eq!(v["cf"]["a0"], "1");
    assert_eq!(v["cf"]["terms"][0]["eps"], "Minus");
    assert_eq!(v["cf"]["terms"][0]["a"], "3");
}

#[test]
fn convert_and_convergents() {
    assert_eq!(
        stdout(&["convert", "0; 1, 2, 1, 3"]).trim(),
        "1; -1/4, -1/4"
    );
    let rows = csv_rows(&stdout(&["convergents", "1; -1/3, +1/2"]));
    let last: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(last, ["1/1", "2/3", "5/7"]);
    assert_eq!(code(&["convergents", "0; +1/1"]), 2);
}

#[test]
fn levels_tables() {
    let rows = csv_rows(&stdout(&["levels", "X", "3"]));
    let fracs: Vec<String> = rows.iter().map(|r| format!("{}/{}", r[1], r[2])).collect();
    assert_eq!(fracs, ["1/4", "2/5", "2/3"]);
    assert!(rows.iter().all(|r| r[0] == "3" && r[3] == "4"));
    assert_eq!(csv_rows(&stdout(&["levels", "Z", "4"])).len(), 10);
    assert_eq!(csv_rows(&stdout(&["levels", "F", "2"])).len(), 5);
    let header = stdout(&["levels", "F", "1"]);
    assert_eq!(header.lines().next().unwrap(), "level,p,q,S,x_float");
}

#[test]
fn level_guard() {
    assert_eq!(code(&["levels", "Z", "19"]), 2);
    assert_eq!(code(&["levels", "Z", "3", "--max-level", "2"]), 2);
    assert_eq!(
        csv_rows(&stdout(&["levels", "Z", "19", "--force"])).len(),
        101_901
    );
}

#[test]
fn counts_table() {
    let text = stdout(&["counts", "5"]);
    assert_eq!(text.lines().next().unwrap(), "n,X,Y,Z");
    let z: Vec<String> = csv_rows(&text).into_iter().map(|r| r[3].clone()).collect();
    assert_eq!(z, ["1", "2", "5", "10", "19"]);
}

#[test]
fn eval_f_exact_and_json() {
    let text = stdout(&["eval", "F", "1", "2", "--exact"]);
    assert_eq!(text.lines().next().unwrap(), "c0=1/2, c1=1, c2=-1/2");
    assert!(text.lines().nth(1).unwrap().starts_with("0.6477988712"));

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "eval", "F", "2", "5"])).unwrap();
    assert_eq!(v["x"], "2/5");
    let exact: CubicNumber = serde_json::from_value(v["exact"].clone()).unwrap();
    let x: Rational = "2/5".parse().unwrap();
    assert_eq!(exact, f_closed(&x).unwrap().exact);
    assert!(v["float"].as_str().unwrap().starts_with("0.4"));
}

#[test]
fn eval_precision_controls_digits() {
    let short = stdout(&["eval", "F", "1", "3", "--prec", "10"]);
    let long = stdout(&["eval", "F", "1", "3", "--prec", "200"]);
    assert!(long.trim().len() > short.trim().len() + 50);
    assert_eq!(code(&["eval", "F", "1", "3", "--prec", "4"]), 2);
}

#[test]
fn eval_classic_functions() {
    assert_eq!(stdout(&["eval", "qmark", "2", "5"]).trim(), "3/8");
    assert_eq!(
        stdout(&["eval", "glambda", "1", "2", "--lambda-real", "0.5"]).trim(),
        "0.5"
    );
    let k: f64 = stdout(&["eval", "kappa", "1", "2", "--alpha", "0.5"])
        .trim()
        .parse()
        .unwrap();
    assert!((k - 0.75).abs() < 1e-15);
    assert_eq!(code(&["eval", "kappa", "1", "2"]), 2);
    assert_eq!(
        code(&["eval", "glambda", "1", "2", "--lambda-real", "1.5"]),
        2
    );
    assert_eq!(code(&["eval", "F", "3", "2"]), 2);
    assert_eq!(code(&["eval", "qmark", "1", "2", "--exact"]), 2);
}

#[test]
fn empirical_command() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "emp", "12", "1", "2"])).unwrap();
    assert!(v["abs_diff"].as_f64().unwrap() < 0.01);
    assert_eq!(code(&["emp", "30", "1", "2"]), 2);
}

#[test]
fn verify_suites() {
    assert!(stdout(&["verify", "recurrence", "15"]).contains("0 failures"));
    assert!(stdout(&["verify", "functional", "12"]).contains("0 failures"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "verify", "oracle", "12"])).unwrap();
    assert_eq!(v["suite"], "oracle");
    assert_eq!(v["n"], 12);
    assert_eq!(v["checked"], 1430);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    for suite in ["ratios", "monotone", "qmark"] {
        assert_eq!(code(&["verify", suite, "6"]), 0, "{suite}");
    }
    assert_eq!(code(&["verify", "conversion", "40"]), 0);
    assert_eq!(code(&["verify", "oracle", "25"]), 2);
    assert_eq!(code(&["verify", "nonsense", "3"]), 2);
}

#[test]
fn deriv_traces_decay() {
    let rows = csv_rows(&stdout(&["deriv", "1", "2", "right", "40"]));
    assert_eq!(rows.len(), 40);
    let d: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(*d.last().unwrap() < 1e-3);
    assert_eq!(rows[0][1], "2/3");

    let rows = csv_rows(&stdout(&["deriv", "1", "3", "right", "45"]));
    let d: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(d[10..].windows(2).all(|w| w[1] < w[0]));
    assert!(*d.last().unwrap() < 1e-3);
    assert_eq!(code(&["deriv", "1", "1", "left", "5"]), 2);
}

#[test]
fn gseq_ratio_column() {
    let rows = csv_rows(&stdout(&["gseq", "0; +1/2, +1/2, +1/2, +1/2", "4"]));
    assert_eq!(rows.len(), 4);
    let allowed = ["c/lambda", "c/lambda^2", "1/lambda", "1/(c*lambda)"];
    assert!(rows.iter().all(|r| allowed.contains(&r[3].as_str())));
    assert_eq!(code(&["gseq", "0; +1/2", "10"]), 2);
}

#[test]
fn csv_file_output() {
    let path = std::env::temp_dir().join(format!("minrem-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert!(stdout(&["--csv", p, "counts", "4"]).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, stdout(&["counts", "4"]));
    assert_eq!(code(&["--csv", p, "eval", "F", "1", "2"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["levels", "Z", "8"][..],
        &["--json", "eval", "F", "5", "8"],
        &["deriv", "2", "5", "left", "20"],
    ] {
        assert_eq!(minrem(args).stdout, minrem(args).stdout);
    }
}
