use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharp-hardy")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn canonical(v: &Value) -> String {
    // Same rules as the binary: sorted keys, integers verbatim, other numbers {:.16e}.
    match v {
        Value::Object(m) => {
            let mut keys: Vec<_> = m.keys().collect();
            keys.sort();
            let body: Vec<String> =
                keys.iter().map(|k| format!("{}:{}", Value::String((*k).clone()), canonical(&m[*k]))).collect();
            format!("{{{}}}", body.join(","))
        }
        Value::Number(n) if n.is_u64() || n.is_i64() => n.to_string(),
        Value::Number(n) => format!("{:.16e}", n.as_f64().unwrap()),
        other => other.to_string(),
    }
}

#[test]
fn continuous_verify() {
    let out = run(&["continuous", "--a", "1", "--b", "2", "--verify"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "ok");
    let d = v["outputs"]["d"].as_f64().unwrap();
    assert!((d - 0.148_547_236_091_087_7).abs() < 1e-15);
    assert!((v["outputs"]["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-8);
}

#[test]
fn continuous_scale_invariant() {
    let a = json(&run(&["continuous", "--a", "1", "--b", "2"]));
    let b = json(&run(&["continuous", "--a", "3", "--b", "6"]));
    let (da, db) = (a["outputs"]["d"].as_f64().unwrap(), b["outputs"]["d"].as_f64().unwrap());
    assert!((da - db).abs() <= 1e-15 * da);
}

#[test]
fn continuous_reversed_interval_is_usage_error() {
    let out = run(&["continuous", "--a", "2", "--b", "1"]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn discrete_two() {
    let out = run(&["discrete", "--n", "2", "--method", "all"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let want = (3.0 + 5f64.sqrt()) / 4.0;
    for key in ["d_eigen", "d_hahn"] {
        assert!((v["outputs"][key].as_f64().unwrap() - want).abs() < 1e-10);
    }
}

#[test]
fn discrete_hundred_ok() {
    let out = run(&["discrete", "--n", "100", "--method", "all"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "ok");
    for key in ["d_eigen", "d_hahn", "rayleigh", "certificate", "bound_lo", "bound_hi", "asymptote"] {
        assert!(v["outputs"][key].is_number(), "{key}");
    }
}

#[test]
fn discrete_bounds_need_three() {
    assert_eq!(code(&run(&["discrete", "--n", "2", "--method", "bounds"])), 1);
    assert_eq!(code(&run(&["discrete", "--n", "0"])), 1);
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        &["continuous", "--a", "0.5", "--b", "10", "--verify"][..],
        &["discrete", "--n", "37"],
        &["alpha", "--n", "1000"],
        &["hahn", "--n", "12", "--t", "0.125"],
        &["asym", "--n", "100000", "--x", "-0.01"],
    ] {
        let out = run(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", canonical(&parsed)), text, "{args:?}");
    }
}

#[test]
fn csv_format() {
    let out = run(&["alpha", "--l", "1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "command,status,l,L,alpha,bracket_hi,bracket_lo,d,residual");
}

#[test]
fn alpha_and_asym_inputs() {
    assert_eq!(code(&run(&["alpha"])), 1);
    assert_eq!(code(&run(&["alpha", "--l", "1", "--n", "3"])), 1);
    assert_eq!(code(&run(&["alpha", "--l", "-1"])), 1);
    assert_eq!(code(&run(&["asym"])), 1);
    assert_eq!(code(&run(&["asym", "--x", "0.6"])), 1);
    let v = json(&run(&["asym", "--x", "0.001"]));
    assert!((v["outputs"]["slope_estimate"].as_f64().unwrap() - 4.736_098_748_261_205).abs() < 1e-4);
}

#[test]
fn sweep_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = run(&[
        "sweep",
        "--n-start",
        "10",
        "--n-end",
        "10000",
        "--points",
        "20",
        "--log-spaced",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "ok");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,d_eigen,d_hahn,rayleigh_lb,certificate_lb,bound_lo,bound_hi,asymptote");
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse::<f64>().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 20);
    assert!(rows.windows(2).all(|w| w[0][0] < w[1][0]));
    for r in &rows {
        assert!((r[2] - r[1]).abs() <= 1e-9);
        assert!(r[5] <= r[2] && r[2] <= r[6]);
        assert!(r[3] <= r[2] + 1e-10 && r[4] <= r[2] + 1e-10);
    }

    let again = dir.path().join("again.csv");
    run(&[
        "sweep",
        "--n-start",
        "10",
        "--n-end",
        "10000",
        "--points",
        "20",
        "--log-spaced",
        "--out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn sweep_small_n_leaves_cells_empty() {
    let out = run(&["sweep", "--n-start", "1", "--n-end", "4", "--points", "4"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].ends_with(",,,"));
    assert!(rows[1].contains(",,,") && !rows[1].ends_with(","));
    assert!(!rows[2].contains(",,"));
}

#[test]
fn sweep_bad_ranges() {
    assert_eq!(code(&run(&["sweep", "--n-start", "5", "--n-end", "5"])), 1);
    assert_eq!(code(&run(&["sweep", "--n-start", "1", "--n-end", "5", "--points", "1"])), 1);
    let out = run(&["sweep", "--n-start", "1", "--n-end", "5", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_all_lists_every_criterion() {
    let out = run(&["verify-all", "--level", "fast"]);
    let table = String::from_utf8_lossy(&out.stderr).into_owned();
    for id in 1..=12 {
        assert!(table.lines().any(|l| l.split_whitespace().nth(1) == Some(&id.to_string())), "criterion {id}");
    }
    let v = json(&out);
    let all_pass = v["outputs"]["passed"] == v["outputs"]["total"];
    assert_eq!(code(&out), if all_pass { 0 } else { 3 });
}

#[test]
fn verify_all_detects_tampered_constant() {
    let out = run(&["verify-all", "--tamper-constant", "1e-6"]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["status"], "bound_violation");
}

#[test]
fn usage_and_help_codes() {
    assert_eq!(code(&run(&["nope"])), 1);
    assert_eq!(code(&run(&["discrete"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}
