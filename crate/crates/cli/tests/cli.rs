use std::process::{Command, Output};

use tracecurve_core::{ContextSummary, CountReport, Method};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tracecurve")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn count_json(args: &[&str]) -> CountReport {
    let mut full = vec!["--json", "count"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn count_small_example_is_cross_checked() {
    let r = count_json(&["--p", "3", "--s", "1", "--n", "2", "--d", "2", "--a", "-1", "--b", "0"]);
    assert_eq!(r.count, 7);
    assert_eq!(r.n_term, -2);
    assert_eq!(r.method, Method::ClosedD2);
    assert!(r.oracle_checked);
}

#[test]
fn count_formula_only_cell() {
    // enumeration of F_{5^12} restricted to Tr = 1 gives the same value
    let r = count_json(&["--p", "5", "--s", "2", "--n", "6", "--d", "2", "--a", "-1", "--b", "0", "--method", "d2"]);
    assert_eq!(r.count, 244_155_625);
    assert!(!r.oracle_checked);
}

#[test]
fn count_d1_is_field_size() {
    let r = count_json(&["--p", "3", "--s", "1", "--n", "2", "--d", "1", "--a", "g^1", "--b", "g^3"]);
    assert_eq!(r.count, 9);
}

#[test]
fn count_explicit_methods_agree() {
    let base = ["--p", "3", "--s", "1", "--n", "4", "--d", "4", "--a", "-1", "--b", "0"];
    for m in ["brute", "gauss", "b0"] {
        let mut args = base.to_vec();
        args.extend_from_slice(&["--method", m]);
        let r = count_json(&args);
        assert_eq!((r.count, r.n_term), (99, 18), "method {m}");
    }
}

#[test]
fn report_json_round_trips() {
    let o = run(&["--json", "count", "--p", "7", "--n", "2", "--d", "3", "--a", "g^5", "--b", "1,2"]);
    let text = stdout(&o);
    let r: CountReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string(&r).unwrap();
    assert_eq!(again.trim(), text.trim());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["p", "s", "n", "modulus", "d_raw", "d", "a", "b", "v", "D", "B", "count", "N", "method", "bound", "hw_bound", "oracle_checked"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn inapplicable_closed_form_is_usage_error() {
    let o = run(&["count", "--p", "3", "--n", "2", "--d", "2", "--a", "1", "--b", "1", "--method", "b0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["count", "--p", "4", "--n", "2", "--d", "2", "--a", "1", "--b", "0"],
        vec!["count", "--p", "3", "--n", "2", "--d", "2", "--a", "x", "--b", "0"],
        vec!["count", "--p", "3", "--n", "2", "--d", "2", "--a", "1,1,1", "--b", "0"],
        vec!["count", "--p", "3", "--n", "2", "--d", "0", "--a", "1", "--b", "0"],
        vec!["--cap", "100", "count", "--p", "3", "--n", "6", "--d", "2", "--a", "1", "--b", "0", "--method", "brute"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_reproduces_cells() {
    let o = run(&["table", "--q-list", "3,7", "--n-list", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q,n,count\n3,2,7\n3,3,33\n7,2,43\n7,3,385\n");
    let o = run(&["table", "--b", "1", "--q-list", "7", "--n-list", "3"]);
    assert_eq!(stdout(&o), "q,n,count\n7,3,378\n");
    let o = run(&["table", "--q-list", "3", "--n-list", "2", "--d", "1"]);
    assert_eq!(stdout(&o), "q,n,count\n3,2,9\n");
}

#[test]
fn table_marks_bad_cells() {
    let o = run(&["table", "--q-list", "3,6", "--n-list", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.starts_with("q,n,count\n3,2,7\n6,2,ERROR"), "{out}");
}

#[test]
fn verify_reports_agreement() {
    let o = run(&["--json", "verify", "--p", "3", "--n", "3", "--max-d", "13", "--trials", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checked = v["checked"].as_u64().unwrap();
    assert_eq!(checked + v["skipped_degenerate"].as_u64().unwrap(), 50);
    assert_eq!(v["methods"]["gauss"]["agree"].as_u64(), Some(checked));
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
    assert_eq!(v["bound_violations"].as_u64(), Some(0));

    let o = run(&["--json", "verify", "--p", "7", "--n", "2", "--max-d", "8", "--trials", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound_violations"].as_u64(), Some(0));
}

#[test]
fn verify_counts_degenerate_trials_as_skipped() {
    // F_3: a is zero a third of the time
    let o = run(&["--json", "verify", "--p", "3", "--n", "1", "--max-d", "2", "--trials", "30", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["skipped_degenerate"].as_u64().unwrap() > 0);
}

#[test]
fn qr_count_values() {
    for (p, n, want) in [("3", "1", "2"), ("5", "1", "3"), ("5", "3", "43")] {
        let o = run(&["qr-count", "--p", p, "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().next(), Some(want));
    }
    let o = run(&["--json", "qr-count", "--p", "5", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["formula"].as_u64(), v["brute"].as_u64(), v["agree"].as_bool()), (Some(43), Some(43), Some(true)));
    assert_eq!(run(&["qr-count", "--p", "3", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn field_info_summary() {
    let o = run(&["--json", "field-info", "--p", "3", "--s", "1", "--n", "2"]);
    let s: ContextSummary = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((s.p, s.s, s.n), (3, 1, 2));
    assert_eq!(s.modulus_coeffs.len(), 3);
    assert_eq!(s.generator_index_coeffs.len(), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "verify", "--p", "5", "--n", "2", "--trials", "20", "--seed", "3"],
        vec!["table", "--q-list", "3,5", "--n-list", "2,3,4"],
        vec!["--json", "count", "--p", "5", "--n", "3", "--d", "4", "--a", "g^2", "--b", "g^7"],
    ] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)), "{args:?}");
    }
}
