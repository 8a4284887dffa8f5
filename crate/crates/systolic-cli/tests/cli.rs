//! End-to-end runs of the compiled binary.

use std::process::{Command, Output};

fn systolic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_systolic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn bounds_short_regime_row() {
    let out = systolic(&["bounds", "--genus", "2", "--length", "1"]);
    let v = stdout_json(&out);
    let row = &v["rows"][0];
    assert_eq!(row["kiss_upper"], serde_json::json!(3.0));
    assert_eq!(row["short_regime"], serde_json::json!(true));
}

#[test]
fn bounds_grid_shape_and_monotonicity() {
    let out = systolic(&["bounds", "--genus", "2..10", "--length", "2..6:0.5"]);
    let v = stdout_json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 81);
    // at fixed length, kiss_upper is nondecreasing in genus
    for i in 0..9usize {
        let mut prev = -1.0;
        for g in 0..9usize {
            let kiss = rows[g * 9 + i]["kiss_upper"].as_f64().unwrap();
            assert!(kiss >= prev);
            prev = kiss;
        }
    }
}

#[test]
fn bounds_effective_column_value() {
    let out = systolic(&["bounds", "--genus", "10", "--length", "4"]);
    let v = stdout_json(&out);
    let eff = v["rows"][0]["effective_bound"].as_f64().unwrap();
    assert!((eff - 1662.54).abs() < 0.01);
}

#[test]
fn bounds_csv_has_header_and_rows() {
    let out = systolic(&["bounds", "--genus", "2..3", "--length", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("genus,length,collar_w"));
    assert!(lines[1].starts_with("2,4.00000000000e0"));
}

#[test]
fn bounds_length_warning_on_stderr() {
    let out = systolic(&["bounds", "--genus", "2", "--length", "10"]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("warning"), "stderr: {stderr}");
    // slack silences it
    let out = systolic(&["bounds", "--genus", "2", "--length", "10", "--slack", "100"]);
    assert!(String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn bounds_out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.json");
    let out = systolic(&[
        "bounds",
        "--genus",
        "2",
        "--length",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_passes_by_default_and_fails_when_perturbed() {
    let out = systolic(&["verify"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("max rel err"));
    assert!(text.contains("all checks passed"));

    let out = systolic(&["verify", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL"));
    // the offending grid point is reported
    assert!(text.contains("at l ="));
}

#[test]
fn verify_respects_custom_grids() {
    let out = systolic(&["verify", "--grid", "0.5..20:log10"]);
    assert!(out.status.success());
    let out = systolic(&["verify", "--grid", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_k7_report() {
    let out = systolic(&["construct", "--n", "7"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], serde_json::json!(7));
    assert_eq!(v["surface"]["genus"], serde_json::json!(1));
    assert_eq!(v["short_cycle_count"], serde_json::json!(35));
    assert_eq!(v["qualifying_count"], serde_json::json!(21));
    assert_eq!(v["intersection_graph_connected"], serde_json::json!(true));
    assert_eq!(v["intersection"]["all_entries_at_most_one"], serde_json::json!(true));
}

#[test]
fn construct_npod_report() {
    let out = systolic(&["construct", "--npod", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["surface"]["genus"], serde_json::json!(2));
    assert_eq!(v["loop_count"], serde_json::json!(4));
    assert_eq!(v["all_pairs_cross_once"], serde_json::json!(true));
}

#[test]
fn construct_from_rotation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.rot");
    let rs = systolic::complete_graph_embedding(5).unwrap();
    std::fs::write(&path, systolic::write_rotation_system(&rs)).unwrap();
    let out = systolic(&["construct", "--rotation", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], serde_json::json!(5));
    assert_eq!(v["qualifying_count"], serde_json::json!(6));
}

#[test]
fn construct_rejects_bad_inputs() {
    // malformed rotation file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.rot");
    std::fs::write(&path, "vertices 1 halfedges 2\nrot 0: 0 1\npear 0 1\n").unwrap();
    let out = systolic(&["construct", "--rotation", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = systolic(&["construct", "--rotation", "/nonexistent.rot"]);
    assert_eq!(out.status.code(), Some(2));
    // epsilon out of range
    let out = systolic(&["construct", "--n", "7", "--epsilon", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    // n below the catalog
    let out = systolic(&["construct", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_csv_projection() {
    let out = systolic(&["construct", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("field,value\n"));
    assert!(text.contains("qualifying_count,6"));
    assert!(text.contains("intersection,0,1,"));
}

#[test]
fn identical_config_and_seed_reproduce_bytes() {
    let a = systolic(&["construct", "--n", "7", "--seed", "0"]);
    let b = systolic(&["construct", "--n", "7", "--seed", "0"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = systolic(&["construct", "--n", "7", "--seed", "1"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn usage_errors_exit_two() {
    let out = systolic(&["bounds", "--genus", "2..5"]);
    assert_eq!(out.status.code(), Some(2)); // missing --length
    let out = systolic(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = systolic(&["construct"]);
    assert_eq!(out.status.code(), Some(2)); // no source
    let out = systolic(&["construct", "--n", "7", "--npod", "1"]);
    assert_eq!(out.status.code(), Some(2)); // two sources
    let out = systolic(&["bounds", "--genus", "1", "--length", "2"]);
    assert_eq!(out.status.code(), Some(2)); // genus below 2
}
