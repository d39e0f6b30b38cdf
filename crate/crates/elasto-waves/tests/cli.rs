//! End-to-end tests of the command-line interface: output contents, JSON
//! schema conformance, CSV bit-stability, and exit codes.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_elasto-waves")
}

fn manifest_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn fixture(name: &str) -> String {
    manifest_path(&format!("fixtures/{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_valid(schema_file: &str, instance: &Value) {
    let text = std::fs::read_to_string(manifest_path(&format!("schemas/{schema_file}")))
        .expect("schema exists");
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{e}"))
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}");
}

#[test]
fn fixture_files_validate_against_the_scenario_schema() {
    for entry in std::fs::read_dir(manifest_path("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_valid("scenario.schema.json", &doc);
    }
}

#[test]
fn riemann_solves_the_two_state_example() {
    let out = run(&["riemann", "--k", "1", "--left", "0,0", "--right", "0,2"]);
    let doc = stdout_json(&out);
    assert_valid("riemann.schema.json", &doc);
    assert_eq!(doc["middle_state"][0].as_f64().unwrap(), 1.0);
    assert_eq!(doc["middle_state"][1].as_f64().unwrap(), 1.0);
    let waves = doc["waves"].as_array().unwrap();
    assert_eq!(waves.len(), 2);
    assert_eq!(waves[0]["kind"], "rarefaction");
    assert_eq!(waves[0]["family"], 1);
    assert_eq!(waves[0]["xi_range"][0].as_f64().unwrap(), -1.0);
    assert_eq!(waves[0]["xi_range"][1].as_f64().unwrap(), 0.0);
    assert_eq!(waves[1]["kind"], "shock");
    assert_eq!(waves[1]["family"], 2);
    assert_eq!(waves[1]["speed"].as_f64().unwrap(), 1.5);
}

#[test]
fn riemann_with_equal_states_has_no_waves() {
    let out = run(&[
        "riemann", "--k", "2", "--left", "0.5,-1", "--right", "0.5,-1",
    ]);
    let doc = stdout_json(&out);
    assert_valid("riemann.schema.json", &doc);
    assert!(doc["waves"].as_array().unwrap().is_empty());
}

#[test]
fn riemann_rejects_nonpositive_k_with_exit_2() {
    for k in ["-1", "0"] {
        let out = run(&["riemann", "--k", k, "--left", "0,0", "--right", "0,2"]);
        assert_eq!(out.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&out.stderr).contains("positive"));
    }
}

#[test]
fn interact_events_reports_the_running_example() {
    let out = run(&["interact", "--scenario", &fixture("case1_sub1_absorbed")]);
    let doc = stdout_json(&out);
    assert_valid("events.schema.json", &doc);
    assert_eq!(doc["case"], 1);
    assert_eq!(doc["subcase"], 1);
    assert_eq!(doc["branch"], "second_intersection_shock");
    let events = doc["events"].as_array().unwrap();
    assert_eq!(events.len(), 2);
    assert_eq!(events[0]["t"].as_f64().unwrap(), 1.0);
    assert_eq!(events[0]["x"].as_f64().unwrap(), 2.0);
    assert_eq!(events[1]["t"].as_f64().unwrap(), 4.0);
    assert_eq!(events[1]["x"].as_f64().unwrap(), 4.0);
    let bent = doc["curves"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["kind"] == "sqrt")
        .expect("curved shock present");
    assert_eq!(bent["a"].as_f64().unwrap(), 0.0);
    assert_eq!(bent["c"].as_f64().unwrap(), 2.0);
    assert_eq!(bent["x_ref"].as_f64().unwrap(), 0.0);
}

#[test]
fn interact_solution_document_validates() {
    let out = run(&[
        "interact",
        "--scenario",
        &fixture("case3_sub1_absorbed"),
        "--emit",
        "solution",
    ]);
    let doc = stdout_json(&out);
    assert_valid("solution.schema.json", &doc);
    assert_eq!(doc["phases"].as_array().unwrap().len(), 3);
    // Final phase is open-ended.
    assert!(doc["phases"][2]["t_end"].is_null());
}

#[test]
fn interact_no_interaction_fixture_has_no_events() {
    let out = run(&["interact", "--scenario", &fixture("case1_sub2_two_fans")]);
    let doc = stdout_json(&out);
    assert_eq!(doc["branch"], "no_interaction");
    assert!(doc["events"].as_array().unwrap().is_empty());
}

#[test]
fn interact_csv_is_bit_stable() {
    let args = [
        "interact",
        "--scenario",
        &fixture("case1_sub1_absorbed"),
        "--emit",
        "csv",
        "--t-max",
        "9",
        "--nx",
        "40",
        "--nt",
        "8",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x,u,sigma,region"));
    assert_eq!(lines.count(), 40 * 8);
}

#[test]
fn interact_rejects_degenerate_scenario_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("degenerate.json");
    std::fs::write(
        &path,
        r#"{"k": 1.0, "left": [0.0, 0.0], "middle": [0.0, 0.0], "right": [-1.0, 1.0], "x0": 0.0, "x1": 1.0}"#,
    )
    .unwrap();
    let out = Command::new(bin())
        .args(["interact", "--scenario"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn interact_rejects_unordered_jump_locations_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unordered.json");
    std::fs::write(
        &path,
        r#"{"k": 1.0, "left": [0.0, 0.0], "middle": [1.0, -1.0], "right": [-1.0, 1.0], "x0": 1.0, "x1": 0.0}"#,
    )
    .unwrap();
    let out = Command::new(bin())
        .args(["interact", "--scenario"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_fixtures_and_validates() {
    for name in [
        "case1_sub1_absorbed",
        "case3_sub2_merge",
        "case4_sub2_two_fans",
    ] {
        let out = run(&["verify", "--scenario", &fixture(name), "--samples", "50"]);
        let doc = stdout_json(&out);
        assert_valid("verify_report.schema.json", &doc);
        assert_eq!(doc["pass"], Value::Bool(true), "{name}");
    }
}

#[test]
fn classification_tolerance_env_var_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("slightly_off.json");
    // Middle lies 1e-6 off the 2-wave line: rejected by default, accepted
    // under a loose tolerance.
    std::fs::write(
        &path,
        r#"{"k": 1.0, "left": [0.0, 0.0], "middle": [1.0, -1.000001], "right": [-1.0, 1.0], "x0": 0.0, "x1": 1.0}"#,
    )
    .unwrap();
    let strict = Command::new(bin())
        .args(["interact", "--scenario"])
        .arg(&path)
        .env_remove("ELASTO_WAVES_TOL")
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(3));

    let loose = Command::new(bin())
        .args(["interact", "--scenario"])
        .arg(&path)
        .env("ELASTO_WAVES_TOL", "1e-3")
        .output()
        .unwrap();
    assert_eq!(
        loose.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&loose.stderr)
    );

    let bad = Command::new(bin())
        .args(["interact", "--scenario"])
        .arg(&path)
        .env("ELASTO_WAVES_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn oracle_fv_error_shrinks_with_resolution() {
    let mut errs = Vec::new();
    for cells in ["200", "400"] {
        let out = run(&[
            "oracle",
            "--scenario",
            &fixture("case1_sub1_absorbed"),
            "--method",
            "fv",
            "--t",
            "0.5",
            "--cells",
            cells,
        ]);
        let doc = stdout_json(&out);
        assert_valid("oracle_summary.schema.json", &doc);
        assert!(doc["seed"].is_null());
        errs.push(doc["l1_distance_to_exact"].as_f64().unwrap());
    }
    assert!(errs[1] < errs[0], "{errs:?}");
}

#[test]
fn oracle_frontrack_reports_the_merged_shock() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("cells.csv");
    let out = Command::new(bin())
        .args([
            "oracle",
            "--scenario",
            &fixture("case1_sub1_absorbed"),
            "--method",
            "frontrack",
            "--t",
            "9",
            "--cells",
            "200",
            "--out",
        ])
        .arg(&csv_path)
        .output()
        .unwrap();
    let doc = stdout_json(&out);
    assert_valid("oracle_summary.schema.json", &doc);
    let fronts = doc["fronts"].as_array().unwrap();
    assert_eq!(fronts.len(), 1);
    assert_eq!(fronts[0]["kind"], "shock");
    assert!((fronts[0]["position"].as_f64().unwrap() - 6.5).abs() <= 1e-12);
    // Exact-versus-exact sampling differs only by cells straddling fronts.
    assert!(doc["l1_distance_to_exact"].as_f64().unwrap() <= 0.05);

    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(text.starts_with("x_center,u,sigma\n"));
    assert_eq!(text.lines().count(), 201);
}

#[test]
fn oracle_glimm_is_bit_stable_for_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let run_once = |csv: &Path| {
        Command::new(bin())
            .args([
                "oracle",
                "--scenario",
                &fixture("case2_sub2_merge"),
                "--method",
                "glimm",
                "--t",
                "0.75",
                "--cells",
                "150",
                "--seed",
                "11",
                "--out",
            ])
            .arg(csv)
            .output()
            .unwrap()
    };
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    let a = run_once(&csv_a);
    let b = run_once(&csv_b);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        std::fs::read(&csv_a).unwrap(),
        std::fs::read(&csv_b).unwrap()
    );
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["seed"].as_u64(), Some(11));
}

#[test]
fn oracle_domain_too_small_exits_4() {
    for method in ["fv", "glimm"] {
        let out = run(&[
            "oracle",
            "--scenario",
            &fixture("case1_sub1_absorbed"),
            "--method",
            method,
            "--t",
            "1",
            "--cells",
            "100",
            "--x-min",
            "-1",
            "--x-max",
            "2",
        ]);
        assert_eq!(out.status.code(), Some(4), "{method}");
    }
}

#[test]
fn oracle_rejects_bad_grid_or_time_with_exit_2() {
    let out = run(&[
        "oracle",
        "--scenario",
        &fixture("case1_sub1_absorbed"),
        "--method",
        "fv",
        "--t",
        "0",
        "--cells",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "oracle",
        "--scenario",
        &fixture("case1_sub1_absorbed"),
        "--method",
        "fv",
        "--t",
        "1",
        "--cells",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
