//! Shared fixture loading for the integration suites.

use elasto_waves::core::{ModelParams, State};
use elasto_waves::interaction::{build, PiecewiseSolution, Scenario};

pub const FIXTURES: &[&str] = &[
    "case1_sub1_trapped",
    "case1_sub1_absorbed",
    "case1_sub2_two_fans",
    "case2_sub1_trapped",
    "case2_sub1_absorbed",
    "case2_sub2_merge",
    "case3_sub1_trapped",
    "case3_sub1_absorbed",
    "case3_sub2_merge",
    "case4_sub1_trapped",
    "case4_sub1_absorbed",
    "case4_sub2_two_fans",
];

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_fixture(name: &str) -> Scenario {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    let v: serde_json::Value = serde_json::from_str(&text).expect("fixture is JSON");
    let st = |key: &str| State::new(v[key][0].as_f64().unwrap(), v[key][1].as_f64().unwrap());
    Scenario::new(
        ModelParams::new(v["k"].as_f64().unwrap()).unwrap(),
        st("left"),
        st("middle"),
        st("right"),
        v["x0"].as_f64().unwrap(),
        v["x1"].as_f64().unwrap(),
    )
    .unwrap()
}

pub fn build_fixture(name: &str) -> (Scenario, PiecewiseSolution) {
    let s = load_fixture(name);
    let sol = build(&s).expect("fixtures are supported scenarios");
    (s, sol)
}
