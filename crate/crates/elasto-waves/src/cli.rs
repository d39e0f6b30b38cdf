//! Command-line front end.
//!
//! Subcommands: `riemann` (two-state exact solution), `interact`
//! (three-state interaction: events, full solution, or a space-time CSV),
//! `verify` (weak-form report), `oracle` (numerical cross-checks).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse failure,
//! 3 unsupported configuration, 4 domain error. Floating-point values in
//! JSON and CSV output carry 17 significant digits so that files round-trip
//! bit-exactly.

use crate::core::{ModelParams, State};
use crate::interaction::{
    build_with_tol, BoundaryKind, Branch, Curve, CurveKind, EventKind, InteractionError,
    PiecewiseSolution, Scenario,
};
use crate::numerics::{
    default_window, front_track_scalar, fv_path_conservative, glimm_evolve, initial_cells,
    l1_distance, FrontKind, Grid1D, NumericsError,
};
use crate::verify::verify_solution;
use crate::wave_curves::{default_tol, WaveFamily};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

/// Environment variable overriding the curve-classification tolerance.
pub const TOL_ENV_VAR: &str = "ELASTO_WAVES_TOL";

#[derive(Parser)]
#[command(
    name = "elasto-waves",
    version,
    about = "Exact wave-interaction solver for the velocity-stress system"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a two-state Riemann problem and print the wave fan as JSON.
    Riemann {
        /// Elastic wave speed k > 0.
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        /// Left state as "u,sigma".
        #[arg(long, value_parser = parse_state, allow_hyphen_values = true)]
        left: State,
        /// Right state as "u,sigma".
        #[arg(long, value_parser = parse_state, allow_hyphen_values = true)]
        right: State,
        /// Centre of the initial jump.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        origin: f64,
    },
    /// Solve a three-state interaction scenario.
    Interact {
        /// Scenario JSON file.
        #[arg(long)]
        scenario: PathBuf,
        /// What to emit.
        #[arg(long, value_enum, default_value_t = Emit::Events)]
        emit: Emit,
        /// Final sample time for --emit csv.
        #[arg(long = "t-max", default_value_t = 10.0)]
        t_max: f64,
        /// Spatial samples for --emit csv.
        #[arg(long, default_value_t = 200)]
        nx: usize,
        /// Time samples for --emit csv.
        #[arg(long, default_value_t = 50)]
        nt: usize,
        /// Output path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the weak-form verification report for a scenario.
    Verify {
        /// Scenario JSON file.
        #[arg(long)]
        scenario: PathBuf,
        /// Samples per curve and per grid direction.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Corrupt the first shock speed before verifying (diagnostic).
        #[arg(long, hide = true)]
        inject_speed_error: bool,
    },
    /// Compare a numerical oracle against the exact solution.
    Oracle {
        /// Scenario JSON file.
        #[arg(long)]
        scenario: PathBuf,
        /// Numerical method.
        #[arg(long, value_enum)]
        method: Method,
        /// Comparison time.
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Number of grid cells.
        #[arg(long)]
        cells: usize,
        /// Sequence offset for the random-choice method.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CFL number.
        #[arg(long, default_value_t = 0.9)]
        cfl: f64,
        /// Left edge of the grid (default: wide enough for all waves).
        #[arg(long = "x-min", allow_negative_numbers = true)]
        x_min: Option<f64>,
        /// Right edge of the grid.
        #[arg(long = "x-max", allow_negative_numbers = true)]
        x_max: Option<f64>,
        /// Write the oracle cells as CSV to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Events,
    Solution,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fv,
    Glimm,
    Frontrack,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Unsupported(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Unsupported(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<InteractionError> for CliError {
    fn from(e: InteractionError) -> Self {
        match e {
            InteractionError::UnsupportedConfiguration { .. }
            | InteractionError::DegenerateScenario(_) => CliError::Unsupported(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<NumericsError> for CliError {
    fn from(e: NumericsError) -> Self {
        match e {
            NumericsError::DomainTooSmall { .. } => CliError::Domain(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Riemann {
            k,
            left,
            right,
            origin,
        } => cmd_riemann(k, left, right, origin),
        Command::Interact {
            scenario,
            emit,
            t_max,
            nx,
            nt,
            out,
        } => cmd_interact(&scenario, emit, t_max, nx, nt, out.as_deref()),
        Command::Verify {
            scenario,
            samples,
            inject_speed_error,
        } => cmd_verify(&scenario, samples, inject_speed_error),
        Command::Oracle {
            scenario,
            method,
            t,
            cells,
            seed,
            cfl,
            x_min,
            x_max,
            out,
        } => cmd_oracle(
            &scenario,
            method,
            t,
            cells,
            seed,
            cfl,
            x_min,
            x_max,
            out.as_deref(),
        ),
    }
}

// ---------------------------------------------------------------------------
// scenario loading

/// On-disk scenario document.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    k: f64,
    left: [f64; 2],
    middle: [f64; 2],
    right: [f64; 2],
    x0: f64,
    x1: f64,
}

fn load_scenario(path: &std::path::Path) -> Result<Scenario, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: ScenarioFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))?;
    let params = ModelParams::new(file.k)
        .map_err(|e| CliError::Usage(format!("k must be positive: {e}")))?;
    Scenario::new(
        params,
        State::new(file.left[0], file.left[1]),
        State::new(file.middle[0], file.middle[1]),
        State::new(file.right[0], file.right[1]),
        file.x0,
        file.x1,
    )
    .map_err(CliError::from)
}

fn classification_tol(s: &Scenario) -> Result<f64, CliError> {
    match std::env::var(TOL_ENV_VAR) {
        Ok(text) => text
            .parse::<f64>()
            .ok()
            .filter(|t| *t >= 0.0 && t.is_finite())
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{TOL_ENV_VAR} must be a nonnegative number, got {text:?}"
                ))
            }),
        Err(_) => {
            let a = default_tol(s.left(), s.middle());
            let b = default_tol(s.left(), s.right());
            Ok(a.max(b))
        }
    }
}

fn build_solution(s: &Scenario) -> Result<PiecewiseSolution, CliError> {
    let tol = classification_tol(s)?;
    build_with_tol(s, tol).map_err(CliError::from)
}

// ---------------------------------------------------------------------------
// serialization helpers

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        // 17 significant digits: enough to reproduce any f64 bit-exactly.
        write!(writer, "{value:.16e}")
    }
}

/// Serialize a JSON value with 17-significant-digit floats.
pub fn to_json_string(value: &Value) -> String {
    use serde::Serialize;
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value.serialize(&mut ser).expect("in-memory serialization");
    String::from_utf8(out).expect("JSON is UTF-8")
}

fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

fn parse_state(text: &str) -> Result<State, String> {
    let (u, sigma) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,sigma\", got {text:?}"))?;
    let u: f64 = u.trim().parse().map_err(|e| format!("bad u: {e}"))?;
    let sigma: f64 = sigma
        .trim()
        .parse()
        .map_err(|e| format!("bad sigma: {e}"))?;
    let s = State::new(u, sigma);
    if !s.is_finite() {
        return Err("state components must be finite".into());
    }
    Ok(s)
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::NoSecondIntersection => "no_second_intersection",
        Branch::SecondIntersectionShock => "second_intersection_shock",
        Branch::SecondIntersectionRarefaction => "second_intersection_rarefaction",
        Branch::NoInteraction => "no_interaction",
    }
}

fn event_kind_name(k: EventKind) -> &'static str {
    match k {
        EventKind::ShockFanCollision => "shock_fan_collision",
        EventKind::ShockShockCollision => "shock_shock_collision",
        EventKind::FanAbsorbed => "fan_absorbed",
    }
}

fn curve_json(curve: &Curve, role: BoundaryKind) -> Value {
    json!({
        "kind": match curve.kind { CurveKind::Line => "line", CurveKind::SqrtCurve => "sqrt" },
        "role": match role { BoundaryKind::Shock => "shock", BoundaryKind::FanEdge => "fan_edge" },
        "a": curve.a,
        "c": curve.c,
        "x_ref": curve.x_ref,
        "t_offset": curve.t_offset,
        "valid_t": [
            curve.valid_t.0,
            if curve.valid_t.1.is_finite() { json!(curve.valid_t.1) } else { Value::Null },
        ],
    })
}

fn events_json(sol: &PiecewiseSolution) -> Value {
    let events: Vec<Value> = sol
        .events
        .iter()
        .map(|e| json!({"t": e.t, "x": e.x, "kind": event_kind_name(e.kind)}))
        .collect();
    let curves: Vec<Value> = sol
        .phases
        .iter()
        .flat_map(|ph| ph.boundaries.iter().map(|b| curve_json(&b.curve, b.kind)))
        .collect();
    json!({
        "case": sol.tag.case_no,
        "subcase": sol.tag.subcase,
        "branch": branch_name(sol.tag.branch),
        "family": sol.family.index(),
        "events": events,
        "curves": curves,
    })
}

fn solution_json(sol: &PiecewiseSolution) -> Value {
    let mut v = events_json(sol);
    let phases: Vec<Value> = sol
        .phases
        .iter()
        .map(|ph| {
            let boundaries: Vec<Value> = ph
                .boundaries
                .iter()
                .map(|b| curve_json(&b.curve, b.kind))
                .collect();
            let regions: Vec<Value> = ph
                .values
                .iter()
                .map(|r| match r {
                    crate::interaction::RegionValue::Constant(s) => {
                        json!({"type": "constant", "u": s.u, "sigma": s.sigma})
                    }
                    crate::interaction::RegionValue::Fan { center, base } => {
                        json!({"type": "fan", "center": center, "base": [base.u, base.sigma]})
                    }
                })
                .collect();
            json!({
                "t_start": ph.t_start,
                "t_end": if ph.t_end.is_finite() { json!(ph.t_end) } else { Value::Null },
                "boundaries": boundaries,
                "regions": regions,
            })
        })
        .collect();
    v["phases"] = Value::Array(phases);
    v
}

fn emit_output(out: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// subcommands

fn cmd_riemann(k: f64, left: State, right: State, origin: f64) -> Result<u8, CliError> {
    let params =
        ModelParams::new(k).map_err(|e| CliError::Usage(format!("k must be positive: {e}")))?;
    let fan = crate::riemann::solve_riemann(params, left, right, origin);
    let waves: Vec<Value> = fan
        .waves()
        .iter()
        .map(|w| match w.kind {
            crate::riemann::WaveKind::Shock => json!({
                "family": w.family.index(),
                "kind": "shock",
                "speed": w.xi_lo,
            }),
            crate::riemann::WaveKind::Rarefaction => json!({
                "family": w.family.index(),
                "kind": "rarefaction",
                "xi_range": [w.xi_lo, w.xi_hi],
            }),
        })
        .collect();
    let mid = crate::riemann::middle_state(params, left, right);
    let doc = json!({
        "middle_state": [mid.u, mid.sigma],
        "waves": waves,
        "origin": origin,
    });
    println!("{}", to_json_string(&doc));
    Ok(EXIT_OK)
}

fn cmd_interact(
    scenario_path: &std::path::Path,
    emit: Emit,
    t_max: f64,
    nx: usize,
    nt: usize,
    out: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    let s = load_scenario(scenario_path)?;
    let sol = build_solution(&s)?;
    match emit {
        Emit::Events => emit_output(out, &to_json_string(&events_json(&sol)))?,
        Emit::Solution => emit_output(out, &to_json_string(&solution_json(&sol)))?,
        Emit::Csv => {
            if !t_max.is_finite() || t_max <= 0.0 || nx == 0 || nt == 0 {
                return Err(CliError::Usage(
                    "csv sampling needs --t-max > 0, --nx >= 1, --nt >= 1".into(),
                ));
            }
            let (lo, hi) = default_window(&s, t_max);
            let mut text = String::from("t,x,u,sigma,region\n");
            for j in 1..=nt {
                let t = t_max * j as f64 / nt as f64;
                for i in 0..nx {
                    let x = lo + (hi - lo) * (i as f64 + 0.5) / nx as f64;
                    let state = sol.eval(x, t).expect("t > 0");
                    let (pi, ri) = sol.locate(x, t).expect("t > 0");
                    let _ = writeln!(
                        text,
                        "{},{},{},{},p{pi}r{ri}",
                        fmt_f64(t),
                        fmt_f64(x),
                        fmt_f64(state.u),
                        fmt_f64(state.sigma)
                    );
                }
            }
            emit_output(out, &text)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    scenario_path: &std::path::Path,
    samples: usize,
    inject_speed_error: bool,
) -> Result<u8, CliError> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let s = load_scenario(scenario_path)?;
    let mut sol = build_solution(&s)?;
    if inject_speed_error {
        sol.corrupt_first_shock_speed(0.05);
    }
    let report = verify_solution(&sol, samples);
    println!("{}", to_json_string(&report.to_json()));
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAIL
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    scenario_path: &std::path::Path,
    method: Method,
    t: f64,
    cells: usize,
    seed: u64,
    cfl: f64,
    x_min: Option<f64>,
    x_max: Option<f64>,
    out: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    if !t.is_finite() || t <= 0.0 {
        return Err(CliError::Usage(format!("--t must be positive, got {t}")));
    }
    let s = load_scenario(scenario_path)?;
    let sol = build_solution(&s)?;
    let (def_lo, def_hi) = default_window(&s, t);
    let grid = Grid1D::new(x_min.unwrap_or(def_lo), x_max.unwrap_or(def_hi), cells, cfl)?;
    let p = s.params();

    let mut fronts_json: Option<Vec<Value>> = None;
    let states: Vec<State> = match method {
        Method::Fv => fv_path_conservative(p, &s, &grid, t)?,
        Method::Glimm => {
            let reach = crate::numerics::max_wave_speed(&s) * t;
            if s.x0() - reach < grid.x_min || s.x1() + reach > grid.x_max {
                return Err(CliError::Domain(format!(
                    "domain [{}, {}] too small for waves up to t = {t}",
                    grid.x_min, grid.x_max
                )));
            }
            glimm_evolve(p, &initial_cells(&s, &grid), &grid, t, seed)
        }
        Method::Frontrack => {
            let k = p.k();
            let e = sol.family.sign() * k;
            let fs = front_track_scalar(
                s.left().u + e,
                s.middle().u + e,
                s.right().u + e,
                s.x0(),
                s.x1(),
                t,
            );
            fronts_json = Some(
                fs.fronts
                    .iter()
                    .map(|f| {
                        json!({
                            "position": f.position,
                            "kind": match f.kind {
                                FrontKind::Shock => "shock",
                                FrontKind::FanEdge => "fan_edge",
                            },
                            "left_value": f.left_value,
                            "right_value": f.right_value,
                        })
                    })
                    .collect(),
            );
            let w = match sol.family {
                WaveFamily::One => s.left().sigma - k * s.left().u,
                WaveFamily::Two => s.left().sigma + k * s.left().u,
            };
            (0..grid.n_cells)
                .map(|i| {
                    let v = fs.value_at(grid.center(i));
                    let u = v - e;
                    let sigma = match sol.family {
                        WaveFamily::One => w + k * u,
                        WaveFamily::Two => w - k * u,
                    };
                    State::new(u, sigma)
                })
                .collect()
        }
    };

    if let Some(path) = out {
        let mut text = String::from("x_center,u,sigma\n");
        for (i, c) in states.iter().enumerate() {
            let _ = writeln!(
                text,
                "{},{},{}",
                fmt_f64(grid.center(i)),
                fmt_f64(c.u),
                fmt_f64(c.sigma)
            );
        }
        fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }

    let l1 = l1_distance(&states, &sol, &grid, t);
    let mut summary = json!({
        "method": match method {
            Method::Fv => "fv",
            Method::Glimm => "glimm",
            Method::Frontrack => "frontrack",
        },
        "cells": cells,
        "seed": if method == Method::Glimm { json!(seed) } else { Value::Null },
        "t": t,
        "l1_distance_to_exact": l1,
    });
    if let Some(fronts) = fronts_json {
        summary["fronts"] = Value::Array(fronts);
    }
    println!("{}", to_json_string(&summary));
    Ok(EXIT_OK)
}
