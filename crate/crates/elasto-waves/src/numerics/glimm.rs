//! Random-choice (Glimm) scheme on the exact Riemann solver.
//!
//! Each step solves the Riemann problem at every cell interface and samples
//! the wave fans at one equidistributed point per step. Sampling uses the
//! binary van der Corput sequence rather than a pseudorandom stream, so runs
//! are deterministic and convergence is not at the mercy of a seed; the seed
//! offsets the sequence. The time step keeps dt * max|lambda| <= dx / 2 so
//! neighbouring Riemann fans cannot interact within a step.

use crate::core::{ModelParams, State};
use crate::numerics::Grid1D;
use crate::riemann::{eval_fan, solve_riemann};

/// Binary radical-inverse (van der Corput) sequence, vdc(1) = 1/2,
/// vdc(2) = 1/4, vdc(3) = 3/4, ...
pub fn van_der_corput(mut n: u64) -> f64 {
    let mut value = 0.0;
    let mut denom = 1.0;
    while n > 0 {
        denom *= 2.0;
        value += (n & 1) as f64 / denom;
        n >>= 1;
    }
    value
}

/// One random-choice step with sampling fraction `theta` in [0, 1).
///
/// A cell takes the value of the Riemann fan at its left interface when the
/// sample point falls in the left half of the cell, of the fan at its right
/// interface otherwise. End cells copy themselves (constant far field).
pub fn glimm_step(p: ModelParams, cells: &[State], dx: f64, dt: f64, theta: f64) -> Vec<State> {
    let n = cells.len();
    (0..n)
        .map(|i| {
            if theta < 0.5 {
                if i == 0 {
                    cells[0]
                } else {
                    let fan = solve_riemann(p, cells[i - 1], cells[i], 0.0);
                    eval_fan(&fan, theta * dx, dt).expect("dt > 0")
                }
            } else if i == n - 1 {
                cells[n - 1]
            } else {
                let fan = solve_riemann(p, cells[i], cells[i + 1], 0.0);
                eval_fan(&fan, (theta - 1.0) * dx, dt).expect("dt > 0")
            }
        })
        .collect()
}

/// Evolve cell states to `t_end`; deterministic for a given seed.
pub fn glimm_evolve(
    p: ModelParams,
    initial: &[State],
    grid: &Grid1D,
    t_end: f64,
    seed: u64,
) -> Vec<State> {
    assert!(t_end > 0.0);
    let k = p.k();
    let dx = grid.dx();
    let mut cells = initial.to_vec();
    let mut t = 0.0;
    let mut step = 0u64;
    while t < t_end {
        let alpha = cells.iter().map(|c| c.u.abs() + k).fold(0.0, f64::max);
        let dt = (0.5 * grid.cfl * dx / alpha).min(t_end - t);
        let theta = van_der_corput(seed.wrapping_add(step).wrapping_add(1));
        cells = glimm_step(p, &cells, dx, dt, theta);
        t += dt;
        step += 1;
    }
    cells
}
