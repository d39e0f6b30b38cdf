//! First-order path-conservative finite-volume scheme.
//!
//! The system in quasilinear form is W_t + A(W) W_x = 0 with
//!
//! ```text
//!     A = [ u    -1 ]
//!         [ -k^2  u ]
//! ```
//!
//! A depends linearly on u, so the straight-line-path average of A across an
//! interface jump is A evaluated at the Volpert mean of u. Interface
//! fluctuations are split Rusanov-style,
//!
//! ```text
//!     D+- = 1/2 (A_bar +- alpha I) (W_r - W_l),
//! ```
//!
//! with alpha the largest characteristic speed of the two cells. Because
//! both A_bar dW and dW are parallel to an eigenvector when the data sit on
//! an invariant plane, the scheme keeps that plane invariant; this is the
//! discrete counterpart of the jump conditions built on the same path.

use crate::core::{volpert_mean, ModelParams, State};
use crate::interaction::Scenario;
use crate::numerics::{initial_cells, max_wave_speed, Grid1D, NumericsError};

/// Evolve the scenario's initial data to `t_end`; returns cell averages.
///
/// The grid must contain every wave up to `t_end`, else `DomainTooSmall`.
pub fn fv_path_conservative(
    p: ModelParams,
    s: &Scenario,
    grid: &Grid1D,
    t_end: f64,
) -> Result<Vec<State>, NumericsError> {
    assert!(t_end > 0.0);
    let reach = max_wave_speed(s) * t_end;
    let (wave_lo, wave_hi) = (s.x0() - reach, s.x1() + reach);
    if wave_lo < grid.x_min || wave_hi > grid.x_max {
        return Err(NumericsError::DomainTooSmall {
            x_min: grid.x_min,
            x_max: grid.x_max,
            wave_lo,
            wave_hi,
            t_end,
        });
    }

    let k = p.k();
    let dx = grid.dx();
    let mut cells = initial_cells(s, grid);
    let n = cells.len();
    let mut t = 0.0;
    while t < t_end {
        let alpha_max = cells.iter().map(|c| c.u.abs() + k).fold(0.0, f64::max);
        let dt = (grid.cfl * dx / alpha_max).min(t_end - t);
        let r = dt / dx;
        let mut next = cells.clone();
        for i in 0..n - 1 {
            let (wl, wr) = (cells[i], cells[i + 1]);
            let du = wr.u - wl.u;
            let dsigma = wr.sigma - wl.sigma;
            if du == 0.0 && dsigma == 0.0 {
                continue;
            }
            let u_bar = volpert_mean(wl.u, wr.u);
            let a_du = u_bar * du - dsigma;
            let a_dsigma = -k * k * du + u_bar * dsigma;
            let alpha = wl.u.abs().max(wr.u.abs()) + k;
            // Left-going part to cell i, right-going part to cell i+1.
            next[i].u -= r * 0.5 * (a_du - alpha * du);
            next[i].sigma -= r * 0.5 * (a_dsigma - alpha * dsigma);
            next[i + 1].u -= r * 0.5 * (a_du + alpha * du);
            next[i + 1].sigma -= r * 0.5 * (a_dsigma + alpha * dsigma);
        }
        cells = next;
        t += dt;
    }
    Ok(cells)
}
