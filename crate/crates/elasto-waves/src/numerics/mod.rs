//! Independent numerical oracles.
//!
//! Three ways to cross-check the closed forms: an exact front tracker for
//! the scalar equation the system reduces to on an invariant level set, a
//! first-order path-conservative finite-volume scheme for the full system,
//! and a random-choice (Glimm) scheme built on the exact Riemann solver.

mod front_track;
mod fv;
mod glimm;

pub use front_track::{front_track_scalar, Front, FrontKind, FrontState, ScalarPiece};
pub use fv::fv_path_conservative;
pub use glimm::{glimm_evolve, glimm_step, van_der_corput};

use crate::core::State;
use crate::interaction::{PiecewiseSolution, Scenario};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NumericsError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(
        "domain [{x_min}, {x_max}] too small: waves reach [{wave_lo}, {wave_hi}] by t = {t_end}"
    )]
    DomainTooSmall {
        x_min: f64,
        x_max: f64,
        wave_lo: f64,
        wave_hi: f64,
        t_end: f64,
    },
}

/// Uniform 1-D cell grid with a CFL number for explicit stepping.
#[derive(Debug, Clone, Copy)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n_cells: usize,
    pub cfl: f64,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize, cfl: f64) -> Result<Self, NumericsError> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(NumericsError::InvalidGrid(format!(
                "need x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_cells < 10 {
            return Err(NumericsError::InvalidGrid(format!(
                "need at least 10 cells, got {n_cells}"
            )));
        }
        if !(cfl > 0.0 && cfl < 1.0) {
            return Err(NumericsError::InvalidGrid(format!(
                "CFL must lie in (0, 1), got {cfl}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_cells,
            cfl,
        })
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    #[inline]
    pub fn center(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx()
    }
}

/// Largest characteristic speed magnitude over the three scenario states.
pub fn max_wave_speed(s: &Scenario) -> f64 {
    let k = s.params().k();
    [s.left(), s.middle(), s.right()]
        .iter()
        .map(|st| st.u.abs() + k)
        .fold(0.0, f64::max)
}

/// Window guaranteed to contain every wave of the scenario up to `t_end`.
pub fn default_window(s: &Scenario, t_end: f64) -> (f64, f64) {
    let pad = (max_wave_speed(s) + 1.0) * t_end;
    (s.x0() - pad, s.x1() + pad)
}

/// Cell averages of the initial data (piecewise constant, so the cell-centre
/// value except for the two cells cut by a jump, where the centre value is
/// the first-order choice).
pub fn initial_cells(s: &Scenario, grid: &Grid1D) -> Vec<State> {
    (0..grid.n_cells)
        .map(|i| {
            let x = grid.center(i);
            if x < s.x0() {
                s.left()
            } else if x < s.x1() {
                s.middle()
            } else {
                s.right()
            }
        })
        .collect()
}

/// L1 distance between cell states and the exact solution at time t,
/// summed over both components.
pub fn l1_distance(cells: &[State], sol: &PiecewiseSolution, grid: &Grid1D, t: f64) -> f64 {
    assert!(t > 0.0);
    let dx = grid.dx();
    cells
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let exact = sol.eval(grid.center(i), t).expect("t > 0");
            ((c.u - exact.u).abs() + (c.sigma - exact.sigma).abs()) * dx
        })
        .sum()
}
