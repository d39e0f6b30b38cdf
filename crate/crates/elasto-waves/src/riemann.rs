//! Exact two-state Riemann solver.
//!
//! The middle state is the intersection of the 1-wave line through the left
//! state with the (backward) 2-wave line through the right state; both lines
//! are straight, so the solver is closed-form. Inside a j-rarefaction the
//! solution is
//!
//! ```text
//!     1-fan: u = xi + k,  sigma = k xi + sigma_b - k (u_b - k)
//!     2-fan: u = xi - k,  sigma = -k xi + sigma_b + k (u_b + k)
//! ```
//!
//! with xi = (x - x_origin) / t and (u_b, sigma_b) the state on the left
//! edge of the fan. Fan edges run at the family's characteristic speed
//! u + (-1)^j k on each side (the speeds of the two families differ by the
//! sign of the k term).

use crate::core::{ModelParams, State};
use crate::wave_curves::{lax_admissible, shock_speed, WaveFamily};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RiemannError {
    #[error("self-similar evaluation requires t > 0, got {0}")]
    NonPositiveTime(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveKind {
    Shock,
    Rarefaction,
}

/// One elementary wave of a fan, with its range in the similarity
/// variable xi = (x - x_origin) / t.
///
/// For a shock `xi_lo == xi_hi == s_j`; for a rarefaction
/// `xi_lo = lambda_j(left) < lambda_j(right) = xi_hi`.
#[derive(Debug, Clone, Copy)]
pub struct Wave {
    pub family: WaveFamily,
    pub kind: WaveKind,
    pub left: State,
    pub right: State,
    pub xi_lo: f64,
    pub xi_hi: f64,
}

/// The self-similar solution of a Riemann problem centred at
/// (x_origin, t = 0): up to two waves separated by constant states.
#[derive(Debug, Clone)]
pub struct WaveFan {
    params: ModelParams,
    x_origin: f64,
    waves: Vec<Wave>,
    states: Vec<State>,
}

impl WaveFan {
    pub fn params(&self) -> ModelParams {
        self.params
    }

    pub fn x_origin(&self) -> f64 {
        self.x_origin
    }

    pub fn waves(&self) -> &[Wave] {
        &self.waves
    }

    /// Constant states from left to right (1 to 3 entries).
    pub fn states(&self) -> &[State] {
        &self.states
    }

    /// Whether the xi ranges of the waves are disjoint and increasing.
    ///
    /// This holds whenever |u* - u| <= 4k across each shock. For very large
    /// opposing data the formal two-wave construction overlaps in speed (the
    /// classical solution breaks down there); evaluation then falls back to
    /// the left-to-right scan convention of [`eval_fan`].
    pub fn waves_ordered(&self) -> bool {
        self.waves.windows(2).all(|w| w[0].xi_hi <= w[1].xi_lo)
    }
}

/// Intersection of the 1-wave line through `left` with the backward 2-wave
/// line through `right`:
///
/// ```text
///     u* = (u_L + u_R) / 2 + (sigma_R - sigma_L) / 2k
///     sigma* = (sigma_L + sigma_R) / 2 + k (u_R - u_L) / 2
/// ```
///
/// The lines have slopes +k and -k, so they always intersect transversally.
pub fn middle_state(p: ModelParams, left: State, right: State) -> State {
    let k = p.k();
    State::new(
        0.5 * (left.u + right.u) + (right.sigma - left.sigma) / (2.0 * k),
        0.5 * (left.sigma + right.sigma) + 0.5 * k * (right.u - left.u),
    )
}

/// State inside a j-rarefaction fan at similarity coordinate `xi`, given the
/// state `base` on the left edge of the fan.
pub fn rarefaction_state(p: ModelParams, family: WaveFamily, xi: f64, base: State) -> State {
    let k = p.k();
    match family {
        WaveFamily::One => State::new(xi + k, k * xi + base.sigma - k * (base.u - k)),
        WaveFamily::Two => State::new(xi - k, -k * xi + base.sigma + k * (base.u + k)),
    }
}

fn make_wave(p: ModelParams, family: WaveFamily, left: State, right: State) -> Wave {
    if right.u > left.u {
        Wave {
            family,
            kind: WaveKind::Rarefaction,
            left,
            right,
            xi_lo: family.lambda(p, left),
            xi_hi: family.lambda(p, right),
        }
    } else {
        let s = shock_speed(p, family, left.u, right.u);
        debug_assert!(lax_admissible(p, family, left, right).unwrap_or(false));
        Wave {
            family,
            kind: WaveKind::Shock,
            left,
            right,
            xi_lo: s,
            xi_hi: s,
        }
    }
}

/// Solve the Riemann problem with data (`left`, `right`) across x_origin.
///
/// Zero-strength waves are omitted, so the fan has 0, 1 or 2 waves.
pub fn solve_riemann(p: ModelParams, left: State, right: State, x_origin: f64) -> WaveFan {
    let mid = middle_state(p, left, right);
    let mut waves = Vec::with_capacity(2);
    if mid.u != left.u {
        waves.push(make_wave(p, WaveFamily::One, left, mid));
    }
    if right.u != mid.u {
        waves.push(make_wave(p, WaveFamily::Two, mid, right));
    }
    let states = match waves.len() {
        0 => vec![left],
        1 => vec![left, right],
        _ => vec![left, mid, right],
    };
    WaveFan {
        params: p,
        x_origin,
        waves,
        states,
    }
}

/// Evaluate the self-similar solution at (x, t), t > 0.
///
/// Constant states outside the waves, fan formulas inside rarefactions; a
/// point exactly on a shock evaluates to the right state.
pub fn eval_fan(fan: &WaveFan, x: f64, t: f64) -> Result<State, RiemannError> {
    if !t.is_finite() || t <= 0.0 {
        return Err(RiemannError::NonPositiveTime(t));
    }
    let xi = (x - fan.x_origin) / t;
    let mut current = fan.states[0];
    for wave in &fan.waves {
        if xi < wave.xi_lo {
            return Ok(current);
        }
        if xi <= wave.xi_hi {
            return Ok(match wave.kind {
                WaveKind::Shock => wave.right,
                WaveKind::Rarefaction => rarefaction_state(fan.params, wave.family, xi, wave.left),
            });
        }
        current = wave.right;
    }
    Ok(current)
}
