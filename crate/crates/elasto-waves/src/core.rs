//! Phase-space primitives: states, model parameter, characteristic
//! structure, Riemann invariants, Volpert averages.
//!
//! Everything here is a plain immutable value; all functions are pure.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CoreError {
    #[error("wave speed k must be positive and finite, got {0}")]
    InvalidWaveSpeed(f64),
}

/// Model parameter of the system: the elastic wave speed k > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    k: f64,
}

impl ModelParams {
    pub fn new(k: f64) -> Result<Self, CoreError> {
        if k.is_finite() && k > 0.0 {
            Ok(Self { k })
        } else {
            Err(CoreError::InvalidWaveSpeed(k))
        }
    }

    #[inline]
    pub fn k(&self) -> f64 {
        self.k
    }
}

/// A point (u, sigma) in velocity-stress phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub u: f64,
    pub sigma: f64,
}

impl State {
    #[inline]
    pub fn new(u: f64, sigma: f64) -> Self {
        Self { u, sigma }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.sigma.is_finite()
    }
}

/// Characteristic speeds and right eigenvector directions at a state.
///
/// The speed gap lambda2 - lambda1 = 2k is independent of the state, so the
/// system never loses strict hyperbolicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharStructure {
    pub lambda1: f64,
    pub lambda2: f64,
    /// Direction of the 1-field eigenvector, (1, k).
    pub r1: (f64, f64),
    /// Direction of the 2-field eigenvector, (1, -k).
    pub r2: (f64, f64),
}

/// The pair of Riemann invariants w1 = sigma - k u, w2 = sigma + k u.
///
/// w1 is constant across 2-waves and w2 across 1-waves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantPair {
    pub w1: f64,
    pub w2: f64,
}

/// Characteristic speeds lambda1 = u - k, lambda2 = u + k and the
/// eigenvector directions (1, k), (1, -k).
pub fn char_speeds(p: ModelParams, s: State) -> CharStructure {
    let k = p.k();
    CharStructure {
        lambda1: s.u - k,
        lambda2: s.u + k,
        r1: (1.0, k),
        r2: (1.0, -k),
    }
}

/// Riemann invariants (w1, w2) = (sigma - k u, sigma + k u).
pub fn riemann_invariants(p: ModelParams, s: State) -> InvariantPair {
    let k = p.k();
    InvariantPair {
        w1: s.sigma - k * s.u,
        w2: s.sigma + k * s.u,
    }
}

/// Inverse of [`riemann_invariants`]: u = (w2 - w1) / 2k, sigma = (w1 + w2) / 2.
pub fn state_from_invariants(p: ModelParams, w: InvariantPair) -> State {
    State::new((w.w2 - w.w1) / (2.0 * p.k()), 0.5 * (w.w1 + w.w2))
}

/// Volpert average of a scalar across a jump: the straight-line-path mean
/// of g(w) with g the identity, i.e. the arithmetic midpoint.
#[inline]
pub fn volpert_mean(left: f64, right: f64) -> f64 {
    0.5 * (left + right)
}
