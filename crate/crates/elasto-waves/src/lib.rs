//! Exact solver for the 2x2 nonconservative velocity-stress system
//!
//! ```text
//!     u_t + u u_x - sigma_x     = 0
//!     sigma_t + u sigma_x - k^2 u_x = 0
//! ```
//!
//! with k > 0 the elastic wave speed. The system is strictly hyperbolic
//! (characteristic speeds u - k and u + k) but nonconservative: the product
//! u sigma_x is read as a Volpert (straight-line path) measure, which fixes
//! the jump conditions used throughout.
//!
//! The crate provides:
//!
//! - [`riemann`]: the exact two-state Riemann solver (closed form),
//! - [`interaction`]: closed-form solutions of the three-state problem when
//!   all data lie on a level set of one Riemann invariant, including the
//!   curved (sqrt-in-time) shock paths that arise when a shock penetrates a
//!   rarefaction fan,
//! - [`verify`]: weak-form checks (Rankine-Hugoniot residuals, fan-edge
//!   continuity, interior PDE residuals),
//! - [`numerics`]: independent numerical oracles (scalar front tracking, a
//!   path-conservative finite-volume scheme, a random-choice scheme),
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod core;
pub mod interaction;
pub mod numerics;
pub mod riemann;
pub mod verify;
pub mod wave_curves;

pub use crate::core::{volpert_mean, InvariantPair, ModelParams, State};
pub use crate::interaction::{PiecewiseSolution, Scenario};
pub use crate::riemann::{solve_riemann, WaveFan};
pub use crate::wave_curves::WaveFamily;
