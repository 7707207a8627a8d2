//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Precondition violations on operation arguments (negative populations,
    /// dimension mismatches, n = 0 meshes, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Configuration problems, reported with the path of the offending key.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    /// CG ran out of iterations before reaching the requested tolerance.
    #[error("cg did not converge within {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    /// CG detected non-positive curvature, so the matrix is not SPD.
    #[error("matrix not SPD: p'Ap = {curvature:.3e} at iteration {iteration}")]
    NotSpd { iteration: usize, curvature: f64 },

    /// A linear solve inside the time stepper failed.
    #[error("solver failure for species {species} at step {step} (t = {t}): {source}")]
    Step {
        species: &'static str,
        step: usize,
        t: f64,
        #[source]
        source: Box<Error>,
    },

    /// Time integration produced NaN or negativity beyond round-off.
    #[error("integration failure at t = {t}: {message}")]
    Integration { t: f64, message: String },

    /// The wild population cannot sustain itself: (1-r) rho <= mu_F.
    #[error("population not viable: (1-r)*rho = {birth:.6} <= mu_F = {mu_f:.6}")]
    NotViable { birth: f64, mu_f: f64 },

    /// Root bracketing failed (threshold search outside [lo, hi]).
    #[error("bracket failure: {0}")]
    Bracket(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
