//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by state validation, numeric evaluation, and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    /// Density matrix fails a physicality check (Hermiticity, trace, positivity).
    #[error("non-physical density matrix: {0}")]
    NonPhysical(String),

    /// A family parameter is outside its admissible range.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Cat state with vanishing normalization (β = 0 together with φ = π).
    #[error("degenerate cat state: the normalization constant vanishes at beta = 0, phi = pi")]
    DegenerateCat,

    /// Requested Fock-space truncation retains too little probability.
    #[error("truncation too severe: retained trace {retained} < 1 - {tol}")]
    TruncationTooSevere { retained: f64, tol: f64 },

    /// Operation not defined or not implemented for this state family.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The ordering parameter s violates the state-dependent admissibility bound.
    #[error("ordering s = {s} not admissible for this state (requires {requirement})")]
    OrderingNotAdmissible { s: f64, requirement: String },

    /// Mandel Q factor is undefined at zero mean photon number.
    #[error("mean photon number is zero; Mandel Q undefined")]
    ZeroMeanPhoton,

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: err_est {err:.3e} > tol {tol:.3e} after {panels} panels")]
    NoConvergence { err: f64, tol: f64, panels: usize },

    /// Invalid quadrature or sweep configuration.
    #[error("bad configuration: {0}")]
    BadConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 input/validation, 3 non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoConvergence { .. } => 3,
            _ => 2,
        }
    }
}
