//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by state construction, certification, sampling and
/// quadrature routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector with norm below the representable threshold cannot be
    /// normalized.
    #[error("vector norm {norm:e} is below the zero threshold")]
    ZeroVector {
        /// Norm of the offending vector.
        norm: f64,
    },

    /// Input failed a structural validation check (wrong length, bad
    /// weights, malformed JSON, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation restricted to real states received a state with a
    /// nonzero imaginary part.
    #[error("operation requires real amplitudes (max |Im| = {max_imag:e})")]
    NotReal {
        /// Largest imaginary magnitude found.
        max_imag: f64,
    },

    /// The ensemble states are linearly dependent: the Gram determinant
    /// vanishes, so the spectral reduction does not apply.
    #[error("ensemble states are linearly dependent (|det t| = {det:e})")]
    DependentStates {
        /// Magnitude of the Gram determinant.
        det: f64,
    },

    /// An eigenvalue computation produced a residual or negativity beyond
    /// what double precision on 4x4 problems can explain.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// A dimer operation expected a different number of superposed
    /// branches.
    #[error("expected {expected} branches, got {got}")]
    WrongBranchCount {
        /// Required branch count.
        expected: usize,
        /// Actual branch count.
        got: usize,
    },

    /// The superposition norm `1 + sin(2 theta) mu_1` is numerically zero.
    #[error("degenerate superposition norm: 1 + sin(2 theta) mu1 = {value:e}")]
    DegenerateNorm {
        /// Value of the vanishing norm-squared.
        value: f64,
    },

    /// A brute-force state vector would not fit in memory.
    #[error("dimer count {pairs} exceeds the brute-force limit of {limit} pairs")]
    TooLarge {
        /// Requested number of entangled pairs.
        pairs: usize,
        /// Maximum supported by the dense oracle.
        limit: usize,
    },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: error estimate {estimate:e} exceeds tolerance {tol:e}")]
    NonConvergence {
        /// Achieved error estimate.
        estimate: f64,
        /// Requested tolerance.
        tol: f64,
    },

    /// Gram-Schmidt orthogonalization is undefined for (anti)parallel
    /// states.
    #[error("states are parallel (|<psi1|psi2>| = {overlap})")]
    ParallelStates {
        /// Magnitude of the overlap.
        overlap: f64,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
