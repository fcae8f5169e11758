use thiserror::Error;

/// Errors produced by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("tridiagonal eigensolver did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error(
        "truncation not converged for k = {k}: chi = {chi:e} at K = {truncation}, {chi_doubled:e} at 2K"
    )]
    TruncationNotConverged {
        k: usize,
        truncation: usize,
        chi: f64,
        chi_doubled: f64,
    },

    #[error("radial function vanishes numerically at the origin (phi(-1) = {value:e})")]
    DegenerateEndpoint { value: f64 },

    #[error("computed eigenvalue lambda = {value:e} is not positive")]
    NonPositiveLambda { value: f64 },

    #[error("harmonic index ell = {ell} out of range for d = {d}, n = {n}")]
    IndexOutOfRange { d: u32, n: u32, ell: usize },

    #[error("dimension d = {0} is not supported for full-ball evaluation (d must be 1, 2 or 3)")]
    UnsupportedDimension(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
