//! Scalar special functions: normalized Jacobi polynomials, scaled Bessel
//! functions of the first kind, and ln Γ.

mod bessel;
mod gamma;
mod jacobi;

pub use bessel::{bessel_j_scaled, poisson_nodes, ScaledBessel, SERIES_CROSSOVER};
pub use gamma::log_gamma;
pub(crate) use gamma::{lgamma, ln_beta};
pub use jacobi::{JacobiBasis, RecurrenceCoeffs};
