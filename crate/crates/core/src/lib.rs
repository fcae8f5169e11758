//! Prolate spheroidal wave functions on the d-dimensional unit ball.
//!
//! The radial eigenproblem is solved with the Bouwkamp algorithm: an
//! expansion in normalized Jacobi polynomials turns the Sturm–Liouville
//! problem into a symmetric tridiagonal matrix eigenproblem.
//!
//! ```
//! use prolate::pswf::{lambda_eigenvalue, solve_pswfs, RadialFamily};
//!
//! let family = RadialFamily::new(2, 0.0, 1.0, 0)?;
//! let sol = &solve_pswfs(&family, 0)?[0];
//! assert!((sol.chi - 0.489593258779101).abs() < 1e-13);
//! assert!(lambda_eigenvalue(sol)? > 0.0);
//! # Ok::<(), prolate::Error>(())
//! ```

pub mod error;
pub mod geometry;
pub mod linalg;
pub mod pswf;
pub mod specfn;
pub mod verify;

pub use error::{Error, Result};
