//! Symmetric tridiagonal eigensolver and Gauss–Jacobi quadrature.

mod quadrature;
mod tridiag;

pub use quadrature::{gauss_jacobi, zeroth_moment, QuadratureRule};
pub use tridiag::{eig_symtridiag, SymEigen, TridiagonalSym};
