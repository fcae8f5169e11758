use serde::{Deserialize, Serialize};

use super::tridiag::{eig_symtridiag, TridiagonalSym};
use crate::error::{domain, Result};
use crate::specfn::{ln_beta, JacobiBasis};

/// Gauss–Jacobi nodes and weights for the weight (1-η)^α (1+η)^β on (-1, 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    alpha: f64,
    beta: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Σ w_i f(η_i) ≈ ∫ f(η) (1-η)^α (1+η)^β dη.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// ∫_{-1}^{1} (1-η)^α (1+η)^β dη = 2^{α+β+1} B(α+1, β+1).
pub fn zeroth_moment(alpha: f64, beta: f64) -> f64 {
    ((alpha + beta + 1.0) * 2f64.ln() + ln_beta(alpha + 1.0, beta + 1.0)).exp()
}

/// m-point Gauss–Jacobi rule by the Golub–Welsch algorithm.
pub fn gauss_jacobi(alpha: f64, beta: f64, m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(domain("quadrature rule needs at least one node"));
    }
    let basis = JacobiBasis::new(alpha, beta)?;
    let diag = (0..m).map(|j| basis.b(j)).collect();
    let off = (0..m - 1).map(|j| basis.a(j)).collect();
    let eig = eig_symtridiag(&TridiagonalSym::new(diag, off)?)?;
    let mu0 = zeroth_moment(alpha, beta);
    let weights = eig.vectors.iter().map(|v| mu0 * v[0] * v[0]).collect();
    Ok(QuadratureRule {
        alpha,
        beta,
        nodes: eig.values,
        weights,
    })
}
