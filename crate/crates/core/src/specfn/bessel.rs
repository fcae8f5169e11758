//! Scaled Bessel function of the first kind, J_ν(z) / z^ν, for real ν > -1/2.
//!
//! For z <= 2 the power series is summed directly. Above the crossover the
//! Poisson integral
//!
//! J_ν(z) / z^ν = 1 / (2^ν √π Γ(ν + 1/2)) ∫_{-1}^{1} cos(z t) (1 - t²)^{ν - 1/2} dt
//!
//! is evaluated with Gauss–Jacobi quadrature whose weight absorbs the
//! endpoint factor exactly.

use super::gamma::lgamma;
use crate::error::{domain, Result};
use crate::linalg::{gauss_jacobi, QuadratureRule};

/// Series/quadrature crossover point.
pub const SERIES_CROSSOVER: f64 = 2.0;

/// Poisson-quadrature node count used at argument z.
pub fn poisson_nodes(z: f64) -> usize {
    (z / 2.0).ceil() as usize + 24
}

/// J_ν(z) / z^ν for ν > -1/2 and z >= 0. At z = 0 this is 1 / (2^ν Γ(ν + 1)).
pub fn bessel_j_scaled(nu: f64, z: f64) -> Result<f64> {
    check(nu, z)?;
    if z <= SERIES_CROSSOVER {
        Ok(series(nu, z))
    } else {
        let rule = gauss_jacobi(nu - 0.5, nu - 0.5, poisson_nodes(z))?;
        Ok(poisson(nu, z, &rule))
    }
}

fn check(nu: f64, z: f64) -> Result<()> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(domain(format!("bessel_j_scaled requires nu > -1/2, got {nu}")));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(domain(format!("bessel_j_scaled requires finite z >= 0, got {z}")));
    }
    Ok(())
}

/// Σ_m (-1)^m (z/2)^{2m} / (m! Γ(m + ν + 1)) / 2^ν.
pub(crate) fn series(nu: f64, z: f64) -> f64 {
    let first = (-(nu * 2f64.ln()) - lgamma(nu + 1.0)).exp();
    let q = -0.25 * z * z;
    let mut term = first;
    let mut sum = first;
    for m in 1..200 {
        let m = m as f64;
        term *= q / (m * (m + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

pub(crate) fn poisson(nu: f64, z: f64, rule: &QuadratureRule) -> f64 {
    let integral: f64 = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(t, w)| w * (z * t).cos())
        .sum();
    let ln_pref = -(nu * 2f64.ln()) - 0.5 * std::f64::consts::PI.ln() - lgamma(nu + 0.5);
    ln_pref.exp() * integral
}

/// Reusable evaluator of J_ν(z)/z^ν over a bounded range of z.
///
/// The quadrature rule is built once for the largest argument, so repeated
/// evaluation costs one cosine per node.
#[derive(Debug, Clone)]
pub struct ScaledBessel {
    nu: f64,
    z_max: f64,
    rule: Option<QuadratureRule>,
    cosine: bool,
}

impl ScaledBessel {
    pub fn new(nu: f64, z_max: f64) -> Result<Self> {
        check(nu, z_max)?;
        let rule = if z_max > SERIES_CROSSOVER {
            Some(gauss_jacobi(nu - 0.5, nu - 0.5, poisson_nodes(z_max))?)
        } else {
            None
        };
        Ok(Self {
            nu,
            z_max,
            rule,
            cosine: false,
        })
    }

    /// Like [`ScaledBessel::new`] but also accepts ν = -1/2, where
    /// J_{-1/2}(z) / z^{-1/2} = √(2/π) cos z (the d = 1 radial order).
    pub fn with_half_order(nu: f64, z_max: f64) -> Result<Self> {
        if nu == -0.5 {
            check(0.0, z_max)?;
            return Ok(Self {
                nu,
                z_max,
                rule: None,
                cosine: true,
            });
        }
        Self::new(nu, z_max)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Evaluate at z in [0, z_max].
    pub fn eval(&self, z: f64) -> f64 {
        debug_assert!(
            z >= 0.0 && z <= self.z_max * (1.0 + 1e-12),
            "z = {z} outside [0, {}]",
            self.z_max
        );
        if self.cosine {
            return (2.0 / std::f64::consts::PI).sqrt() * z.cos();
        }
        match &self.rule {
            Some(rule) if z > SERIES_CROSSOVER => poisson(self.nu, z, rule),
            _ => series(self.nu, z),
        }
    }
}
