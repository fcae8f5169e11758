//! Spherical harmonics (d ≤ 3), ball polynomials, full ball-PSWF evaluation
//! and the kernel of Q_c = F_c* F_c.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{gauss_jacobi, QuadratureRule};
use crate::pswf::RadialPswf;
use crate::specfn::{JacobiBasis, ScaledBessel};

/// A point on S^{d-1} for d = 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SphericalPoint {
    /// S^0 = {-1, +1}; `x` is the sign.
    D1 { x: f64 },
    /// Polar angle θ.
    D2 { theta: f64 },
    /// Polar angle θ from the x3 axis and azimuth φ.
    D3 { theta: f64, phi: f64 },
}

impl SphericalPoint {
    pub fn dim(&self) -> u32 {
        match self {
            SphericalPoint::D1 { .. } => 1,
            SphericalPoint::D2 { .. } => 2,
            SphericalPoint::D3 { .. } => 3,
        }
    }

    /// Split a Cartesian point into (‖x‖, x̂). The origin maps to the
    /// "north" direction.
    pub fn from_cartesian(x: &[f64]) -> Result<(f64, SphericalPoint)> {
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let point = match x.len() {
            1 => SphericalPoint::D1 {
                x: if x[0] < 0.0 { -1.0 } else { 1.0 },
            },
            2 => SphericalPoint::D2 {
                theta: x[1].atan2(x[0]),
            },
            3 => {
                let rho = x[0].hypot(x[1]);
                SphericalPoint::D3 {
                    theta: rho.atan2(x[2]),
                    phi: x[1].atan2(x[0]),
                }
            }
            d => return Err(Error::UnsupportedDimension(d as u32)),
        };
        Ok((r, point))
    }

    pub fn to_cartesian(&self) -> Vec<f64> {
        match *self {
            SphericalPoint::D1 { x } => vec![x],
            SphericalPoint::D2 { theta } => vec![theta.cos(), theta.sin()],
            SphericalPoint::D3 { theta, phi } => {
                let s = theta.sin();
                vec![s * phi.cos(), s * phi.sin(), theta.cos()]
            }
        }
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Dimension of the space of degree-n spherical harmonics on S^{d-1}.
pub fn sph_harm_dim(d: u32, n: u32) -> usize {
    let (d, n) = (d as u64, n as u64);
    let first = binomial(n + d - 1, n);
    let second = if n >= 2 { binomial(n + d - 3, n - 2) } else { 0 };
    (first - second) as usize
}

fn check_index(d: u32, n: u32, ell: usize) -> Result<()> {
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    if ell < 1 || ell > sph_harm_dim(d, n) {
        return Err(Error::IndexOutOfRange { d, n, ell });
    }
    Ok(())
}

/// Real orthonormal spherical harmonic Y_ℓ^n at a point of S^{d-1}.
///
/// d = 3 uses ℓ = 1 for the zonal harmonic and ℓ = 2m / 2m + 1 for the
/// cos(mφ) / sin(mφ) pair of order m = 1..n.
pub fn sph_harm_eval(d: u32, n: u32, ell: usize, point: &SphericalPoint) -> Result<f64> {
    check_index(d, n, ell)?;
    if point.dim() != d {
        return Err(domain(format!(
            "point on S^{} used with d = {d}",
            point.dim() as i64 - 1
        )));
    }
    let value = match *point {
        SphericalPoint::D1 { x } => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            if n == 0 {
                s
            } else {
                x * s
            }
        }
        SphericalPoint::D2 { theta } => {
            if n == 0 {
                1.0 / (2.0 * PI).sqrt()
            } else if ell == 1 {
                (n as f64 * theta).cos() / PI.sqrt()
            } else {
                (n as f64 * theta).sin() / PI.sqrt()
            }
        }
        SphericalPoint::D3 { theta, phi } => {
            let t = theta.cos();
            if ell == 1 {
                JacobiBasis::new(0.0, 0.0)?.eval(n as usize, t) / (8.0 * PI).sqrt()
            } else {
                let m = ell / 2;
                let mf = m as f64;
                let basis = JacobiBasis::new(mf, mf)?;
                let radial = theta.sin().powi(m as i32) * basis.eval(n as usize - m, t)
                    / (2f64.powi(m as i32 + 1) * PI.sqrt());
                let angular = if ell.is_multiple_of(2) {
                    (mf * phi).cos()
                } else {
                    (mf * phi).sin()
                };
                radial * angular
            }
        }
    };
    Ok(value)
}

/// P̃_k^{(α, β_n)}(2‖x‖² - 1) ‖x‖^n Y_ℓ^n(x̂).
pub fn ball_poly_eval(d: u32, alpha: f64, n: u32, k: usize, ell: usize, x: &[f64]) -> Result<f64> {
    check_index(d, n, ell)?;
    if x.len() != d as usize {
        return Err(domain(format!("point has {} coordinates, expected {d}", x.len())));
    }
    let (r, dir) = SphericalPoint::from_cartesian(x)?;
    if n >= 1 && r == 0.0 {
        return Ok(0.0);
    }
    let basis = JacobiBasis::new(alpha, n as f64 + d as f64 / 2.0 - 1.0)?;
    let radial = basis.eval(k, 2.0 * r * r - 1.0) * r.powi(n as i32);
    Ok(radial * sph_harm_eval(d, n, ell, &dir)?)
}

/// φ(η) of a solved radial PSWF.
pub fn eval_phi(pswf: &RadialPswf, eta: f64) -> f64 {
    pswf.phi(eta)
}

/// Which radial profile to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RadialForm {
    /// r^n φ(2r² - 1)
    Plain,
    /// r^{n + (d-1)/2} φ(2r² - 1)
    Slepian,
    /// φ(2r² - 1)
    Phi,
}

impl std::str::FromStr for RadialForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(RadialForm::Plain),
            "slepian" => Ok(RadialForm::Slepian),
            "phi" => Ok(RadialForm::Phi),
            other => Err(domain(format!("unknown radial form '{other}'"))),
        }
    }
}

pub fn eval_radial(pswf: &RadialPswf, r: f64, form: RadialForm) -> f64 {
    let p = &pswf.params;
    let phi = pswf.phi(2.0 * r * r - 1.0);
    match form {
        RadialForm::Phi => phi,
        RadialForm::Plain => r.powi(p.n as i32) * phi,
        RadialForm::Slepian => r.powf(p.n as f64 + (p.d as f64 - 1.0) / 2.0) * phi,
    }
}

/// ψ_{k,ℓ}^{α,n}(x; c) on the ball, d ≤ 3.
pub fn eval_psi_ball(pswf: &RadialPswf, ell: usize, x: &[f64]) -> Result<f64> {
    let p = &pswf.params;
    check_index(p.d, p.n, ell)?;
    if x.len() != p.d as usize {
        return Err(domain(format!(
            "point has {} coordinates, expected {}",
            x.len(),
            p.d
        )));
    }
    let (r, dir) = SphericalPoint::from_cartesian(x)?;
    if r == 0.0 {
        if p.n >= 1 {
            return Ok(0.0);
        }
        return Ok(pswf.phi(-1.0) * sph_harm_eval(p.d, 0, ell, &dir)?);
    }
    Ok(eval_radial(pswf, r, RadialForm::Plain) * sph_harm_eval(p.d, p.n, ell, &dir)?)
}

/// Evaluator for the kernel K_c^{(α)}(ρ) of Q_c^{(α)} on [0, ρ_max].
///
/// K(ρ) = (2π)^{d/2} ∫_0^1 s^{d-1} (1-s²)^α J_ν(csρ)/(csρ)^ν ds, ν = (d-2)/2,
/// integrated in η = 2s² - 1 against the Gauss–Jacobi weight (α, d/2 - 1).
#[derive(Debug, Clone)]
pub struct KernelQc {
    c: f64,
    scale: f64,
    rule: QuadratureRule,
    bessel: ScaledBessel,
}

impl KernelQc {
    pub fn new(d: u32, alpha: f64, c: f64, rho_max: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(domain(format!("kernel requires c > 0, got {c}")));
        }
        if d == 0 {
            return Err(domain("dimension d must be at least 1"));
        }
        if !(rho_max >= 0.0) || !rho_max.is_finite() {
            return Err(domain(format!("distance must be finite and >= 0, got {rho_max}")));
        }
        let nu = (d as f64 - 2.0) / 2.0;
        let rule = gauss_jacobi(alpha, d as f64 / 2.0 - 1.0, c.ceil() as usize + 24)?;
        let bessel = ScaledBessel::with_half_order(nu, c * rho_max)?;
        let df = d as f64;
        let scale = (2.0 * PI).powf(df / 2.0) * 2f64.powf(-alpha - df / 2.0 - 1.0);
        Ok(Self {
            c,
            scale,
            rule,
            bessel,
        })
    }

    pub fn eval(&self, rho: f64) -> f64 {
        let c = self.c;
        let integral = self
            .rule
            .integrate(|eta| self.bessel.eval(c * rho * ((1.0 + eta) / 2.0).sqrt()));
        self.scale * integral
    }
}

/// K_c^{(α)} at separation ρ = ‖τ - x‖.
pub fn kernel_qc(d: u32, alpha: f64, c: f64, rho: f64) -> Result<f64> {
    Ok(KernelQc::new(d, alpha, c, rho)?.eval(rho))
}

/// Tensor-product quadrature on B^d (d ≤ 3) for the weight (1 - ‖x‖²)^α.
///
/// Radial nodes come from Gauss–Jacobi in η = 2r² - 1; the angular rule is
/// the trapezoid rule in θ for d = 2, and Gauss–Legendre in cos θ times the
/// trapezoid rule in φ for d = 3.
#[derive(Debug, Clone)]
pub struct BallQuadrature {
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl BallQuadrature {
    pub fn new(d: u32, alpha: f64, radial: usize, angular: usize) -> Result<Self> {
        if !(1..=3).contains(&d) {
            return Err(Error::UnsupportedDimension(d));
        }
        let df = d as f64;
        let rrule = gauss_jacobi(alpha, df / 2.0 - 1.0, radial)?;
        let rscale = 2f64.powf(-alpha - df / 2.0 - 1.0);
        let sphere = sphere_rule(d, angular)?;
        let mut points = Vec::with_capacity(rrule.len() * sphere.len());
        let mut weights = Vec::with_capacity(points.capacity());
        for (&eta, &wr) in rrule.nodes().iter().zip(rrule.weights()) {
            let r = ((1.0 + eta) / 2.0).sqrt();
            for (dir, ws) in &sphere {
                points.push(dir.iter().map(|v| r * v).collect());
                weights.push(rscale * wr * ws);
            }
        }
        Ok(Self { points, weights })
    }

    pub fn integrate<F: FnMut(&[f64]) -> f64>(&self, mut f: F) -> f64 {
        self.points.iter().zip(&self.weights).map(|(x, w)| w * f(x)).sum()
    }
}

/// Points and weights on S^{d-1}.
pub fn sphere_rule(d: u32, angular: usize) -> Result<Vec<(Vec<f64>, f64)>> {
    let angular = angular.max(1);
    Ok(match d {
        1 => vec![(vec![-1.0], 1.0), (vec![1.0], 1.0)],
        2 => (0..angular)
            .map(|j| {
                let t = 2.0 * PI * j as f64 / angular as f64;
                (vec![t.cos(), t.sin()], 2.0 * PI / angular as f64)
            })
            .collect(),
        3 => {
            let gl = gauss_jacobi(0.0, 0.0, angular)?;
            let nphi = 2 * angular;
            let mut out = Vec::with_capacity(gl.len() * nphi);
            for (&ct, &w) in gl.nodes().iter().zip(gl.weights()) {
                let st = (1.0 - ct * ct).sqrt();
                for j in 0..nphi {
                    let ph = 2.0 * PI * j as f64 / nphi as f64;
                    out.push((vec![st * ph.cos(), st * ph.sin(), ct], w * 2.0 * PI / nphi as f64));
                }
            }
            out
        }
        _ => return Err(Error::UnsupportedDimension(d)),
    })
}
