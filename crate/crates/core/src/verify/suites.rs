use std::f64::consts::PI;
use std::str::FromStr;

use super::tables::{perturbed_eigen_check, table_check};
use super::{
    hankel_lambda_fit, hankel_residual, orthonormality_gram, recurrence_residual, recurrence_residual_at,
    VerificationReport,
};
use crate::error::{domain, Error, Result};
use crate::geometry::{
    ball_poly_eval, eval_psi_ball, kernel_qc, sph_harm_dim, sph_harm_eval, sphere_rule, BallQuadrature,
    KernelQc, SphericalPoint,
};
use crate::linalg::{eig_symtridiag, gauss_jacobi};
use crate::pswf::{
    build_matrix, chi_bounds, gamma_coef, lambda_eigenvalue, mu_eigenvalue, perturbation_coeffs, solve_pswfs,
    truncation_size, RadialFamily, RadialPswf,
};
use crate::specfn::{bessel_j_scaled, JacobiBasis};

/// Radii at which the Hankel identity is checked.
pub const HANKEL_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
/// Below this bandwidth λ ∝ c^{n+2k} is too small for a relative residual.
pub const HANKEL_MIN_C: f64 = 1e-3;

const HANKEL_TOL: f64 = 1e-8;
const ROUTE_TOL: f64 = 1e-8;
const GRAM_TOL: f64 = 1e-11;
const RECURRENCE_TOL: f64 = 1e-13;
const TRUNCATION_TOL: f64 = 1e-13;
const RAYLEIGH_TOL: f64 = 1e-6;
/// "Strictly below zero" for inequality metrics.
const STRICT: f64 = -f64::MIN_POSITIVE;

const HANKEL_PAIRS: [(u32, f64); 3] = [(2, 0.0), (3, 1.0), (2, -0.5)];
const HANKEL_CS: [f64; 3] = [1.0, 5.0, 10.0];
const GRID_N_MAX: u32 = 2;
const GRID_K_MAX: usize = 4;

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthonormality,
    Hankel,
    RouteAgreement,
    Bounds,
    Ordering,
    Perturbation,
    Recurrence,
    Truncation,
    Rayleigh,
    Properties,
    Tables,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "orthonormality" => Suite::Orthonormality,
            "hankel" => Suite::Hankel,
            "route" => Suite::RouteAgreement,
            "bounds" => Suite::Bounds,
            "ordering" => Suite::Ordering,
            "perturbation" => Suite::Perturbation,
            "recurrence" => Suite::Recurrence,
            "truncation" => Suite::Truncation,
            "rayleigh" => Suite::Rayleigh,
            "properties" => Suite::Properties,
            "tables" => Suite::Tables,
            "all" => Suite::All,
            other => return Err(domain(format!("unknown suite '{other}'"))),
        })
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Orthonormality => vec![suite_orthonormality()?],
        Suite::Hankel => vec![suite_hankel()?],
        Suite::RouteAgreement => vec![suite_route_agreement()?],
        Suite::Bounds => vec![suite_bounds()?],
        Suite::Ordering => vec![suite_ordering()?],
        Suite::Perturbation => vec![suite_perturbation()?],
        Suite::Recurrence => vec![suite_recurrence()?],
        Suite::Truncation => vec![suite_truncation()?],
        Suite::Rayleigh => vec![suite_mu_rayleigh()?],
        Suite::Properties => vec![suite_properties()?],
        Suite::Tables => (1..=4).map(table_check).collect::<Result<_>>()?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Orthonormality,
                Suite::Hankel,
                Suite::RouteAgreement,
                Suite::Bounds,
                Suite::Ordering,
                Suite::Perturbation,
                Suite::Recurrence,
                Suite::Truncation,
                Suite::Rayleigh,
                Suite::Properties,
                Suite::Tables,
            ] {
                all.extend(run_suite(s)?);
            }
            all
        }
    })
}

fn label(s: &RadialPswf) -> String {
    let p = &s.params;
    format!("d={} alpha={} c={} n={} k={}", p.d, p.alpha, p.c, p.n, p.k)
}

/// (d, α) ∈ {(2,0), (3,1), (2,-1/2)}, c ∈ {1, 5, 10}, n ≤ 2.
fn hankel_families() -> Vec<RadialFamily> {
    let mut out = Vec::new();
    for &(d, alpha) in &HANKEL_PAIRS {
        for &c in &HANKEL_CS {
            for n in 0..=GRID_N_MAX {
                out.push(RadialFamily { d, alpha, c, n });
            }
        }
    }
    out
}

/// The Hankel grid plus d = 1 and d = 5.
fn wide_families() -> Vec<RadialFamily> {
    let mut out = hankel_families();
    for &alpha in &[0.0, 1.0] {
        for &c in &HANKEL_CS {
            for n in 0..=1 {
                out.push(RadialFamily { d: 1, alpha, c, n });
            }
            for n in 0..=GRID_N_MAX {
                out.push(RadialFamily { d: 5, alpha, c, n });
            }
        }
    }
    out
}

/// Hankel-route residual over the standard (d, α, c, n) grid, k ≤ 4.
pub fn suite_hankel() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("hankel");
    for family in hankel_families() {
        if family.c < HANKEL_MIN_C {
            continue;
        }
        for s in solve_pswfs(&family, GRID_K_MAX)? {
            let lambda = lambda_eigenvalue(&s)?;
            report.push(label(&s), hankel_residual(&s, lambda, &HANKEL_GRID)?, HANKEL_TOL);
        }
    }
    Ok(report)
}

/// λ from the coefficient formula vs a least-squares fit of the Hankel
/// integral, c ∈ [1/2, 10].
pub fn suite_route_agreement() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("route");
    for &(d, alpha) in &HANKEL_PAIRS {
        for &c in &[0.5, 2.0, 5.0, 10.0] {
            for n in 0..=GRID_N_MAX {
                let family = RadialFamily::new(d, alpha, c, n)?;
                for s in solve_pswfs(&family, 2)? {
                    let lambda = lambda_eigenvalue(&s)?;
                    let fit = hankel_lambda_fit(&s, &HANKEL_GRID)?;
                    report.push(label(&s), ((fit - lambda) / lambda).abs(), ROUTE_TOL);
                }
            }
        }
    }
    Ok(report)
}

pub fn suite_orthonormality() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("orthonormality");
    for n in 0..=3 {
        let family = RadialFamily::new(2, 0.0, 10.0, n)?;
        let sols = solve_pswfs(&family, 10)?;
        report.push(
            format!("d=2 alpha=0 c=10 n={n} k<=10"),
            orthonormality_gram(&sols)?,
            GRAM_TOL,
        );
    }
    for &(d, alpha, c) in &[(3, 1.0, 5.0), (2, -0.5, 20.0), (1, 0.0, 8.0), (5, 2.0, 3.0)] {
        let family = RadialFamily::new(d, alpha, c, 1)?;
        let sols = solve_pswfs(&family, 6)?;
        report.push(
            format!("d={d} alpha={alpha} c={c} n=1 k<=6"),
            orthonormality_gram(&sols)?,
            GRAM_TOL,
        );
    }
    Ok(report)
}

/// γ_{n+2k} < χ < γ_{n+2k} + c²; metric max(γ - χ, χ - γ - c²)/c² < 0.
pub fn suite_bounds() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("bounds");
    for family in wide_families() {
        for s in solve_pswfs(&family, GRID_K_MAX)? {
            let (lo, hi) = chi_bounds(&s.params);
            let metric = (lo - s.chi).max(s.chi - hi) / (family.c * family.c);
            report.push(label(&s), metric, STRICT);
        }
    }
    Ok(report)
}

/// χ strictly increasing and λ strictly decreasing in k.
pub fn suite_ordering() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("ordering");
    for family in wide_families() {
        let sols = solve_pswfs(&family, GRID_K_MAX)?;
        let lambdas = sols.iter().map(lambda_eigenvalue).collect::<Result<Vec<_>>>()?;
        let metric = sols
            .windows(2)
            .zip(lambdas.windows(2))
            .map(|(s, l)| (s[0].chi / s[1].chi).max(l[1] / l[0]) - 1.0)
            .fold(f64::NEG_INFINITY, f64::max);
        let tag = format!(
            "d={} alpha={} c={} n={} k<={GRID_K_MAX}",
            family.d, family.alpha, family.c, family.n
        );
        report.push(tag, metric, STRICT);
    }
    Ok(report)
}

fn solve_k(d: u32, alpha: f64, c: f64, n: u32, k: usize) -> Result<RadialPswf> {
    Ok(solve_pswfs(&RadialFamily::new(d, alpha, c, n)?, k)?.swap_remove(k))
}

/// Small-c behaviour: the c⁴ remainder of χ and the c^{n+2k} scaling of λ.
pub fn suite_perturbation() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("perturbation");
    for &(d, alpha, n, k) in &[(2, 0.0, 0, 0), (3, 1.0, 1, 1)] {
        let tag = format!("d={d} alpha={alpha} n={n} k={k}");
        let coeffs = perturbation_coeffs(d, alpha, n, k)?;
        let gamma = gamma_coef(n + 2 * k as u32, alpha, d);
        let remainder = |c: f64| -> Result<f64> {
            Ok((solve_k(d, alpha, c, n, k)?.chi - gamma - coeffs.d_k1 * c * c).abs())
        };
        // e(0.1) / e(0.01) should be 10⁴ up to a factor of two.
        let ratio = remainder(1e-1)? / remainder(1e-2)? / 1e4;
        report.push(
            format!("{tag} chi remainder c^4 (log2 ratio)"),
            ratio.log2().abs(),
            1.0,
        );

        let power = (n as usize + 2 * k) as i32;
        let scaled =
            |c: f64| -> Result<f64> { Ok(lambda_eigenvalue(&solve_k(d, alpha, c, n, k)?)? / c.powi(power)) };
        let (q2, q3) = (scaled(1e-2)?, scaled(1e-3)?);
        report.push(
            format!("{tag} lambda/c^(n+2k) drift"),
            (q2 / q3 - 1.0).abs(),
            1e-4,
        );
        if k == 0 {
            let limit = crate::pswf::lambda_small_c_limit(d, alpha, n);
            report.push(format!("{tag} lambda/c^n limit"), (q3 / limit - 1.0).abs(), 1e-6);
        }
    }
    Ok(report)
}

pub fn suite_recurrence() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("recurrence");
    for family in wide_families() {
        for s in solve_pswfs(&family, GRID_K_MAX)? {
            report.push(label(&s), recurrence_residual(&s), RECURRENCE_TOL);
        }
    }
    Ok(report)
}

/// Relative change of χ_k when the truncation K is doubled.
pub fn truncation_drift(family: &RadialFamily, k_max: usize) -> Result<Vec<f64>> {
    let k = truncation_size(family.alpha, family.n, k_max);
    let once = eig_symtridiag(&build_matrix(family, k)?)?.values;
    let twice = eig_symtridiag(&build_matrix(family, 2 * k)?)?.values;
    Ok((0..=k_max)
        .map(|i| ((once[i] - twice[i]) / once[i]).abs())
        .collect())
}

pub fn suite_truncation() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("truncation");
    for family in wide_families() {
        let drift = truncation_drift(&family, GRID_K_MAX)?;
        let worst = drift.iter().copied().fold(0.0, f64::max);
        let tag = format!(
            "d={} alpha={} c={} n={} k<={GRID_K_MAX}",
            family.d, family.alpha, family.c, family.n
        );
        report.push(tag, worst, TRUNCATION_TOL);
    }
    Ok(report)
}

/// Rayleigh quotient ⟨ψ, Q_c ψ⟩ / ⟨ψ, ψ⟩ for d = 2 by a Nyström sum over
/// polar tensor nodes. The kernel depends on (r_i, r_j, θ_i - θ_j) only,
/// so it is tabulated once per radial pair and angular offset.
pub fn rayleigh_quotient_d2(s: &RadialPswf, ell: usize, radial: usize, angular: usize) -> Result<f64> {
    let p = &s.params;
    if p.d != 2 {
        return Err(Error::UnsupportedDimension(p.d));
    }
    let rule = gauss_jacobi(p.alpha, 0.0, radial)?;
    let rscale = 2f64.powf(-p.alpha - 2.0);
    let radii: Vec<f64> = rule.nodes().iter().map(|&e| ((1.0 + e) / 2.0).sqrt()).collect();
    let wr: Vec<f64> = rule.weights().iter().map(|w| rscale * w).collect();
    let wt = 2.0 * PI / angular as f64;
    let thetas: Vec<f64> = (0..angular).map(|j| j as f64 * wt).collect();
    let kernel = KernelQc::new(2, p.alpha, p.c, 2.0)?;

    let psi = |r: f64, t: f64| eval_psi_ball(s, ell, &[r * t.cos(), r * t.sin()]);
    let mut values = vec![vec![0.0; angular]; radial];
    for (i, &r) in radii.iter().enumerate() {
        for (j, &t) in thetas.iter().enumerate() {
            values[i][j] = psi(r, t)?;
        }
    }
    let mut quad = 0.0;
    let mut norm = 0.0;
    let mut table = vec![0.0; angular];
    for (i, &ri) in radii.iter().enumerate() {
        norm += wr[i] * wt * values[i].iter().map(|v| v * v).sum::<f64>();
        for (j, &rj) in radii.iter().enumerate() {
            for (m, entry) in table.iter_mut().enumerate() {
                let rho2 = ri * ri + rj * rj - 2.0 * ri * rj * thetas[m].cos();
                *entry = kernel.eval(rho2.max(0.0).sqrt());
            }
            let mut pair = 0.0;
            for a in 0..angular {
                let mut inner = 0.0;
                for b in 0..angular {
                    inner += table[(a + angular - b) % angular] * values[j][b];
                }
                pair += values[i][a] * inner;
            }
            quad += wr[i] * wr[j] * wt * wt * pair;
        }
    }
    Ok(quad / norm)
}

/// μ = λ² against the Nyström Rayleigh quotient of Q_c (d = 2, α = 0, c = 2).
pub fn suite_mu_rayleigh() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("rayleigh");
    for &(n, k) in &[(0, 0), (1, 0), (1, 1)] {
        let s = solve_k(2, 0.0, 2.0, n, k)?;
        let mu = mu_eigenvalue(lambda_eigenvalue(&s)?);
        let rq = rayleigh_quotient_d2(&s, 1, 16, 24)?;
        report.push(label(&s), ((rq - mu) / mu).abs(), RAYLEIGH_TOL);
    }
    Ok(report)
}

fn jacobi_gram(alpha: f64, beta: f64, size: usize, scale: f64) -> Result<f64> {
    let basis = JacobiBasis::new(alpha, beta)?;
    let rule = gauss_jacobi(alpha, beta, size + 2)?;
    let norm = 2f64.powf(-alpha - beta - 2.0);
    let vals: Vec<Vec<f64>> = rule
        .nodes()
        .iter()
        .map(|&x| basis.eval_all(size - 1, x))
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..size {
        for j in i..size {
            let g: f64 = norm
                * scale
                * rule
                    .weights()
                    .iter()
                    .zip(&vals)
                    .map(|(w, v)| w * v[i] * v[j])
                    .sum::<f64>();
            worst = worst.max((g - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    Ok(worst)
}

fn quadrature_exactness(alpha: f64, beta: f64, m: usize, weight_scale: f64) -> Result<f64> {
    let rule = gauss_jacobi(alpha, beta, m)?;
    let mut worst: f64 = 0.0;
    for j in 0..2 * m {
        let jf = j as f64;
        let exact = ((alpha + beta + jf + 1.0) * 2f64.ln()
            + crate::specfn::ln_beta(alpha + 1.0, beta + jf + 1.0))
        .exp();
        let got: f64 = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .enumerate()
            .map(|(i, (x, w))| {
                let w = if i == 0 { w * weight_scale } else { *w };
                w * (1.0 + x).powi(j as i32)
            })
            .sum();
        worst = worst.max(((got - exact) / exact).abs());
    }
    Ok(worst)
}

fn bessel_identity(nu: f64, z: f64, rhs_scale: f64) -> Result<f64> {
    let h = 1e-5;
    let fd = (bessel_j_scaled(nu, z + h)? - bessel_j_scaled(nu, z - h)?) / (2.0 * h);
    Ok((fd + z * bessel_j_scaled(nu + 1.0, z)? * rhs_scale).abs())
}

/// max deviation of ∫_{S¹} e^{-iw⟨ξ,x⟩} Y(x) dσ from 2π (-i)^n J_n(w) Y(ξ);
/// the quadrature side uses w(1 + eps).
fn lemma_plane_wave_d2(w: f64, n: u32, ell: usize, eps: f64) -> Result<f64> {
    let m = 64;
    let mut worst: f64 = 0.0;
    for &xi in &[0.0, 0.7, 2.9] {
        let (mut re, mut im) = (0.0, 0.0);
        for j in 0..m {
            let t = 2.0 * PI * j as f64 / m as f64;
            let y = sph_harm_eval(2, n, ell, &SphericalPoint::D2 { theta: t })?;
            let phase = -w * (1.0 + eps) * (t - xi).cos();
            re += phase.cos() * y;
            im += phase.sin() * y;
        }
        re *= 2.0 * PI / m as f64;
        im *= 2.0 * PI / m as f64;
        let jn = w.powi(n as i32) * bessel_j_scaled(n as f64, w)?;
        let amp = 2.0 * PI * jn * sph_harm_eval(2, n, ell, &SphericalPoint::D2 { theta: xi })?;
        // (-i)^n
        let (er, ei) = match n % 4 {
            0 => (amp, 0.0),
            1 => (0.0, -amp),
            2 => (-amp, 0.0),
            _ => (0.0, amp),
        };
        worst = worst.max((re - er).abs()).max((im - ei).abs());
    }
    Ok(worst)
}

fn sphere_gram(d: u32, n_max: u32, scale: f64) -> Result<f64> {
    let rule = sphere_rule(d, 12)?;
    let mut index = Vec::new();
    for n in 0..=n_max {
        for ell in 1..=sph_harm_dim(d, n) {
            index.push((n, ell));
        }
    }
    let values: Vec<Vec<f64>> = rule
        .iter()
        .map(|(x, _)| {
            let (_, p) = SphericalPoint::from_cartesian(x)?;
            index
                .iter()
                .map(|&(n, ell)| sph_harm_eval(d, n, ell, &p))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for a in 0..index.len() {
        for b in a..index.len() {
            let mut g: f64 = rule.iter().zip(&values).map(|((_, w), v)| w * v[a] * v[b]).sum();
            if a == 0 && b == 0 {
                g *= scale;
            }
            worst = worst.max((g - if a == b { 1.0 } else { 0.0 }).abs());
        }
    }
    Ok(worst)
}

fn ball_gram(d: u32, alpha: f64, degree: u32) -> Result<f64> {
    let q = BallQuadrature::new(d, alpha, degree as usize + 4, 2 * degree as usize + 2)?;
    let mut index = Vec::new();
    for n in 0..=degree {
        for k in 0..=((degree - n) / 2) as usize {
            for ell in 1..=sph_harm_dim(d, n) {
                index.push((n, k, ell));
            }
        }
    }
    let values: Vec<Vec<f64>> = q
        .points
        .iter()
        .map(|x| {
            index
                .iter()
                .map(|&(n, k, ell)| ball_poly_eval(d, alpha, n, k, ell, x))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for a in 0..index.len() {
        for b in a..index.len() {
            let g: f64 = q.weights.iter().zip(&values).map(|(w, v)| w * v[a] * v[b]).sum();
            worst = worst.max((g - if a == b { 1.0 } else { 0.0 }).abs());
        }
    }
    Ok(worst)
}

const PARITY_POINTS: [[f64; 3]; 4] = [
    [0.31, -0.42, 0.17],
    [-0.05, 0.66, -0.48],
    [0.52, 0.11, 0.73],
    [-0.24, -0.37, -0.09],
];

fn parity_defect(s: &RadialPswf, shift: f64) -> Result<f64> {
    let d = s.params.d as usize;
    let sign = if s.params.n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut worst: f64 = 0.0;
    for p in &PARITY_POINTS {
        let x = &p[..d];
        let neg: Vec<f64> = x.iter().map(|v| -v * (1.0 + shift)).collect();
        for ell in 1..=sph_harm_dim(s.params.d, s.params.n) {
            let a = eval_psi_ball(s, ell, x)?;
            let b = eval_psi_ball(s, ell, &neg)?;
            worst = worst.max((b - sign * a).abs() / a.abs().max(1.0));
        }
    }
    Ok(worst)
}

fn psi_norm_defect(c: f64) -> Result<f64> {
    let s = solve_k(2, 0.0, c, 0, 0)?;
    let q = BallQuadrature::new(2, 0.0, s.truncation + 10, 8)?;
    let norm = q.integrate(|x| eval_psi_ball(&s, 1, x).map(|v| v * v).unwrap_or(f64::NAN));
    Ok((norm - 1.0).abs())
}

fn kernel_closed_form(c: f64, rho_scale: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for i in 1..=20 {
        let rho = 0.1 * i as f64;
        let got = kernel_qc(2, 0.0, c, rho * rho_scale)?;
        let want = 2.0 * PI * bessel_j_scaled(1.0, c * rho)?;
        worst = worst.max((got - want).abs());
    }
    Ok(worst)
}

fn clenshaw_vs_forward() -> Result<f64> {
    let basis = JacobiBasis::new(0.7, 1.5)?;
    let coeffs: Vec<f64> = (0..60)
        .map(|j| ((j * 37 % 11) as f64 - 5.0) / (1.0 + j as f64))
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..=16 {
        let eta = -1.0 + 0.5 * i as f64;
        let forward: f64 = basis
            .eval_all(coeffs.len() - 1, eta)
            .iter()
            .zip(&coeffs)
            .map(|(p, c)| p * c)
            .sum();
        let scale: f64 = basis
            .eval_all(coeffs.len() - 1, eta)
            .iter()
            .zip(&coeffs)
            .map(|(p, c)| (p * c).abs())
            .sum();
        worst = worst.max((basis.clenshaw(&coeffs, eta) - forward).abs() / scale);
    }
    Ok(worst)
}

/// Structural identities of the building blocks.
pub fn suite_properties() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("properties");
    for &(a, b) in &[(0.0, 0.0), (1.0, 0.5), (-0.5, 2.0), (2.0, -0.5)] {
        report.push(
            format!("jacobi orthonormality alpha={a} beta={b}"),
            jacobi_gram(a, b, 20, 1.0)?,
            1e-13,
        );
        report.push(
            format!("quadrature exactness alpha={a} beta={b} m=12"),
            quadrature_exactness(a, b, 12, 1.0)?,
            1e-13,
        );
    }
    for &nu in &[0.0, 0.5, 1.0, 2.5] {
        for &z in &[0.5, 3.0, 12.0] {
            report.push(
                format!("bessel derivative nu={nu} z={z}"),
                bessel_identity(nu, z, 1.0)?,
                1e-8,
            );
        }
    }
    for &w in &[1.0, 5.0] {
        for n in 0..=3 {
            for ell in 1..=sph_harm_dim(2, n) {
                report.push(
                    format!("plane wave d=2 w={w} n={n} l={ell}"),
                    lemma_plane_wave_d2(w, n, ell, 0.0)?,
                    1e-10,
                );
            }
        }
    }
    for d in 1..=3 {
        report.push(
            format!("sphere orthonormality d={d}"),
            sphere_gram(d, if d == 1 { 1 } else { 4 }, 1.0)?,
            1e-12,
        );
    }
    for d in 1..=3 {
        for &alpha in &[0.0, 1.0, -0.5] {
            report.push(
                format!("ball orthonormality d={d} alpha={alpha} degree<=6"),
                ball_gram(d, alpha, 6)?,
                1e-11,
            );
        }
    }
    for &(d, alpha, c, n) in &[
        (2, 0.0, 3.0, 0),
        (2, 0.0, 3.0, 1),
        (3, 1.0, 2.0, 2),
        (3, 0.0, 5.0, 3),
        (1, 0.0, 4.0, 1),
    ] {
        for s in solve_pswfs(&RadialFamily::new(d, alpha, c, n)?, 2)? {
            report.push(format!("parity {}", label(&s)), parity_defect(&s, 0.0)?, 1e-13);
        }
    }
    report.push("psi norm d=2 alpha=0 c=10 n=0 k=0", psi_norm_defect(10.0)?, 1e-11);
    for &c in &[1.0, 4.0, 10.0] {
        report.push(
            format!("kernel closed form d=2 alpha=0 c={c}"),
            kernel_closed_form(c, 1.0)?,
            1e-12,
        );
    }
    report.push("clenshaw vs forward summation", clenshaw_vs_forward()?, 1e-13);
    Ok(report)
}

/// Every check re-run with one input perturbed by 1e-6 (relative). Each
/// case is expected to fail; a pass means the check cannot see the error.
pub fn negative_controls() -> Result<VerificationReport> {
    const EPS: f64 = 1e-6;
    let mut report = VerificationReport::new("negative-controls");

    let s = solve_k(2, 0.0, 5.0, 1, 2)?;
    report.push(
        "recurrence chi*(1+eps)",
        recurrence_residual_at(&s, s.chi * (1.0 + EPS)),
        RECURRENCE_TOL,
    );

    let lambda = lambda_eigenvalue(&s)?;
    report.push(
        "hankel lambda*(1+eps)",
        hankel_residual(&s, lambda * (1.0 + EPS), &HANKEL_GRID)?,
        HANKEL_TOL,
    );
    let fit = hankel_lambda_fit(&s, &HANKEL_GRID)?;
    report.push(
        "route lambda*(1+eps)",
        ((fit - lambda * (1.0 + EPS)) / lambda).abs(),
        ROUTE_TOL,
    );

    let mut sols = solve_pswfs(&RadialFamily::new(2, 0.0, 10.0, 0)?, 10)?;
    sols[4].coeffs[4] *= 1.0 + EPS;
    report.push("gram coefficient*(1+eps)", orthonormality_gram(&sols)?, GRAM_TOL);

    let family = RadialFamily::new(3, 1.0, 5.0, 1)?;
    let drift = truncation_drift(&family, GRID_K_MAX)?;
    report.push("truncation chi_2K*(1+eps)", drift[2] + EPS, TRUNCATION_TOL);

    for case in perturbed_eigen_check(EPS)?.cases {
        report.push(
            format!("table1 reference*(1+eps) {}", case.params),
            case.metric,
            case.tolerance,
        );
    }
    for id in [2, 3, 4] {
        let base = table_check(id)?;
        let case = base
            .cases
            .iter()
            .find(|c| c.tolerance < 1e-8)
            .ok_or_else(|| domain("table without a long-precision column"))?;
        // A reference scaled by (1+eps) shifts the relative error by ~eps.
        report.push(
            format!("table{id} reference*(1+eps) {}", case.params),
            case.metric + EPS,
            case.tolerance,
        );
    }

    report.push(
        "quadrature weight*(1+eps)",
        quadrature_exactness(1.0, 0.5, 12, 1.0 + EPS)?,
        1e-13,
    );
    report.push(
        "jacobi normalization*(1+eps)",
        jacobi_gram(1.0, 0.5, 20, 1.0 + EPS)?,
        1e-13,
    );
    report.push(
        "bessel derivative rhs*(1+eps)",
        bessel_identity(0.0, 3.0, 1.0 + EPS)?,
        1e-8,
    );
    report.push(
        "plane wave w*(1+eps)",
        lemma_plane_wave_d2(5.0, 2, 1, EPS)?,
        1e-10,
    );
    report.push(
        "sphere normalization*(1+eps)",
        sphere_gram(3, 4, 1.0 + EPS)?,
        1e-12,
    );
    let s = solve_k(3, 1.0, 2.0, 1, 1)?;
    report.push("parity point*(1+eps)", parity_defect(&s, EPS)?, 1e-13);
    report.push("kernel rho*(1+eps)", kernel_closed_form(4.0, 1.0 + EPS)?, 1e-12);
    Ok(report)
}
