//! Ball prolate spheroidal wave functions by the Bouwkamp algorithm.
//!
//! The radial part φ(η) of ψ(x) = φ(2‖x‖² - 1) ‖x‖^n Y(x̂) is expanded in
//! normalized Jacobi polynomials P̃_j^{(α, β_n)}, β_n = n + d/2 - 1. The
//! expansion coefficients solve a symmetric tridiagonal eigenproblem whose
//! eigenvalues are the Sturm–Liouville eigenvalues χ; the Fourier eigenvalue
//! λ follows from the first coefficient and the value φ(-1).

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg::{eig_symtridiag, TridiagonalSym};
use crate::specfn::{lgamma, JacobiBasis};

/// Relative tolerance of the truncation-doubling guard.
pub const TRUNCATION_TOL: f64 = 1e-13;

/// The (d, α, c, n) part of the parameters shared by every radial index k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialFamily {
    pub d: u32,
    pub alpha: f64,
    pub c: f64,
    pub n: u32,
}

impl RadialFamily {
    pub fn new(d: u32, alpha: f64, c: f64, n: u32) -> Result<Self> {
        if d == 0 {
            return Err(domain("dimension d must be at least 1"));
        }
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(domain(format!("alpha must be finite and > -1, got {alpha}")));
        }
        if !(c >= 0.0) || !c.is_finite() {
            return Err(domain(format!("bandwidth c must be finite and >= 0, got {c}")));
        }
        if d == 1 && n > 1 {
            return Err(domain(format!(
                "for d = 1 only n = 0 or n = 1 exist, got n = {n}"
            )));
        }
        Ok(Self { d, alpha, c, n })
    }

    /// β_n = n + d/2 - 1.
    pub fn beta_n(&self) -> f64 {
        self.n as f64 + self.d as f64 / 2.0 - 1.0
    }

    pub fn basis(&self) -> JacobiBasis {
        JacobiBasis::new(self.alpha, self.beta_n()).expect("validated family has beta_n > -1")
    }

    pub fn with_k(&self, k: usize) -> PswfParams {
        PswfParams {
            d: self.d,
            alpha: self.alpha,
            c: self.c,
            n: self.n,
            k,
        }
    }
}

/// Parameters (d, α, c, n, k) of one radial ball PSWF.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PswfParams {
    pub d: u32,
    pub alpha: f64,
    pub c: f64,
    pub n: u32,
    pub k: usize,
}

impl PswfParams {
    pub fn family(&self) -> RadialFamily {
        RadialFamily {
            d: self.d,
            alpha: self.alpha,
            c: self.c,
            n: self.n,
        }
    }
}

/// How the overall sign of an eigenvector is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SignConvention {
    /// The coefficient at index k is positive (continuity to the c = 0
    /// polynomial); falls back to the largest coefficient when it is tiny.
    #[default]
    DominantPositive,
    /// φ(-1) > 0, i.e. the function is positive next to the origin.
    OriginPositive,
}

/// A solved radial eigenfunction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialPswf {
    pub params: PswfParams,
    /// Sturm–Liouville eigenvalue χ.
    pub chi: f64,
    /// Jacobi expansion coefficients β_0..β_K, unit Euclidean norm.
    pub coeffs: Vec<f64>,
    /// Truncation index K (the matrix is (K+1)×(K+1)).
    pub truncation: usize,
}

impl RadialPswf {
    pub fn basis(&self) -> JacobiBasis {
        self.params.family().basis()
    }

    /// φ(η) = Σ_j β_j P̃_j^{(α, β_n)}(η).
    pub fn phi(&self, eta: f64) -> f64 {
        self.basis().clenshaw(&self.coeffs, eta)
    }
}

/// γ_m = m (m + 2α + d).
pub fn gamma_coef(m: u32, alpha: f64, d: u32) -> f64 {
    let m = m as f64;
    m * (m + 2.0 * alpha + d as f64)
}

/// The (K+1)×(K+1) Bouwkamp matrix of a radial family.
pub fn build_matrix(family: &RadialFamily, truncation: usize) -> Result<TridiagonalSym> {
    let basis = family.basis();
    let half_c2 = 0.5 * family.c * family.c;
    let diag = (0..=truncation)
        .map(|j| gamma_coef(family.n + 2 * j as u32, family.alpha, family.d) + (basis.b(j) + 1.0) * half_c2)
        .collect();
    let off = (0..truncation).map(|j| basis.a(j) * half_c2).collect();
    TridiagonalSym::new(diag, off)
}

/// Truncation index K for computing k = 0..=k_max:
/// N = n + 2 k_max, M = ⌈2N + 2α⌉ + 30, K = ⌈(M - n)/2⌉.
pub fn truncation_size(alpha: f64, n: u32, k_max: usize) -> usize {
    let big_n = n as f64 + 2.0 * k_max as f64;
    let m = (2.0 * big_n + 2.0 * alpha).ceil() as i64 + 30;
    let diff = m - n as i64;
    (diff + 1).div_euclid(2).max(0) as usize
}

fn solve_at(family: &RadialFamily, truncation: usize) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let eig = eig_symtridiag(&build_matrix(family, truncation)?)?;
    Ok((eig.values, eig.vectors))
}

/// Solve for k = 0..=k_max with the default sign convention.
pub fn solve_pswfs(family: &RadialFamily, k_max: usize) -> Result<Vec<RadialPswf>> {
    solve_pswfs_with(family, k_max, SignConvention::default())
}

pub fn solve_pswfs_with(
    family: &RadialFamily,
    k_max: usize,
    sign: SignConvention,
) -> Result<Vec<RadialPswf>> {
    let family = RadialFamily::new(family.d, family.alpha, family.c, family.n)?;
    let truncation = truncation_size(family.alpha, family.n, k_max);
    let (values, vectors) = solve_at(&family, truncation)?;
    let (values_2k, _) = solve_at(&family, 2 * truncation)?;

    let basis = family.basis();
    let mut out = Vec::with_capacity(k_max + 1);
    for (k, (chi, mut coeffs)) in values.into_iter().zip(vectors).take(k_max + 1).enumerate() {
        let chi_doubled = values_2k[k];
        if (chi - chi_doubled).abs() > TRUNCATION_TOL * chi.abs().max(chi_doubled.abs()) {
            return Err(Error::TruncationNotConverged {
                k,
                truncation,
                chi,
                chi_doubled,
            });
        }
        apply_sign(&mut coeffs, k, sign, &basis);
        out.push(RadialPswf {
            params: family.with_k(k),
            chi,
            coeffs,
            truncation,
        });
    }
    Ok(out)
}

fn apply_sign(coeffs: &mut [f64], k: usize, sign: SignConvention, basis: &JacobiBasis) {
    let dominant = |c: &[f64]| {
        if c[k].abs() >= 1e-12 {
            c[k]
        } else {
            c.iter()
                .copied()
                .fold(0.0, |best: f64, v| if v.abs() > best.abs() { v } else { best })
        }
    };
    let reference = match sign {
        SignConvention::DominantPositive => dominant(coeffs),
        SignConvention::OriginPositive => {
            let at_origin = basis.clenshaw(coeffs, -1.0);
            if at_origin.abs() > 1e-250 {
                at_origin
            } else {
                dominant(coeffs)
            }
        }
    };
    if reference < 0.0 {
        coeffs.iter_mut().for_each(|v| *v = -*v);
    }
}

/// ln of π^{d/2} √Γ(α+1) / (2^{n-1/2} √(Γ(n + d/2) Γ(α + n + d/2 + 1))).
fn ln_lambda_prefactor(d: u32, alpha: f64, n: u32) -> f64 {
    let (d, n) = (d as f64, n as f64);
    0.5 * d * std::f64::consts::PI.ln() + 0.5 * lgamma(alpha + 1.0)
        - (n - 0.5) * 2f64.ln()
        - 0.5 * (lgamma(n + d / 2.0) + lgamma(alpha + n + d / 2.0 + 1.0))
}

/// Fourier eigenvalue λ from the first expansion coefficient and φ(-1).
///
/// λ = (-1)^k π^{d/2} c^n √Γ(α+1) / (2^{n-1/2} √(Γ(n+d/2) Γ(α+n+d/2+1))) · β_0 / φ(-1).
pub fn lambda_eigenvalue(pswf: &RadialPswf) -> Result<f64> {
    let p = &pswf.params;
    if !(p.c > 0.0) {
        return Err(domain("lambda is only defined here for c > 0"));
    }
    let at_origin = pswf.phi(-1.0);
    if at_origin.abs() < 1e-250 {
        return Err(Error::DegenerateEndpoint { value: at_origin });
    }
    let ln_scale = ln_lambda_prefactor(p.d, p.alpha, p.n) + p.n as f64 * p.c.ln();
    // The Hankel identity at r = 0 reads (prefactor) β_0 = (-1)^k λ φ(-1).
    let sign = if p.k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lambda = sign * ln_scale.exp() * pswf.coeffs[0] / at_origin;
    if !(lambda > 0.0) {
        return Err(Error::NonPositiveLambda { value: lambda });
    }
    Ok(lambda)
}

/// μ = λ².
pub fn mu_eigenvalue(lambda: f64) -> f64 {
    lambda * lambda
}

/// lim_{c→0} λ_{n,0}(c) / c^n = π^{d/2} Γ(α+1) / (2^n Γ(α + n + d/2 + 1)).
pub fn lambda_small_c_limit(d: u32, alpha: f64, n: u32) -> f64 {
    let (df, nf) = (d as f64, n as f64);
    (0.5 * df * std::f64::consts::PI.ln() + lgamma(alpha + 1.0)
        - nf * 2f64.ln()
        - lgamma(alpha + nf + df / 2.0 + 1.0))
    .exp()
}

/// Small-c expansion coefficients of χ and of the eigenvector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationCoeffs {
    /// χ(c) = γ_{n+2k} + d_k1 c² + O(c⁴).
    pub d_k1: f64,
    /// Coefficient of c² in β_{k-1}.
    pub b_minus: f64,
    /// Coefficient of c² in β_{k+1}.
    pub b_plus: f64,
}

pub fn perturbation_coeffs(d: u32, alpha: f64, n: u32, k: usize) -> Result<PerturbationCoeffs> {
    let family = RadialFamily::new(d, alpha, 0.0, n)?;
    let basis = family.basis();
    let beta = family.beta_n();
    let kf = k as f64;
    let b_minus = if k == 0 {
        0.0
    } else {
        basis.a(k - 1) / (8.0 * (2.0 * kf + alpha + beta))
    };
    Ok(PerturbationCoeffs {
        d_k1: (basis.b(k) + 1.0) / 2.0,
        b_minus,
        b_plus: -basis.a(k) / (8.0 * (2.0 * kf + alpha + beta + 2.0)),
    })
}

/// Strict bounds γ_{n+2k} < χ < γ_{n+2k} + c² for c > 0.
pub fn chi_bounds(params: &PswfParams) -> (f64, f64) {
    let lower = gamma_coef(params.n + 2 * params.k as u32, params.alpha, params.d);
    (lower, lower + params.c * params.c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(d: u32, alpha: f64, c: f64, n: u32) -> RadialFamily {
        RadialFamily::new(d, alpha, c, n).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_coef(0, 0.3, 4), 0.0);
        assert_eq!(gamma_coef(2, 0.0, 2), 8.0);
        assert_eq!(gamma_coef(3, 1.0, 3), 24.0);
    }

    #[test]
    fn truncation_rule() {
        assert_eq!(truncation_size(0.0, 0, 0), 15);
        assert_eq!(truncation_size(1.0, 1, 3), 23);
        assert_eq!(truncation_size(0.5, 0, 2), 20);
    }

    #[test]
    fn matrix_entries() {
        let zero = build_matrix(&fam(3, 1.0, 0.0, 1), 4).unwrap();
        assert!(zero.offdiag().iter().all(|&v| v == 0.0));
        assert_eq!(zero.diag()[1], 24.0);
        let m = build_matrix(&fam(2, 0.0, 1.0, 0), 3).unwrap();
        assert!((m.diag()[0] - 0.5).abs() < 1e-16);
        assert!((m.offdiag()[0] - 0.2886751345948129).abs() < 1e-16);
    }

    #[test]
    fn c_zero_gives_polynomials() {
        for &(d, alpha, n) in &[(2, 0.0, 0), (3, 1.0, 2), (1, -0.5, 1), (5, 0.5, 3)] {
            let sols = solve_pswfs(&fam(d, alpha, 0.0, n), 4).unwrap();
            for s in &sols {
                let k = s.params.k;
                assert_eq!(s.chi, gamma_coef(n + 2 * k as u32, alpha, d));
                for (j, &v) in s.coeffs.iter().enumerate() {
                    assert_eq!(v, if j == k { 1.0 } else { 0.0 });
                }
            }
        }
    }

    #[test]
    fn table_anchors() {
        let s = &solve_pswfs(&fam(2, 0.0, 1.0, 0), 0).unwrap()[0];
        assert!(((s.chi + 0.75) - 1.239593258779101).abs() < 1e-14);
        let s = &solve_pswfs(&fam(3, 1.0, 2.0, 1), 0).unwrap()[0];
        assert!((s.chi - 8.182057327887621).abs() < 1e-14 * 8.2);
        let s = &solve_pswfs(&fam(3, 1.0, 0.1, 0), 0).unwrap()[0];
        let lambda = lambda_eigenvalue(s).unwrap();
        assert!((lambda - 1.675003294483135).abs() < 1e-14);
        assert_eq!(mu_eigenvalue(lambda), lambda * lambda);
    }

    #[test]
    fn slepian_lambda_combination() {
        let s = &solve_pswfs(&fam(2, 0.0, 4.0, 0), 0).unwrap()[0];
        let lambda = lambda_eigenvalue(s).unwrap();
        let c: f64 = 4.0;
        let combo = c * (c.sqrt() * lambda / (2.0 * std::f64::consts::PI)).powi(2);
        assert!(((combo - 0.9749510755184038) / 0.9749510755184038).abs() < 1e-12);
    }

    #[test]
    fn lambda_tends_to_pi_for_disk() {
        let s = &solve_pswfs(&fam(2, 0.0, 1e-4, 0), 0).unwrap()[0];
        let lambda = lambda_eigenvalue(s).unwrap();
        assert!((lambda - std::f64::consts::PI).abs() <= 1e-6);
        assert!((lambda_small_c_limit(2, 0.0, 0) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn lambda_requires_positive_c() {
        let s = &solve_pswfs(&fam(2, 0.0, 0.0, 0), 0).unwrap()[0];
        assert!(lambda_eigenvalue(s).is_err());
    }

    #[test]
    fn perturbation_values() {
        let p = perturbation_coeffs(2, 0.0, 0, 0).unwrap();
        assert_eq!(p.d_k1, 0.5);
        assert_eq!(p.b_minus, 0.0);
        assert!((p.b_plus + 0.036084391824352).abs() < 1e-15);
        for k in 0..3 {
            assert_eq!(perturbation_coeffs(3, 1.0, 1, 0).unwrap().b_minus, 0.0, "k = {k}");
        }
    }

    #[test]
    fn bounds() {
        let (lo, hi) = chi_bounds(&fam(3, 1.0, 0.1, 0).with_k(0));
        assert_eq!(lo, 0.0);
        assert!((hi - 0.01).abs() < 1e-17);
        assert!(lo < 4.285325573224633e-03 && 4.285325573224633e-03 < hi);
        let (lo, hi) = chi_bounds(&fam(2, 0.0, 10.0, 0).with_k(0));
        assert!(lo < 1.869010993969090e+01 - 0.75 && 1.869010993969090e+01 - 0.75 < hi);
    }

    #[test]
    fn sign_conventions() {
        let family = fam(2, 0.0, 2.0, 2);
        let dom = solve_pswfs(&family, 3).unwrap();
        let org = solve_pswfs_with(&family, 3, SignConvention::OriginPositive).unwrap();
        for (a, b) in dom.iter().zip(&org) {
            assert!(a.coeffs[a.params.k] > 0.0);
            assert!(b.phi(-1.0) > 0.0);
            let same = a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x == y);
            let flipped = a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| *x == -*y);
            assert!(same || flipped);
        }
    }

    #[test]
    fn invalid_families() {
        assert!(RadialFamily::new(1, 0.0, 1.0, 2).is_err());
        assert!(RadialFamily::new(0, 0.0, 1.0, 0).is_err());
        assert!(RadialFamily::new(2, -1.0, 1.0, 0).is_err());
        assert!(RadialFamily::new(2, 0.0, -1.0, 0).is_err());
    }
}
