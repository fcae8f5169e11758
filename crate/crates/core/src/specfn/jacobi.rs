//! Normalized Jacobi polynomials.
//!
//! The normalization is P̃_n = P_n / h_n with
//! ∫ P̃_n P̃_m (1-η)^α (1+η)^β dη = 2^{α+β+2} δ_nm, so that
//! η P̃_n = a_n P̃_{n+1} + b_n P̃_n + a_{n-1} P̃_{n-1}.

use serde::{Deserialize, Serialize};

use super::gamma::lgamma;
use crate::error::{domain, Result};

/// Jacobi parameter pair (α, β), both > -1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiBasis {
    alpha: f64,
    beta: f64,
}

/// Recurrence and normalization coefficients at one index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceCoeffs {
    pub a: f64,
    pub b: f64,
    pub h: f64,
}

impl JacobiBasis {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && alpha.is_finite()) || !(beta > -1.0 && beta.is_finite()) {
            return Err(domain(format!(
                "Jacobi parameters must satisfy alpha, beta > -1 (got alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn coeffs(&self, j: usize) -> RecurrenceCoeffs {
        RecurrenceCoeffs {
            a: self.a(j),
            b: self.b(j),
            h: self.h(j),
        }
    }

    /// Off-diagonal recurrence coefficient a_j.
    pub fn a(&self, j: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let s = al + be;
        if j == 0 {
            // (s + 1) cancels between numerator and denominator; keeps α + β = -1 regular.
            return (4.0 * (al + 1.0) * (be + 1.0) / ((s + 2.0).powi(2) * (s + 3.0))).sqrt();
        }
        let n = j as f64;
        let t = 2.0 * n + s;
        let num = 4.0 * (n + 1.0) * (n + al + 1.0) * (n + be + 1.0) * (n + s + 1.0);
        let den = (t + 1.0) * (t + 2.0).powi(2) * (t + 3.0);
        (num / den).sqrt()
    }

    /// Diagonal recurrence coefficient b_j.
    pub fn b(&self, j: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let s = al + be;
        if j == 0 {
            return (be - al) / (s + 2.0);
        }
        let t = 2.0 * j as f64 + s;
        (be * be - al * al) / (t * (t + 2.0))
    }

    /// Normalization constant h_j (P̃_j = P_j / h_j).
    pub fn h(&self, j: usize) -> f64 {
        self.ln_h(j).exp()
    }

    fn ln_h(&self, j: usize) -> f64 {
        let (al, be) = (self.alpha, self.beta);
        let s = al + be;
        if j == 0 {
            return 0.5 * (lgamma(al + 1.0) + lgamma(be + 1.0) - 2f64.ln() - lgamma(s + 2.0));
        }
        let n = j as f64;
        0.5 * (lgamma(n + al + 1.0) + lgamma(n + be + 1.0)
            - (2.0 * (2.0 * n + s + 1.0)).ln()
            - lgamma(n + 1.0)
            - lgamma(n + s + 1.0))
    }

    /// Leading coefficient κ_j of P̃_j: binom(2j + α + β, j) / (2^j h_j).
    pub fn leading_coeff(&self, j: usize) -> f64 {
        if j == 0 {
            return (-self.ln_h(0)).exp();
        }
        let s = self.alpha + self.beta;
        let n = j as f64;
        let ln_binom = lgamma(2.0 * n + s + 1.0) - lgamma(n + 1.0) - lgamma(n + s + 1.0);
        (ln_binom - n * 2f64.ln() - self.ln_h(j)).exp()
    }

    /// Values P̃_0(η), ..., P̃_jmax(η) by forward recurrence.
    pub fn eval_all(&self, jmax: usize, eta: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(jmax + 1);
        let p0 = 1.0 / self.h(0);
        out.push(p0);
        if jmax == 0 {
            return out;
        }
        out.push((eta - self.b(0)) * p0 / self.a(0));
        let mut a_prev = self.a(0);
        for j in 1..jmax {
            let a = self.a(j);
            let next = ((eta - self.b(j)) * out[j] - a_prev * out[j - 1]) / a;
            out.push(next);
            a_prev = a;
        }
        out
    }

    /// Single value P̃_j(η).
    pub fn eval(&self, j: usize, eta: f64) -> f64 {
        self.eval_all(j, eta)[j]
    }

    /// Σ_j coeffs[j] P̃_j(η) by backward (Clenshaw) recurrence.
    pub fn clenshaw(&self, coeffs: &[f64], eta: f64) -> f64 {
        if coeffs.is_empty() {
            return 0.0;
        }
        // P̃_{j+1} = A_j P̃_j + B_j P̃_{j-1}, A_j = (η - b_j)/a_j, B_j = -a_{j-1}/a_j.
        // y_j = c_j + A_j y_{j+1} + B_{j+1} y_{j+2}; sum = P̃_0 y_0.
        let last = coeffs.len() - 1;
        let mut y1 = 0.0; // y_{j+1}
        let mut y2 = 0.0; // y_{j+2}
        let mut a_next = self.a(last); // a_{j+1} for the first step below
        for j in (0..=last).rev() {
            let a_j = self.a(j);
            let step = (eta - self.b(j)) / a_j;
            // B_{j+1} = -a_j / a_{j+1}
            let back = if j + 2 <= last { -a_j / a_next } else { 0.0 };
            let y = coeffs[j] + step * y1 + back * y2;
            y2 = y1;
            y1 = y;
            a_next = a_j;
        }
        y1 / self.h(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn legendre_coefficients() {
        let jb = JacobiBasis::new(0.0, 0.0).unwrap();
        let c = jb.coeffs(0);
        assert!(close(c.a, 0.5773502691896258, 1e-15));
        assert_eq!(c.b, 0.0);
        assert!(close(c.h, std::f64::consts::FRAC_1_SQRT_2, 1e-15));
        for j in 0..20 {
            assert_eq!(jb.b(j), 0.0);
        }
    }

    #[test]
    fn symmetric_parameters_have_zero_b() {
        let jb = JacobiBasis::new(1.75, 1.75).unwrap();
        assert!((0..30).all(|j| jb.b(j) == 0.0));
    }

    #[test]
    fn a0_matches_gram_schmidt() {
        // Gram–Schmidt on {1, η} under (1+η)^{1/2}: a_0 = sqrt(var η) = sqrt(144/525).
        let jb = JacobiBasis::new(0.0, 0.5).unwrap();
        assert!(close(jb.a(0), 0.5237229365663817, 1e-15));
        assert!(close(jb.b(0), 0.2, 1e-15));
    }

    #[test]
    fn b0_is_regular_when_alpha_plus_beta_vanishes() {
        let jb = JacobiBasis::new(0.5, -0.5).unwrap();
        assert!(close(jb.b(0), -0.5, 1e-15));
        let jb = JacobiBasis::new(-0.5, -0.5).unwrap();
        // Chebyshev first kind: a_0 = 1/√2 in monic-orthonormal form.
        assert!(close(jb.a(0), std::f64::consts::FRAC_1_SQRT_2, 1e-15));
        assert!(jb.eval_all(8, 0.3).iter().all(|v| v.is_finite()));
    }

    #[test]
    fn first_degree_matches_closed_form() {
        for &(al, be) in &[(0.0, 0.0), (0.0, 0.5), (1.0, 1.5), (-0.5, 2.0), (2.0, -0.5)] {
            let jb = JacobiBasis::new(al, be).unwrap();
            for &eta in &[-1.0, -0.3, 0.2, 1.0, 4.0] {
                let want = ((al + be + 2.0) * eta + (al - be)) / (2.0 * jb.h(1));
                assert!(close(jb.eval(1, eta), want, 1e-14), "({al},{be}) at {eta}");
            }
        }
    }

    #[test]
    fn small_values() {
        let jb = JacobiBasis::new(0.0, 0.0).unwrap();
        assert!(close(jb.eval(0, 0.123), 2f64.sqrt(), 1e-15));
        assert!(close(jb.eval(1, -1.0), -2.449489742783178, 1e-15));
        // Rodrigues formula at 50 digits divided by h_5 = 1/sqrt(11).
        assert!(close(jb.eval(5, 0.3), 1.620005110226315, 1e-14));
    }

    #[test]
    fn domain_errors() {
        assert!(JacobiBasis::new(-1.0, 0.0).is_err());
        assert!(JacobiBasis::new(0.0, -1.2).is_err());
        assert!(JacobiBasis::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn clenshaw_unit_vectors_reproduce_polynomials() {
        let jb = JacobiBasis::new(1.0, 1.5).unwrap();
        let vals = jb.eval_all(12, 0.37);
        for k in 0..=12 {
            let mut e = vec![0.0; 13];
            e[k] = 1.0;
            let got = jb.clenshaw(&e, 0.37);
            assert!(close(got, vals[k], 1e-14), "k = {k}: {got} vs {}", vals[k]);
        }
        let legendre = JacobiBasis::new(0.0, 0.0).unwrap();
        assert!(close(
            legendre.clenshaw(&[1.0, 0.0, 0.0], -0.8),
            2f64.sqrt(),
            1e-15
        ));
    }

    #[test]
    fn leading_coefficient_by_recurrence() {
        // Leading coefficient of the forward recurrence: κ_{j+1} = κ_j / a_j.
        for &(al, be) in &[(0.0, 0.0), (0.0, 0.5), (1.0, 1.5), (-0.5, 2.0)] {
            let jb = JacobiBasis::new(al, be).unwrap();
            let mut kappa = 1.0 / jb.h(0);
            for j in 0..=10 {
                assert!(close(jb.leading_coeff(j), kappa, 1e-11), "({al},{be}) j = {j}");
                kappa /= jb.a(j);
            }
        }
    }
}
