use std::f64::consts::PI;

use prolate::geometry::{
    ball_poly_eval, eval_psi_ball, eval_radial, kernel_qc, sph_harm_dim, sph_harm_eval, sphere_rule,
    BallQuadrature, RadialForm, SphericalPoint,
};
use prolate::pswf::{solve_pswfs, RadialFamily};
use prolate::specfn::bessel_j_scaled;

fn sphere_gram(d: u32, n_max: u32) -> f64 {
    let rule = sphere_rule(d, 12).unwrap();
    let index: Vec<(u32, usize)> = (0..=n_max)
        .flat_map(|n| (1..=sph_harm_dim(d, n)).map(move |l| (n, l)))
        .collect();
    let mut worst: f64 = 0.0;
    for (i, &(n1, l1)) in index.iter().enumerate() {
        for &(n2, l2) in &index[i..] {
            let g: f64 = rule
                .iter()
                .map(|(x, w)| {
                    let (_, p) = SphericalPoint::from_cartesian(x).unwrap();
                    w * sph_harm_eval(d, n1, l1, &p).unwrap() * sph_harm_eval(d, n2, l2, &p).unwrap()
                })
                .sum();
            let want = if (n1, l1) == (n2, l2) { 1.0 } else { 0.0 };
            worst = worst.max((g - want).abs());
        }
    }
    worst
}

#[test]
fn sphere_harmonics_are_orthonormal() {
    assert!(sphere_gram(2, 4) <= 1e-12);
    assert!(sphere_gram(3, 4) <= 1e-12);
    assert!(sphere_gram(1, 1) <= 1e-15);
}

#[test]
fn cartesian_round_trip() {
    for p in [
        SphericalPoint::D3 {
            theta: 0.3,
            phi: -2.0,
        },
        SphericalPoint::D2 { theta: 1.1 },
        SphericalPoint::D1 { x: -1.0 },
    ] {
        let x = p.to_cartesian();
        let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-14);
        let (r, q) = SphericalPoint::from_cartesian(&x).unwrap();
        assert!((r - 1.0).abs() < 1e-15);
        let y = q.to_cartesian();
        assert!(x.iter().zip(&y).all(|(a, b)| (a - b).abs() < 1e-15));
    }
    assert!(SphericalPoint::from_cartesian(&[1.0; 4]).is_err());
}

#[test]
fn plane_wave_expansion_on_circle() {
    let m = 64;
    for &w in &[1.0, 5.0] {
        for n in 0..=3u32 {
            for ell in 1..=sph_harm_dim(2, n) {
                for &xi in &[0.0, 1.3] {
                    let (mut re, mut im) = (0.0, 0.0);
                    for j in 0..m {
                        let t = 2.0 * PI * j as f64 / m as f64;
                        let y = sph_harm_eval(2, n, ell, &SphericalPoint::D2 { theta: t }).unwrap();
                        let phase = -w * (t - xi).cos();
                        re += 2.0 * PI / m as f64 * phase.cos() * y;
                        im += 2.0 * PI / m as f64 * phase.sin() * y;
                    }
                    let amp = 2.0
                        * PI
                        * w.powi(n as i32)
                        * bessel_j_scaled(n as f64, w).unwrap()
                        * sph_harm_eval(2, n, ell, &SphericalPoint::D2 { theta: xi }).unwrap();
                    let (er, ei) = [(amp, 0.0), (0.0, -amp), (-amp, 0.0), (0.0, amp)][n as usize % 4];
                    assert!(
                        (re - er).abs() < 1e-10 && (im - ei).abs() < 1e-10,
                        "w={w} n={n} l={ell}"
                    );
                }
            }
        }
    }
}

#[test]
fn ball_polynomials_are_orthonormal() {
    for d in 2..=3u32 {
        let q = BallQuadrature::new(d, 0.5, 10, 14).unwrap();
        let mut index = Vec::new();
        for n in 0..=6u32 {
            for k in 0..=((6 - n) / 2) as usize {
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
                    .map(|&(n, k, l)| ball_poly_eval(d, 0.5, n, k, l, x).unwrap())
                    .collect()
            })
            .collect();
        for a in 0..index.len() {
            for b in a..index.len() {
                let g: f64 = q.weights.iter().zip(&values).map(|(w, v)| w * v[a] * v[b]).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (g - want).abs() <= 1e-11,
                    "d={d} {:?} {:?}: {g}",
                    index[a],
                    index[b]
                );
            }
        }
    }
}

#[test]
fn psi_parity() {
    let x = [0.23, -0.41, 0.35];
    for (d, n) in [(2u32, 3u32), (3, 2), (3, 1), (1, 1)] {
        let family = RadialFamily::new(d, 1.0, 4.0, n).unwrap();
        for s in solve_pswfs(&family, 2).unwrap() {
            let p = &x[..d as usize];
            let neg: Vec<f64> = p.iter().map(|v| -v).collect();
            for ell in 1..=sph_harm_dim(d, n) {
                let a = eval_psi_ball(&s, ell, p).unwrap();
                let b = eval_psi_ball(&s, ell, &neg).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert!((b - sign * a).abs() <= 1e-13 * a.abs().max(1.0));
            }
        }
    }
}

#[test]
fn psi_is_normalized_on_disk() {
    let family = RadialFamily::new(2, 0.0, 10.0, 0).unwrap();
    let s = &solve_pswfs(&family, 0).unwrap()[0];
    let q = BallQuadrature::new(2, 0.0, 60, 8).unwrap();
    let norm = q.integrate(|x| eval_psi_ball(s, 1, x).unwrap().powi(2));
    assert!((norm - 1.0).abs() <= 1e-11, "{norm}");
}

#[test]
fn radial_values_for_d3() {
    let s = &solve_pswfs(&RadialFamily::new(3, 1.0, 1.0, 0).unwrap(), 0).unwrap()[0];
    let v = eval_radial(s, 0.5, RadialForm::Plain);
    assert!(((v - 2.772954660597707) / v).abs() < 1e-12);
    // The α = 0 reference value at r = 2 includes an extra √r.
    let s = &solve_pswfs(&RadialFamily::new(3, 0.0, 2.0, 2).unwrap(), 3).unwrap()[3];
    let v = eval_radial(s, 2.0, RadialForm::Plain) * 2f64.sqrt();
    assert!(((v - 4.569351866698169e4) / v).abs() < 1e-12);
}

#[test]
fn kernel_matches_closed_form_on_disk() {
    for &c in &[0.5, 3.0, 10.0] {
        for i in 1..=40 {
            let rho = 0.05 * i as f64;
            let got = kernel_qc(2, 0.0, c, rho).unwrap();
            let want = 2.0 * PI * bessel_j_scaled(1.0, c * rho).unwrap();
            assert!((got - want).abs() <= 1e-12, "c={c} rho={rho}: {got} vs {want}");
        }
    }
}

#[test]
fn kernel_at_zero_is_weighted_volume() {
    use prolate::specfn::log_gamma;
    for &(d, alpha) in &[(1u32, 0.0), (2, 0.7), (3, -0.5), (5, 2.0)] {
        let df = d as f64;
        let want = (0.5 * df * PI.ln() + log_gamma(alpha + 1.0).unwrap()
            - log_gamma(alpha + df / 2.0 + 1.0).unwrap())
        .exp();
        let got = kernel_qc(d, alpha, 2.0, 0.0).unwrap();
        assert!(((got - want) / want).abs() < 1e-13);
    }
}
