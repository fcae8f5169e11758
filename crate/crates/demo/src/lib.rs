//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a flat `Float64Array` (or a JS error string), so the
//! page needs no generated types beyond the numbers themselves.

use wasm_bindgen::prelude::*;

use prolate::geometry::{eval_psi_ball, eval_radial, RadialForm};
use prolate::pswf::{lambda_eigenvalue, solve_pswfs, RadialFamily, RadialPswf};

/// Largest k the page may request; keeps a single solve well under a frame.
pub const MAX_K: usize = 40;
/// Largest grid edge for the disk field.
pub const MAX_GRID: usize = 400;

fn solve(d: u32, alpha: f64, c: f64, n: u32, k: usize) -> Result<RadialPswf, String> {
    if k > MAX_K {
        return Err(format!("k must be at most {MAX_K}"));
    }
    let family = RadialFamily::new(d, alpha, c, n).map_err(|e| e.to_string())?;
    let mut sols = solve_pswfs(&family, k).map_err(|e| e.to_string())?;
    Ok(sols.swap_remove(k))
}

/// `samples` values of the radial profile on r ∈ [0, 1]; `form` is
/// "plain", "slepian" or "phi".
#[wasm_bindgen]
pub fn radial_profile(
    d: u32,
    alpha: f64,
    c: f64,
    n: u32,
    k: usize,
    form: &str,
    samples: usize,
) -> Result<Vec<f64>, String> {
    if !(2..=10_000).contains(&samples) {
        return Err("samples must be between 2 and 10000".into());
    }
    let form: RadialForm = form.parse().map_err(|e: prolate::Error| e.to_string())?;
    let s = solve(d, alpha, c, n, k)?;
    let step = 1.0 / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| eval_radial(&s, i as f64 * step, form))
        .collect())
}

/// Interleaved (χ_k, λ_k) for k = 0..=k_max.
#[wasm_bindgen]
pub fn spectrum(d: u32, alpha: f64, c: f64, n: u32, k_max: usize) -> Result<Vec<f64>, String> {
    if k_max > MAX_K {
        return Err(format!("k_max must be at most {MAX_K}"));
    }
    if !(c > 0.0) {
        return Err("the spectrum needs c > 0".into());
    }
    let family = RadialFamily::new(d, alpha, c, n).map_err(|e| e.to_string())?;
    let sols = solve_pswfs(&family, k_max).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(2 * sols.len());
    for s in &sols {
        out.push(s.chi);
        out.push(lambda_eigenvalue(s).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// ψ on a `size` × `size` grid over [-1, 1]² (row-major, y down), NaN
/// outside the unit disk.
#[wasm_bindgen]
pub fn disk_field(alpha: f64, c: f64, n: u32, k: usize, ell: usize, size: usize) -> Result<Vec<f64>, String> {
    if !(2..=MAX_GRID).contains(&size) {
        return Err(format!("size must be between 2 and {MAX_GRID}"));
    }
    let s = solve(2, alpha, c, n, k)?;
    let h = 2.0 / (size - 1) as f64;
    let mut out = Vec::with_capacity(size * size);
    for i in 0..size {
        let y = 1.0 - i as f64 * h;
        for j in 0..size {
            let x = -1.0 + j as f64 * h;
            let v = if x * x + y * y <= 1.0 {
                eval_psi_ball(&s, ell, &[x, y]).map_err(|e| e.to_string())?
            } else {
                f64::NAN
            };
            out.push(v);
        }
    }
    Ok(out)
}
