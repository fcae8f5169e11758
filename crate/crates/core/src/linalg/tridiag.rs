use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and first off-diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagonalSym {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalSym {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(domain("tridiagonal matrix must have at least one row"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(domain(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(domain("tridiagonal matrix entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// y = T x
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let m = self.len();
        assert_eq!(x.len(), m, "dimension mismatch");
        (0..m)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y += self.offdiag[i - 1] * x[i - 1];
                }
                if i + 1 < m {
                    y += self.offdiag[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.diag
            .iter()
            .chain(&self.offdiag)
            .fold(0.0, |acc: f64, v| acc.max(v.abs()))
    }
}

/// Eigen-decomposition of a symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

/// All eigenpairs of `t` by implicit QL iteration with Wilkinson shifts.
///
/// Eigenvectors are normalized with their first non-negligible component
/// positive.
pub fn eig_symtridiag(t: &TridiagonalSym) -> Result<SymEigen> {
    let n = t.len();
    let mut d = t.diag.clone();
    let mut e = t.offdiag.clone();
    e.push(0.0);
    // Row i of `z` accumulates eigenvector i.
    let mut z: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[i] = 1.0;
            row
        })
        .collect();

    let max_iter = 30 * n;
    let mut total = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            total += 1;
            if total > max_iter {
                return Err(Error::NoConvergence {
                    iterations: total - 1,
                });
            }

            // Wilkinson shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut restarted = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    restarted = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let (lo, hi) = z.split_at_mut(i + 1);
                let zi = &mut lo[i];
                let zi1 = &mut hi[0];
                for (a, b) in zi.iter_mut().zip(zi1.iter_mut()) {
                    let f = *b;
                    *b = s * *a + c * f;
                    *a = c * *a - s * f;
                }
            }
            if restarted {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]).then(a.cmp(&b)));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = order
        .iter()
        .map(|&i| {
            let mut v = std::mem::take(&mut z[i]);
            if let Some(first) = v.iter().find(|x| x.abs() > 1e-300) {
                if *first < 0.0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            v
        })
        .collect();
    Ok(SymEigen { values, vectors })
}
