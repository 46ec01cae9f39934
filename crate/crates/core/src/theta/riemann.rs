use std::f64::consts::PI;

use nalgebra::{Cholesky, DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

use super::series::choose_truncation;

const MAX_GENUS: usize = 4;

/// Symmetric `g x g` matrix with positive definite imaginary part.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RiemannPeriodMatrix {
    omega: Vec<Vec<Complex64>>,
    /// Smallest eigenvalue of `Im Omega`.
    min_eigenvalue: f64,
}

impl RiemannPeriodMatrix {
    pub fn new(omega: Vec<Vec<Complex64>>) -> Result<Self> {
        let g = omega.len();
        if g == 0 || omega.iter().any(|r| r.len() != g) {
            return Err(Error::domain("period matrix must be square and nonempty"));
        }
        let norm = omega.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max);
        for (i, row) in omega.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if (e - omega[j][i]).norm() > 1e-12 * norm {
                    return Err(Error::domain("period matrix must be symmetric"));
                }
            }
        }
        let y = DMatrix::from_fn(g, g, |i, j| 0.5 * (omega[i][j].im + omega[j][i].im));
        if Cholesky::new(y.clone()).is_none() {
            return Err(Error::domain("imaginary part of the period matrix is not positive definite"));
        }
        let min_eigenvalue = SymmetricEigen::new(y).eigenvalues.min();
        if !(min_eigenvalue > 0.0) {
            return Err(Error::domain("imaginary part of the period matrix is not positive definite"));
        }
        Ok(RiemannPeriodMatrix { omega, min_eigenvalue })
    }

    pub fn genus(&self) -> usize {
        self.omega.len()
    }

    pub fn diagonal(entries: &[Complex64]) -> Result<Self> {
        let g = entries.len();
        Self::new((0..g).map(|i| (0..g).map(|j| if i == j { entries[i] } else { Complex64::new(0.0, 0.0) }).collect()).collect())
    }

    pub fn entries(&self) -> &[Vec<Complex64>] {
        &self.omega
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ThetaValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub truncation: usize,
}

/// `theta(z | Omega) = sum_n exp(pi i n^t Omega n + 2 pi i n^t z)` over the box
/// `|n|_inf <= N`, with `N` the first truncation whose analytic tail bound is
/// below `tol`. The reported bound adds a rounding allowance for the summation.
pub fn riemann_theta(z: &[Complex64], omega: &RiemannPeriodMatrix, tol: f64) -> Result<ThetaValue> {
    let g = omega.genus();
    if z.len() != g {
        return Err(Error::domain(format!("z must have {g} components")));
    }
    if g > MAX_GENUS {
        return Err(Error::Unsupported(format!("genus {g} exceeds the supported maximum {MAX_GENUS}")));
    }
    let m = z.iter().map(|c| c.im * c.im).sum::<f64>().sqrt();
    let shell_count = |k: usize| 2.0 * g as f64 * (2.0 * k as f64 + 1.0).powi(g as i32 - 1);
    let (n, tail) = choose_truncation(omega.min_eigenvalue(), m, tol, 0, shell_count)?;
    let (value, abs_sum) = theta_box_with_magnitude(z, omega.entries(), n);
    // each shell is summed sequentially, then the shells are added
    let adds = shell_count(n) + n as f64 + 1.0;
    let rounding = 2.0 * adds * f64::EPSILON * abs_sum;
    Ok(ThetaValue { value, tail_bound: tail + rounding, truncation: n })
}

/// Box sum at a fixed truncation, accumulated shell by shell.
#[cfg(test)]
fn theta_box(z: &[Complex64], omega: &[Vec<Complex64>], n: usize) -> Complex64 {
    theta_box_with_magnitude(z, omega, n).0
}

/// Box sum together with the sum of the moduli of its terms.
fn theta_box_with_magnitude(z: &[Complex64], omega: &[Vec<Complex64>], n: usize) -> (Complex64, f64) {
    let g = z.len();
    let n = n as i64;
    let mut shells = vec![Complex64::new(0.0, 0.0); n as usize + 1];
    let mut abs_sum = 0.0;
    let mut idx = vec![-n; g];
    loop {
        let mut phase = Complex64::new(0.0, 0.0);
        for i in 0..g {
            let ni = idx[i] as f64;
            phase += z[i] * (2.0 * ni);
            for j in 0..g {
                phase += omega[i][j] * (ni * idx[j] as f64);
            }
        }
        let shell = idx.iter().map(|k| k.unsigned_abs()).max().unwrap_or(0) as usize;
        let term = (Complex64::new(0.0, PI) * phase).exp();
        abs_sum += term.norm();
        shells[shell] += term;
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == g {
                return (shells.iter().sum(), abs_sum);
            }
            idx[pos] += 1;
            if idx[pos] <= n {
                break;
            }
            idx[pos] = -n;
            pos += 1;
        }
    }
}
