use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::tolerances;

/// Bound on `sum_{k > n} count(k) exp(-pi c k^2 + 2 pi m k) (2 pi (k + 1))^p`,
/// valid once the summand is decreasing.
pub(crate) fn shell_tail(c: f64, m: f64, n: usize, p: i32, count: impl Fn(usize) -> f64) -> f64 {
    let mut total = 0.0;
    for k in n + 1..n + 400 {
        let kf = k as f64;
        let t = count(k) * (-PI * c * kf * kf + 2.0 * PI * m * kf).exp() * (2.0 * PI * (kf + 1.0)).powi(p);
        total += t;
        if t < 1e-18 * total || t == 0.0 {
            break;
        }
    }
    total
}

/// Smallest admissible truncation whose tail bound is below `tol`.
///
/// The summand `k^p exp(-pi c k^2 + 2 pi m k)` decreases beyond its maximum,
/// so the search starts past that point.
pub(crate) fn choose_truncation(
    c: f64,
    m: f64,
    tol: f64,
    p: i32,
    count: impl Fn(usize) -> f64 + Copy,
) -> Result<(usize, f64)> {
    if !(c > 0.0) {
        return Err(Error::domain("imaginary part of the period matrix must be positive definite"));
    }
    let pf = p as f64;
    let start = (2.0 * PI * m + (4.0 * PI * PI * m * m + 8.0 * PI * c * pf).sqrt()) / (4.0 * PI * c);
    let mut n = start.ceil().max(1.0) as usize;
    loop {
        if n as i64 > tolerances::THETA_MAX_BOX {
            return Err(Error::Budget(format!(
                "theta truncation would exceed {} terms per axis",
                tolerances::THETA_MAX_BOX
            )));
        }
        let tail = shell_tail(c, m, n, p, count);
        if tail <= tol {
            return Ok((n, tail));
        }
        n += 1;
    }
}
