//! Quadrature rules shared by the engines: adaptive Gauss–Kronrod (7/15) on
//! intervals, Gauss–Legendre nodes, and the periodic trapezoid rule with
//! node doubling.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl QuadratureResult {
    pub fn zero() -> Self {
        QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        }
    }

    /// Sum of two independent pieces.
    pub fn combine(self, other: Self) -> Self {
        QuadratureResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
        }
    }

    pub fn scale(self, c: Complex64) -> Self {
        QuadratureResult {
            value: self.value * c,
            error_estimate: self.error_estimate * c.norm(),
            evaluations: self.evaluations,
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Default evaluation budget for adaptive integration.
pub const DEFAULT_BUDGET: usize = 400_000;

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for k in 0..7 {
        let dx = h * XGK[k];
        let s = f(c - dx) + f(c + dx);
        kron += s * WGK[k];
        if k % 2 == 1 {
            gauss += s * WG[k / 2];
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    (kron, (kron - gauss).norm())
}

/// Globally adaptive Gauss–Kronrod integration of a complex-valued function on `[a, b]`.
///
/// Succeeds when the summed error estimate is below `tol * max(1, |value|)`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    integrate_with_budget(f, a, b, tol, DEFAULT_BUDGET)
}

pub fn integrate_with_budget<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    budget: usize,
) -> Result<QuadratureResult> {
    if a == b {
        return Ok(QuadratureResult::zero());
    }
    let (value, error) = gk15(&f, a, b);
    let mut evaluations = 15;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    // panels too narrow to split further are retired here
    let mut retired_value = Complex64::new(0.0, 0.0);
    let mut retired_err = 0.0;
    loop {
        if total_err <= tol * total.norm().max(1.0) {
            break;
        }
        if evaluations + 30 > budget {
            return Err(Error::Quadrature {
                context: format!("adaptive Gauss-Kronrod on [{a}, {b}]"),
                best: QuadratureResult {
                    value: total,
                    error_estimate: total_err,
                    evaluations,
                },
            });
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a).abs() <= 1e-14 * (worst.a.abs() + worst.b.abs()).max(1e-300) || mid == worst.a || mid == worst.b {
            retired_value += worst.value;
            retired_err += worst.error;
            total_err = total_err.max(retired_err);
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        evaluations += 30;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
    }
    let value = retired_value + heap.iter().map(|p| p.value).sum::<Complex64>();
    let error_estimate = retired_err + heap.iter().map(|p| p.error).sum::<f64>();
    if error_estimate > tol * value.norm().max(1.0) {
        return Err(Error::Quadrature {
            context: format!("adaptive Gauss-Kronrod on [{a}, {b}] reached the subdivision floor"),
            best: QuadratureResult { value, error_estimate, evaluations },
        });
    }
    Ok(QuadratureResult { value, error_estimate, evaluations })
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    integrate(|t| Complex64::new(f(t), 0.0), a, b, tol)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Periodic trapezoid rule for `integral_0^{2pi} g(t) dt` with node doubling
/// until two successive values agree within `tol * max(1, |value|)`.
pub fn periodic_trapezoid<G: Fn(f64) -> Complex64>(g: G, tol: f64, max_nodes: usize) -> Result<QuadratureResult> {
    let mut n = 16usize;
    let mut sum: Complex64 = (0..n).map(|j| g(2.0 * PI * j as f64 / n as f64)).sum();
    let mut evaluations = n;
    let mut prev = sum * (2.0 * PI / n as f64);
    loop {
        let fresh: Complex64 = (0..n)
            .map(|j| g(2.0 * PI * (2 * j + 1) as f64 / (2 * n) as f64))
            .sum();
        evaluations += n;
        sum += fresh;
        n *= 2;
        let cur = sum * (2.0 * PI / n as f64);
        let err = (cur - prev).norm();
        if err <= tol * cur.norm().max(1.0) {
            return Ok(QuadratureResult { value: cur, error_estimate: err, evaluations });
        }
        if n >= max_nodes {
            return Err(Error::Quadrature {
                context: "periodic trapezoid node budget exhausted".into(),
                best: QuadratureResult { value: cur, error_estimate: err, evaluations },
            });
        }
        prev = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_integrated_exactly() {
        let r = integrate_real(|x| 3.0 * x * x, 0.0, 2.0, 1e-13).unwrap();
        assert!((r.value.re - 8.0).abs() < 1e-13);
    }

    #[test]
    fn sqrt_endpoint_singularity_converges() {
        let r = integrate_real(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-8);
    }

    #[test]
    fn gauss_legendre_integrates_degree_2n_minus_1() {
        let (x, w) = gauss_legendre(5);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(8)).sum();
        assert!((s - 2.0 / 9.0).abs() < 1e-14);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_is_spectral_for_periodic_analytic() {
        // integral of 1/(2 + cos t) over a period = 2 pi / sqrt(3)
        let r = periodic_trapezoid(|t| Complex64::new(1.0 / (2.0 + t.cos()), 0.0), 1e-13, 1 << 16).unwrap();
        assert!((r.value.re - 2.0 * PI / 3f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn budget_exhaustion_reports_best_result() {
        let err = integrate_with_budget(|x| Complex64::new((1.0 / x).sin() / x, 0.0), 1e-6, 1.0, 1e-14, 200)
            .unwrap_err();
        assert!(matches!(err, Error::Quadrature { .. }));
    }
}
