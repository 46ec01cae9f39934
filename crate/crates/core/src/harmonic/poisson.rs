use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature;

use super::TrigPolynomial;

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain("need 0 <= r < 1"));
    }
    Ok(())
}

/// `P_r(psi) = (1 - r^2) / (1 - 2 r cos psi + r^2)`.
pub fn poisson_kernel_disk(r: f64, psi: f64) -> Result<f64> {
    check_radius(r)?;
    Ok((1.0 - r * r) / (1.0 - 2.0 * r * psi.cos() + r * r))
}

/// `a0 + sum r^n (a_n cos n theta + b_n sin n theta)`.
pub fn poisson_extend_trig(f: &TrigPolynomial, r: f64, theta: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(f.eval_scaled(theta, r))
}

/// Trapezoid rule for `(1/2 pi) \int P_r(theta - phi) f(phi) dphi` with `nodes` points.
pub fn poisson_extend_quadrature<F: Fn(f64) -> f64>(f: F, r: f64, theta: f64, nodes: usize) -> Result<f64> {
    if !(0.0..=0.99).contains(&r) {
        return Err(Error::domain("quadrature extension needs 0 <= r <= 0.99"));
    }
    if nodes == 0 {
        return Err(Error::domain("need at least one node"));
    }
    let h = 2.0 * PI / nodes as f64;
    let sum: f64 = (0..nodes)
        .map(|j| {
            let phi = j as f64 * h;
            poisson_kernel_disk(r, theta - phi).unwrap() * f(phi)
        })
        .sum();
    Ok(sum / nodes as f64)
}

/// Adaptive version of the disk Poisson integral for boundary data with jumps.
pub fn poisson_extend_adaptive<F: Fn(f64) -> f64>(f: F, r: f64, theta: f64, tol: f64) -> Result<f64> {
    check_radius(r)?;
    let g = |phi: f64| Complex64::new(poisson_kernel_disk(r, theta - phi).unwrap() * f(phi), 0.0);
    let v = quadrature::integrate(g, -PI, PI, tol)?;
    Ok(v.value.re / (2.0 * PI))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct HalfPlaneValue {
    pub value: f64,
    /// Kernel mass outside the window, `1 - (2/pi) atan(window / y)`.
    pub tail_mass: f64,
}

/// `\int P_H(x, y; t) f(t) dt` over `|t - x| <= window`.
///
/// With `t = x + y tan(phi)` the kernel becomes `dphi / pi`; Gauss–Legendre
/// nodes in `phi` come in symmetric pairs, so odd data cancel exactly. The
/// omitted kernel mass must not exceed `tol`.
pub fn poisson_halfplane<F: Fn(f64) -> f64>(
    x: f64,
    y: f64,
    f: F,
    window: f64,
    nodes: usize,
    tol: f64,
) -> Result<HalfPlaneValue> {
    if !(y > 0.0) {
        return Err(Error::domain("need y > 0"));
    }
    if !(window > 0.0) || nodes < 2 {
        return Err(Error::domain("need a positive window and at least two nodes"));
    }
    let half = (window / y).atan();
    let tail_mass = 1.0 - 2.0 * half / PI;
    if tail_mass > tol {
        return Err(Error::Numeric(format!(
            "window {window} leaves kernel mass {tail_mass:.3e} outside; widen it beyond {:.3e}",
            2.0 * y / (PI * tol)
        )));
    }
    let (xs, ws) = quadrature::gauss_legendre(nodes);
    let mut value = 0.0;
    for (xi, wi) in xs.iter().zip(&ws) {
        let phi = half * xi;
        value += wi * half * f(x + y * phi.tan());
    }
    Ok(HalfPlaneValue { value: value / PI, tail_mass })
}

/// `|u(center) - (1/2 pi) \oint u|` on the circle of radius `rho`.
pub fn mean_value_check<U: Fn(f64, f64) -> f64>(u: U, center: Complex64, rho: f64, nodes: usize) -> Result<f64> {
    if !(rho > 0.0) || nodes == 0 {
        return Err(Error::domain("need rho > 0 and at least one node"));
    }
    let avg = (0..nodes)
        .map(|j| {
            let p = center + Complex64::from_polar(rho, 2.0 * PI * j as f64 / nodes as f64);
            u(p.re, p.im)
        })
        .sum::<f64>()
        / nodes as f64;
    Ok((u(center.re, center.im) - avg).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_basics() {
        for psi in [0.0, 1.0, 3.0] {
            assert_eq!(poisson_kernel_disk(0.0, psi).unwrap(), 1.0);
        }
        assert!(poisson_kernel_disk(1.0, 0.0).is_err());
        // real part of (zeta + z)/(zeta - z)
        let (r, psi) = (0.7, 0.4);
        let z = Complex64::from_polar(r, psi);
        let re = ((Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z)).re;
        assert!((poisson_kernel_disk(r, psi).unwrap() - re).abs() < 1e-12);
    }

    #[test]
    fn kernel_normalisation() {
        for r in [0.3, 0.9] {
            let v = poisson_extend_quadrature(|_| 1.0, r, 0.0, 512).unwrap();
            assert!((v - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn fourier_expansion_of_kernel() {
        let r: f64 = 0.5;
        // the tail 2 sum_{n>30} r^n cos(n psi) is bounded by 2 r^31 / (1 - r), attained at psi = 0
        for psi in [0.0, 0.9, 2.5] {
            let partial = 1.0 + 2.0 * (1..=30).map(|n| r.powi(n) * (n as f64 * psi).cos()).sum::<f64>();
            let bound = r.powi(31) / (1.0 - r) * 2.0;
            assert!((poisson_kernel_disk(r, psi).unwrap() - partial).abs() <= bound);
        }
    }

    #[test]
    fn trig_and_quadrature_extensions() {
        let f = TrigPolynomial::new(0.0, vec![0.0, 0.0, 1.0], vec![]);
        let v = poisson_extend_trig(&f, 0.5, 0.7).unwrap();
        assert!((v - 0.125 * 2.1f64.cos()).abs() < 1e-15);
        let q = poisson_extend_quadrature(|p| (3.0 * p).cos(), 0.5, 0.7, 256).unwrap();
        assert!((q - v).abs() < 1e-8);
        let s = TrigPolynomial::new(0.0, vec![], vec![0.0, 0.0, 1.0]);
        assert!((poisson_extend_trig(&s, 0.4, 1.1).unwrap() - 0.064 * 3.3f64.sin()).abs() < 1e-15);
        let c = TrigPolynomial::new(2.5, vec![], vec![]);
        assert_eq!(poisson_extend_trig(&c, 0.9, 4.0).unwrap(), 2.5);
    }

    #[test]
    fn harmonic_measure_of_an_arc() {
        let alpha = 0.8;
        let arc = |p: f64| {
            let p = (p + PI).rem_euclid(2.0 * PI) - PI;
            if p.abs() < alpha {
                1.0
            } else {
                0.0
            }
        };
        let centre = poisson_extend_adaptive(arc, 0.0, 0.0, 1e-10).unwrap();
        assert!((centre - alpha / PI).abs() < 1e-6);
        let counted = poisson_extend_quadrature(arc, 0.0, 0.0, 1 << 21).unwrap();
        assert!((counted - alpha / PI).abs() < 1e-6);
        let near = poisson_extend_quadrature(arc, 0.99, 0.0, 4096).unwrap();
        assert!(near >= 0.9);
    }

    #[test]
    fn half_plane() {
        let one = poisson_halfplane(0.3, 0.5, |_| 1.0, 1e9, 64, 1e-8).unwrap();
        assert!((one.value - 1.0).abs() < 1e-8);
        let lin = poisson_halfplane(2.0, 0.5, |t| t, 1e9, 64, 1e-8).unwrap();
        assert!((lin.value - 2.0).abs() < 1e-7);
        let odd = poisson_halfplane(0.0, 0.5, |t| t, 1e9, 64, 1e-8).unwrap();
        assert!(odd.value.abs() < 1e-6);
        assert!(matches!(poisson_halfplane(0.0, 0.5, |_| 1.0, 10.0, 64, 1e-8), Err(Error::Numeric(_))));
    }

    #[test]
    fn mean_values() {
        let cubic = |x: f64, y: f64| x * x * x - 3.0 * x * y * y;
        assert!(mean_value_check(cubic, Complex64::new(0.2, 0.1), 0.3, 64).unwrap() <= 1e-10);
        assert_eq!(mean_value_check(|_, _| 3.0, Complex64::new(0.0, 0.0), 1.0, 16).unwrap(), 0.0);
        // the circle average of x^2 exceeds the centre value by rho^2 / 2
        let sq = mean_value_check(|x, _| x * x, Complex64::new(0.0, 0.0), 1.0, 64).unwrap();
        let oracle: f64 = {
            let n = 10_000;
            (0..n).map(|j| (2.0 * PI * (j as f64 + 0.5) / n as f64).cos().powi(2)).sum::<f64>() / n as f64
        };
        assert!((sq - oracle).abs() < 1e-8 && (sq - 0.5).abs() < 1e-8);
    }
}
