use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::residue::{contour_integral, Contour};

use super::jacobi::{theta_jet, TauValue, ThetaCharacteristic, ThetaJet};
use super::lattice::{eisenstein, wp_lattice, EllipticInvariants, PeriodPair};

const THETA_TOL: f64 = 1e-17;

fn theta1_jet(u: Complex64, l: &PeriodPair) -> Result<ThetaJet> {
    theta_jet(ThetaCharacteristic::jacobi(1)?, u, TauValue::new(l.tau())?, THETA_TOL)
}

/// Second and third `u`-derivatives of `log theta_1(u | tau)`.
fn log_theta1_derivatives(u: Complex64, l: &PeriodPair) -> Result<(Complex64, Complex64)> {
    let j = theta1_jet(u, l)?;
    if j.value.norm() < 1e-300 {
        return Err(Error::Pole(format!("theta_1 vanishes at u = {u}")));
    }
    let a = j.d1 / j.value;
    let b = j.d2 / j.value;
    let c = j.d3 / j.value;
    Ok((b - a * a, c - a * b * 3.0 + a * a * a * 2.0))
}

/// Move `z` into the period parallelogram centred at the origin.
fn reduce(z: Complex64, l: &PeriodPair) -> Complex64 {
    let (a, b) = l.coordinates(z);
    z - l.point(a.round() as i64, b.round() as i64)
}

/// `d^2/dz^2 log theta_1(z / omega1 | tau)`.
fn log_theta1_second(z: Complex64, l: &PeriodPair) -> Result<Complex64> {
    let (d2, _) = log_theta1_derivatives(z / l.omega1, l)?;
    Ok(d2 / (l.omega1 * l.omega1))
}

/// The constant `c = wp(z) + d^2/dz^2 log theta_1(z/omega1 | tau)`.
///
/// Sampled from the truncated lattice sum at `z = omega1 * {0.05, 0.025}`
/// and Richardson-extrapolated (the truncation error is `O(z^2)`). The true
/// sigma quasi-period is `eta1 = -omega1 * c`.
pub fn eta1_ratio(l: &PeriodPair, n: usize) -> Result<Complex64> {
    let sample = |t: f64| -> Result<Complex64> {
        let z = l.omega1 * t;
        Ok(wp_lattice(z, l, n)? + log_theta1_second(z, l)?)
    };
    let (coarse, fine) = (sample(0.05)?, sample(0.025)?);
    let extrapolated = (fine * 4.0 - coarse) / 3.0;
    let spread = (extrapolated - fine).norm();
    let scale = 1.0 + extrapolated.norm();
    if spread > 1e-6 * scale {
        return Err(Error::Numeric(format!("eta1 extrapolation unstable: spread {spread:.3e}")));
    }
    Ok(extrapolated)
}

/// Eisenstein invariants and sigma quasi-period at truncation `n`.
pub fn elliptic_invariants(l: &PeriodPair, n: usize) -> Result<EllipticInvariants> {
    let (g2, g3) = eisenstein(l, n)?;
    let c = eta1_ratio(l, n)?;
    Ok(EllipticInvariants { g2, g3, eta1: -l.omega1 * c, truncation: n })
}

impl EllipticInvariants {
    /// `wp(z) + (log theta_1)''(z)`, the constant in the theta formula.
    pub fn wp_constant(&self, l: &PeriodPair) -> Complex64 {
        -self.eta1 / l.omega1
    }
}

/// `wp(z) = -d^2/dz^2 log theta_1(z/omega1 | tau) + c` with `c` from [`eta1_ratio`].
pub fn wp_via_theta(z: Complex64, l: &PeriodPair, c: Complex64) -> Result<Complex64> {
    Ok(c - log_theta1_second(reduce(z, l), l)?)
}

/// `wp'(z) = -d^3/dz^3 log theta_1(z/omega1 | tau)`.
pub fn wp_prime(z: Complex64, l: &PeriodPair) -> Result<Complex64> {
    let (_, d3) = log_theta1_derivatives(reduce(z, l) / l.omega1, l)?;
    Ok(-d3 / l.omega1.powi(3))
}

/// Weierstrass sigma: `omega1 / theta_1'(0) * exp(eta1 z^2 / (2 omega1)) theta_1(z / omega1)`.
pub fn sigma(z: Complex64, l: &PeriodPair, eta1: Complex64) -> Result<Complex64> {
    let d0 = theta1_jet(Complex64::new(0.0, 0.0), l)?.d1;
    if d0.norm() == 0.0 {
        return Err(Error::Numeric("theta_1'(0) vanished".into()));
    }
    let t = theta1_jet(z / l.omega1, l)?.value;
    Ok(l.omega1 / d0 * (eta1 * z * z / (l.omega1 * 2.0)).exp() * t)
}

/// `|wp'^2 - 4 wp^3 + g2 wp + g3| / (1 + |wp|^3)` with theta-based `wp`, `wp'`.
pub fn ode_residual(z: Complex64, l: &PeriodPair, n: usize) -> Result<f64> {
    let inv = elliptic_invariants(l, n)?;
    let p = wp_via_theta(z, l, inv.wp_constant(l))?;
    let dp = wp_prime(z, l)?;
    let r = dp * dp - p * p * p * 4.0 + inv.g2 * p + inv.g3;
    Ok(r.norm() / (1.0 + p.norm().powi(3)))
}

/// `(1 / 2 pi i) \oint f` around the period parallelogram with corner `base`.
pub fn parallelogram_residue_sum<F>(f: F, l: &PeriodPair, base: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let c = Contour::polygon(&[base, base + l.omega1, base + l.omega1 + l.omega2, base + l.omega2]);
    let r = contour_integral(f, &c, 1e-10)?;
    Ok(r.value / Complex64::new(0.0, 2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 200;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn square_lattice_constant_is_minus_pi() {
        // Legendre's relation on the square lattice forces eta1 = pi for omega1 = 1.
        let l = PeriodPair::square();
        let k = eta1_ratio(&l, N).unwrap();
        assert!((k - c(-PI, 0.0)).norm() < 1e-6, "{k}");
        assert!(k.im.abs() <= 1e-8);
    }

    #[test]
    fn theta_and_lattice_agree() {
        let l = PeriodPair::square();
        let k = eta1_ratio(&l, N).unwrap();
        let z = c(0.31, 0.17);
        let d = wp_via_theta(z, &l, k).unwrap() - wp_lattice(z, &l, N).unwrap();
        assert!(d.norm() <= 1e-5, "{d}");
    }

    #[test]
    fn double_pole_and_periodicity() {
        let l = PeriodPair::square();
        let k = eta1_ratio(&l, N).unwrap();
        for t in [0.1, 0.05, 0.025] {
            let z = c(t, t);
            let v = wp_via_theta(z, &l, k).unwrap() * z * z;
            assert!((v - 1.0).norm() < 10.0 * t * t, "{t}: {v}");
        }
        let z = c(0.21, 0.37);
        let d = wp_via_theta(z + l.omega1, &l, k).unwrap() - wp_via_theta(z, &l, k).unwrap();
        assert!(d.norm() < 1e-10);
    }

    #[test]
    fn ode_on_two_lattices() {
        assert!(ode_residual(c(0.3, 0.2), &PeriodPair::square(), N).unwrap() <= 1e-4);
        let l = PeriodPair::new(c(1.0, 0.0), c(0.5, 1.2)).unwrap();
        assert!(ode_residual(c(0.25, 0.4), &l, N).unwrap() <= 1e-4);
        assert!(wp_prime(l.omega1 / 2.0, &l).unwrap().norm() < 1e-6);
    }

    #[test]
    fn wp_prime_matches_lattice_derivative() {
        let l = PeriodPair::new(c(1.0, 0.0), c(0.5, 1.2)).unwrap();
        let z = c(0.25, 0.4);
        let a = wp_prime(z, &l).unwrap();
        let b = super::super::lattice::wp_prime_lattice(z, &l, N).unwrap();
        assert!((a - b).norm() < 1e-5 * (1.0 + a.norm()));
    }

    #[test]
    fn sigma_normalisation_parity_and_quasi_period() {
        let l = PeriodPair::new(c(1.0, 0.0), c(0.5, 1.2)).unwrap();
        let inv = elliptic_invariants(&l, N).unwrap();
        let z0 = l.omega1 * 1e-3;
        assert!((sigma(z0, &l, inv.eta1).unwrap() / z0 - 1.0).norm() <= 1e-5);
        let z = c(0.2, 0.3);
        let s = sigma(z, &l, inv.eta1).unwrap();
        assert!((sigma(-z, &l, inv.eta1).unwrap() + s).norm() <= 1e-10);
        let ratio = sigma(z + l.omega1, &l, inv.eta1).unwrap() / s;
        let want = -(inv.eta1 * (z + l.omega1 / 2.0)).exp();
        assert!((ratio - want).norm() <= 1e-6 * want.norm());
    }

    #[test]
    fn sigma_second_log_derivative_is_minus_wp() {
        // independent of the sign convention for the theta constant: -(log sigma)'' must be wp
        let l = PeriodPair::new(c(1.0, 0.0), c(0.5, 1.2)).unwrap();
        let inv = elliptic_invariants(&l, N).unwrap();
        let z = c(0.27, 0.31);
        let h = 1e-3;
        let ls = |w: Complex64| sigma(w, &l, inv.eta1).unwrap().ln();
        let second = (ls(z + h) - ls(z) * 2.0 + ls(z - h)) / (h * h);
        let p = wp_lattice(z, &l, N).unwrap();
        assert!((-second - p).norm() < 1e-4 * (1.0 + p.norm()), "{} vs {}", -second, p);
    }

    #[test]
    fn residue_sums_vanish() {
        let l = PeriodPair::square();
        let k = eta1_ratio(&l, 40).unwrap();
        let base = c(-0.43, -0.41);
        let wp = |z: Complex64| wp_via_theta(z, &l, k).unwrap();
        assert!(parallelogram_residue_sum(wp, &l, base).unwrap().norm() <= 1e-8);
        let dwp = |z: Complex64| wp_prime(z, &l).unwrap();
        assert!(parallelogram_residue_sum(dwp, &l, base).unwrap().norm() <= 1e-8);
        let sq = |z: Complex64| wp(z) * wp(z);
        assert!(parallelogram_residue_sum(sq, &l, base).unwrap().norm() <= 1e-6);
    }
}
