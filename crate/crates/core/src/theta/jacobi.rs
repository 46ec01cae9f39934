use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::series::choose_truncation;

/// A point of the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TauValue(Complex64);

impl TauValue {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.re.is_finite() {
            return Err(Error::domain("tau must lie in the upper half-plane"));
        }
        Ok(TauValue(tau))
    }

    pub fn get(&self) -> Complex64 {
        self.0
    }
}

/// Theta characteristic `[eps; delta]` with entries in `{0, 1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaCharacteristic {
    eps_half: bool,
    delta_half: bool,
}

impl ThetaCharacteristic {
    pub fn new(eps: f64, delta: f64) -> Result<Self> {
        let half = |v: f64| match v {
            0.0 => Ok(false),
            0.5 => Ok(true),
            _ => Err(Error::domain("characteristic entries must be 0 or 1/2")),
        };
        Ok(ThetaCharacteristic { eps_half: half(eps)?, delta_half: half(delta)? })
    }

    /// Jacobi index: 1 = [1/2; 1/2], 2 = [1/2; 0], 3 = [0; 0], 4 = [0; 1/2].
    pub fn jacobi(index: u8) -> Result<Self> {
        let (e, d) = match index {
            1 => (true, true),
            2 => (true, false),
            3 => (false, false),
            4 => (false, true),
            _ => return Err(Error::domain("Jacobi theta index must be 1, 2, 3 or 4")),
        };
        Ok(ThetaCharacteristic { eps_half: e, delta_half: d })
    }

    pub fn eps(&self) -> f64 {
        if self.eps_half {
            0.5
        } else {
            0.0
        }
    }

    pub fn delta(&self) -> f64 {
        if self.delta_half {
            0.5
        } else {
            0.0
        }
    }
}

/// Value and the first three `z`-derivatives of a theta function with characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ThetaJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
    pub tail_bound: f64,
}

/// `sum_n exp(pi i (n+eps)^2 tau + 2 pi i (n+eps)(z+delta))` and its
/// termwise derivatives, truncated so that the tail of the third derivative
/// series is below `tol`.
pub fn theta_jet(ch: ThetaCharacteristic, z: Complex64, tau: TauValue, tol: f64) -> Result<ThetaJet> {
    let tau = tau.get();
    let (eps, delta) = (ch.eps(), ch.delta());
    // |nu| > K for nu = n + eps: at most two terms per unit of |nu|
    let (k, tail_bound) = choose_truncation(tau.im, z.im.abs(), tol, 3, |_| 2.0)?;
    let k = k as i64;
    let w = z + delta;
    let ipi = Complex64::new(0.0, PI);
    let mut acc = [Complex64::new(0.0, 0.0); 4];
    // pair terms by increasing |nu| for a deterministic summation order
    let mut nus: Vec<f64> = (-k - 1..=k + 1).map(|n| n as f64 + eps).collect();
    nus.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap().then(a.partial_cmp(b).unwrap()));
    for nu in nus {
        let t = (ipi * (tau * (nu * nu) + w * (2.0 * nu))).exp();
        let f = Complex64::new(0.0, 2.0 * PI * nu);
        acc[0] += t;
        acc[1] += t * f;
        acc[2] += t * f * f;
        acc[3] += t * f * f * f;
    }
    Ok(ThetaJet { value: acc[0], d1: acc[1], d2: acc[2], d3: acc[3], tail_bound })
}

/// Jacobi theta function `theta_index(z | tau)` in the characteristic normalisation.
pub fn jacobi_theta(index: u8, z: Complex64, tau: TauValue, tol: f64) -> Result<Complex64> {
    Ok(theta_jet(ThetaCharacteristic::jacobi(index)?, z, tau, tol)?.value)
}

/// `|theta(z + m + n tau) - F theta(z)| / (1 + |F theta(z)|)` for `theta_3`, where
/// `F = exp(-pi i n^2 tau - 2 pi i n z)`; relative to the size of the shifted value.
pub fn quasi_period_residual(z: Complex64, tau: TauValue, m: i64, n: i64) -> Result<f64> {
    let tol = 1e-16;
    let t = tau.get();
    let base = jacobi_theta(3, z, tau, tol)?;
    let shifted = jacobi_theta(3, z + m as f64 + t * n as f64, tau, tol)?;
    let nf = n as f64;
    let factor = (Complex64::new(0.0, -PI) * (t * (nf * nf) + z * (2.0 * nf))).exp();
    let expected = factor * base;
    Ok((shifted - expected).norm() / (1.0 + expected.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(re: f64, im: f64) -> TauValue {
        TauValue::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn theta3_at_i() {
        let v = jacobi_theta(3, Complex64::new(0.0, 0.0), tau(0.0, 1.0), 1e-15).unwrap();
        assert!((v.re - 1.0864).abs() < 1e-4 && v.im.abs() < 1e-15);
    }

    #[test]
    fn theta1_is_odd_with_simple_zero() {
        for t in [tau(0.0, 1.0), tau(0.0, 2.0), tau(0.5, 1.0)] {
            let j = theta_jet(ThetaCharacteristic::jacobi(1).unwrap(), Complex64::new(0.0, 0.0), t, 1e-15).unwrap();
            assert!(j.value.norm() < 1e-12);
            assert!(j.d1.norm() > 0.1);
            let z = Complex64::new(0.3, 0.1);
            let a = jacobi_theta(1, z, t, 1e-15).unwrap();
            let b = jacobi_theta(1, -z, t, 1e-15).unwrap();
            assert!((a + b).norm() < 1e-12);
        }
    }

    #[test]
    fn termwise_derivatives_match_differences() {
        let ch = ThetaCharacteristic::jacobi(2).unwrap();
        let t = tau(0.2, 0.9);
        let z = Complex64::new(0.17, -0.08);
        let h = 1e-5;
        let j = theta_jet(ch, z, t, 1e-15).unwrap();
        let jp = theta_jet(ch, z + h, t, 1e-15).unwrap();
        let jm = theta_jet(ch, z - h, t, 1e-15).unwrap();
        assert!(((jp.value - jm.value) / (2.0 * h) - j.d1).norm() < 1e-6 * j.d1.norm().max(1.0));
        assert!(((jp.d1 - jm.d1) / (2.0 * h) - j.d2).norm() < 1e-6 * j.d2.norm().max(1.0));
        assert!(((jp.d2 - jm.d2) / (2.0 * h) - j.d3).norm() < 1e-5 * j.d3.norm().max(1.0));
    }

    #[test]
    fn quasi_periodicity() {
        let z = Complex64::new(0.2, 0.3);
        assert!(quasi_period_residual(z, tau(0.0, 1.0), 1, 0).unwrap() <= 1e-12);
        assert!(quasi_period_residual(z, tau(0.0, 1.0), 0, 1).unwrap() <= 1e-12);
        assert_eq!(quasi_period_residual(z, tau(0.0, 1.0), 0, 0).unwrap(), 0.0);
    }

    #[test]
    fn characteristic_validation() {
        assert!(ThetaCharacteristic::new(0.25, 0.0).is_err());
        assert!(ThetaCharacteristic::jacobi(5).is_err());
        assert!(TauValue::new(Complex64::new(0.0, -1.0)).is_err());
        let c = ThetaCharacteristic::new(0.5, 0.0).unwrap();
        assert_eq!(c, ThetaCharacteristic::jacobi(2).unwrap());
    }
}
