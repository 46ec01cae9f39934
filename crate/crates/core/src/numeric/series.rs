use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Radius of convergence `1 / limsup |a_n|^(1/n)`, with the limsup estimated
/// as the maximum of `|a_n|^(1/n)` over the last half of the window.
///
/// Returns `+inf` when the estimate is zero (all tail coefficients vanish or
/// underflow), including the all-zero sequence.
pub fn radius_from_coeffs(a: &[Complex64]) -> Result<f64> {
    if a.len() < 8 {
        return Err(Error::domain("radius estimate needs at least 8 coefficients"));
    }
    let start = (a.len() / 2).max(1);
    let est = a[start..]
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm().powf(1.0 / (start + k) as f64))
        .fold(0.0_f64, f64::max);
    if est == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(1.0 / est)
    }
}

/// Taylor coefficients `f^(k)(center) / k!` for `k < count`, from the
/// uniform trapezoid rule applied to the Cauchy integral on `|z - center| = radius`.
pub fn taylor_coeffs_numeric<F>(f: F, center: Complex64, radius: f64, count: usize) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Complex64,
{
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    if !(radius > 0.0) {
        return Err(Error::domain("radius must be positive"));
    }
    let nodes = (4 * count).max(64).next_power_of_two();
    let samples: Vec<Complex64> = (0..nodes)
        .map(|j| {
            let w = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / nodes as f64);
            f(center + w * radius)
        })
        .collect();
    Ok((0..count)
        .map(|k| {
            let sum: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, v)| v * Complex64::from_polar(1.0, -2.0 * PI * (j * k % nodes) as f64 / nodes as f64))
                .sum();
            sum / (nodes as f64 * radius.powi(k as i32))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn geometric_radius_one() {
        assert!((radius_from_coeffs(&real(&[1.0; 40])).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn factorial_coefficients_underflow_to_infinite_radius() {
        let mut a = Vec::new();
        let mut fact = 1.0_f64;
        for n in 0..400 {
            if n > 0 {
                fact *= n as f64;
            }
            a.push(1.0 / fact);
        }
        assert_eq!(radius_from_coeffs(&real(&a)).unwrap(), f64::INFINITY);
    }

    #[test]
    fn scaled_geometric_radius_three() {
        let a: Vec<f64> = (0..60).map(|n| 3f64.powi(-n)).collect();
        assert!((radius_from_coeffs(&real(&a)).unwrap() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn all_zero_is_infinite_and_short_window_rejected() {
        assert_eq!(radius_from_coeffs(&real(&[0.0; 10])).unwrap(), f64::INFINITY);
        assert!(radius_from_coeffs(&real(&[1.0; 5])).is_err());
    }

    #[test]
    fn exp_taylor_coefficients() {
        let c = taylor_coeffs_numeric(|z| z.exp(), Complex64::new(0.0, 0.0), 1.0, 6).unwrap();
        let want = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0];
        for (got, w) in c.iter().zip(want) {
            assert!((got - w).norm() < 1e-10);
        }
    }

    #[test]
    fn constant_function() {
        let c = taylor_coeffs_numeric(|_| Complex64::new(2.5, -1.0), Complex64::new(0.3, 0.1), 0.7, 4).unwrap();
        assert!((c[0] - Complex64::new(2.5, -1.0)).norm() < 1e-14);
        assert!(c[1..].iter().all(|v| v.norm() < 1e-13));
    }

    #[test]
    fn geometric_series_on_half_radius() {
        let one = Complex64::new(1.0, 0.0);
        let c = taylor_coeffs_numeric(|z| one / (one - z), Complex64::new(0.0, 0.0), 0.5, 10).unwrap();
        // closed form: every coefficient of 1/(1-z) equals 1
        assert!(c.iter().all(|v| (v - one).norm() < 1e-8));
    }
}
