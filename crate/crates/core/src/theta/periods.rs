use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature;

use super::lattice::PeriodPair;

/// Period lattice of `y^2 = 4(x - e1)(x - e2)(x - e3)` for real `e1 > e2 > e3`.
///
/// `omega1 = 2 \int_{e3}^{e2} dx / sqrt|p|` (real) and
/// `omega2 = 2i \int_{e2}^{e1} dx / sqrt|p|` (imaginary). The substitutions
/// `x = e3 + (e2 - e3) sin^2 t` and `x = e2 + (e1 - e2) sin^2 t` remove the
/// endpoint singularities, leaving `dt / sqrt(e1 - x)` and
/// `dt / sqrt(x - e3)` on `[0, pi/2]`.
///
/// With this labelling `wp(omega1/2) = e1`, `wp(omega2/2) = e3`,
/// `wp((omega1 + omega2)/2) = e2` when `e1 + e2 + e3 = 0`; otherwise the
/// half-period values are the `e_i` minus their mean.
pub fn periods_real_cubic(e1: f64, e2: f64, e3: f64) -> Result<PeriodPair> {
    if !(e1 > e2 && e2 > e3) || !(e1.is_finite() && e3.is_finite()) {
        return Err(Error::domain("need e1 > e2 > e3"));
    }
    let tol = 1e-14;
    let real = quadrature::integrate_real(
        |t| {
            let x = e3 + (e2 - e3) * t.sin().powi(2);
            1.0 / (e1 - x).sqrt()
        },
        0.0,
        PI / 2.0,
        tol,
    )?;
    let imag = quadrature::integrate_real(
        |t| {
            let x = e2 + (e1 - e2) * t.sin().powi(2);
            1.0 / (x - e3).sqrt()
        },
        0.0,
        PI / 2.0,
        tol,
    )?;
    PeriodPair::new(
        Complex64::new(2.0 * real.value.re, 0.0),
        Complex64::new(0.0, 2.0 * imag.value.re),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::{eisenstein, eta1_ratio, wp_via_theta};

    fn agm(mut a: f64, mut b: f64) -> f64 {
        while (a - b).abs() > 1e-15 * a {
            (a, b) = ((a + b) / 2.0, (a * b).sqrt());
        }
        a
    }

    #[test]
    fn agrees_with_agm() {
        let (e1, e2, e3) = (2.0, 0.5, -2.5);
        let l = periods_real_cubic(e1, e2, e3).unwrap();
        let w1 = PI / agm((e1 - e3).sqrt(), (e1 - e2).sqrt());
        let w2 = PI / agm((e1 - e3).sqrt(), (e2 - e3).sqrt());
        assert!((l.omega1.re - w1).abs() < 1e-12);
        assert!((l.omega2.im - w2).abs() < 1e-12);
    }

    #[test]
    fn symmetric_roots_give_square_lattice() {
        let l = periods_real_cubic(1.0, 0.0, -1.0).unwrap();
        assert!((l.tau() - Complex64::new(0.0, 1.0)).norm() < 1e-6);
    }

    #[test]
    fn half_periods_reproduce_roots() {
        let (e1, e2, e3) = (2.0, 0.5, -2.5);
        let l = periods_real_cubic(e1, e2, e3).unwrap();
        let c = eta1_ratio(&l, 200).unwrap();
        let at = |z: Complex64| wp_via_theta(z, &l, c).unwrap();
        assert!((at(l.omega1 / 2.0) - e1).norm() < 1e-4);
        assert!((at(l.omega2 / 2.0) - e3).norm() < 1e-4);
        assert!((at((l.omega1 + l.omega2) / 2.0) - e2).norm() < 1e-4);
        // and they are the roots of 4t^3 - g2 t - g3
        let (g2, g3) = eisenstein(&l, 200).unwrap();
        for e in [e1, e2, e3] {
            let t = Complex64::new(e, 0.0);
            assert!((t * t * t * 4.0 - g2 * t - g3).norm() < 1e-4);
        }
    }

    #[test]
    fn ordering_enforced() {
        assert!(periods_real_cubic(0.0, 1.0, -1.0).is_err());
        assert!(periods_real_cubic(1.0, 1.0, -1.0).is_err());
    }
}
