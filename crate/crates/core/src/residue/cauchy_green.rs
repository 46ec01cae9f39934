use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature;
use crate::tolerances;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CauchyGreen {
    pub numeric: Complex64,
    pub reference: Complex64,
    pub agrees: bool,
}

const MAX_ANGULAR_NODES: usize = 1 << 16;

/// `\iint_{|w|<1} dA(w) / (w - z)` against the closed form `-pi conj(z)`.
///
/// The area integral is taken on a polar grid centred at the singular point
/// `w = z`: the Jacobian `rho` cancels `1/|w - z|`, leaving `e^{-i phi}` on
/// each ray, so the shrinking exclusion disk around `z` contributes nothing and
/// each ray integrates exactly out to the unit circle. The angle uses the
/// periodic trapezoid rule.
pub fn cauchy_green_disk(z: Complex64) -> Result<CauchyGreen> {
    if !(z.norm() < 0.95) {
        return Err(Error::domain("cauchy_green_disk needs |z| < 0.95"));
    }
    let integrand = |phi: f64| {
        let dir = Complex64::from_polar(1.0, phi);
        // |z + rho dir| = 1  =>  rho^2 + 2 b rho + |z|^2 - 1 = 0
        let b = (z.conj() * dir).re;
        let rho_max = -b + (b * b + 1.0 - z.norm_sqr()).sqrt();
        dir.conj() * rho_max
    };
    let r = quadrature::periodic_trapezoid(integrand, 1e-12, MAX_ANGULAR_NODES)?;
    let reference = -PI * z.conj();
    Ok(CauchyGreen {
        numeric: r.value,
        reference,
        agrees: (r.value - reference).norm() <= tolerances::CAUCHY_GREEN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_values() {
        for z in [Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.2), Complex64::new(0.5, 0.0), Complex64::new(-0.1, 0.9)] {
            let r = cauchy_green_disk(z).unwrap();
            assert!(r.agrees);
            assert!((r.numeric - r.reference).norm() < 1e-9, "{z}");
        }
    }

    #[test]
    fn near_boundary_rejected() {
        assert!(cauchy_green_disk(Complex64::new(0.96, 0.0)).is_err());
    }

    #[test]
    fn matches_cartesian_grid_away_from_singularity() {
        // independent crude check: midpoint rule on a fine Cartesian grid, skipping the cell holding z
        let z = Complex64::new(0.3, 0.2);
        let n = 800;
        let h = 2.0 / n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                let w = Complex64::new(-1.0 + (i as f64 + 0.5) * h, -1.0 + (j as f64 + 0.5) * h);
                if w.norm() < 1.0 && (w - z).norm() > h {
                    acc += (w - z).inv() * h * h;
                }
            }
        }
        let r = cauchy_green_disk(z).unwrap();
        assert!((acc - r.numeric).norm() < 2e-2);
    }
}
