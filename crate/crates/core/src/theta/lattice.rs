use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerances;

/// Generators of a lattice `Z omega1 + Z omega2` with `Im(omega2/omega1) > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodPair {
    pub omega1: Complex64,
    pub omega2: Complex64,
}

impl PeriodPair {
    pub fn new(omega1: Complex64, omega2: Complex64) -> Result<Self> {
        if omega1.norm() == 0.0 || omega2.norm() == 0.0 || !omega1.is_finite() || !omega2.is_finite() {
            return Err(Error::domain("periods must be finite and nonzero"));
        }
        if !((omega2 / omega1).im > 0.0) {
            return Err(Error::domain("periods must satisfy Im(omega2/omega1) > 0"));
        }
        Ok(PeriodPair { omega1, omega2 })
    }

    pub fn square() -> Self {
        PeriodPair { omega1: Complex64::new(1.0, 0.0), omega2: Complex64::new(0.0, 1.0) }
    }

    pub fn hexagonal() -> Self {
        PeriodPair { omega1: Complex64::new(1.0, 0.0), omega2: Complex64::from_polar(1.0, std::f64::consts::PI / 3.0) }
    }

    pub fn tau(&self) -> Complex64 {
        self.omega2 / self.omega1
    }

    pub fn scaled(&self, lambda: Complex64) -> Self {
        PeriodPair { omega1: self.omega1 * lambda, omega2: self.omega2 * lambda }
    }

    pub fn area(&self) -> f64 {
        (self.omega1.conj() * self.omega2).im.abs()
    }

    pub fn point(&self, m: i64, n: i64) -> Complex64 {
        self.omega1 * m as f64 + self.omega2 * n as f64
    }

    /// Real coordinates `(a, b)` with `z = a omega1 + b omega2`.
    pub fn coordinates(&self, z: Complex64) -> (f64, f64) {
        let det = (self.omega1.conj() * self.omega2).im;
        let a = (z.conj() * self.omega2).im / det;
        let b = (self.omega1.conj() * z).im / det;
        (a, b)
    }

    /// Distance from `z` to the nearest lattice point.
    pub fn distance_to_lattice(&self, z: Complex64) -> f64 {
        let (a, b) = self.coordinates(z);
        let (m0, n0) = (a.round() as i64, b.round() as i64);
        let mut best = f64::INFINITY;
        for dm in -1..=1 {
            for dn in -1..=1 {
                best = best.min((z - self.point(m0 + dm, n0 + dn)).norm());
            }
        }
        best
    }
}

/// Nonzero lattice points used by the truncated sums at truncation `n`.
///
/// The box `|m|, |n| <= N` is cut down to the largest centred disk it
/// contains, so the truncated set keeps every rotational symmetry of the
/// lattice. Points come in order of increasing `max(|m|, |n|)`.
pub fn lattice_points(l: &PeriodPair, n: usize) -> Vec<Complex64> {
    let n = n as i64;
    let radius = n as f64 * l.area() / l.omega1.norm().max(l.omega2.norm());
    let cutoff = radius * (1.0 + 1e-9);
    let mut out = Vec::with_capacity((4 * n * n) as usize);
    for k in 1..=n {
        for m in -k..=k {
            for j in -k..=k {
                if m.abs().max(j.abs()) != k {
                    continue;
                }
                let w = l.point(m, j);
                if w.norm() <= cutoff {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn check_truncation(n: usize) -> Result<()> {
    if n < tolerances::MIN_LATTICE_TRUNCATION {
        return Err(Error::domain(format!(
            "lattice truncation must be at least {}",
            tolerances::MIN_LATTICE_TRUNCATION
        )));
    }
    Ok(())
}

/// `wp(z) = 1/z^2 + sum' (1/(z - w)^2 - 1/w^2)` over the truncated lattice.
pub fn wp_lattice(z: Complex64, l: &PeriodPair, n: usize) -> Result<Complex64> {
    check_truncation(n)?;
    if l.distance_to_lattice(z) <= 1e-8 * l.omega1.norm() {
        return Err(Error::Pole(format!("z = {z} is a lattice point")));
    }
    let mut acc = z.powi(-2);
    for w in lattice_points(l, n) {
        acc += (z - w).powi(-2) - w.powi(-2);
    }
    Ok(acc)
}

/// Lattice-sum derivative `wp'(z) = -2 sum 1/(z - w)^3`.
pub fn wp_prime_lattice(z: Complex64, l: &PeriodPair, n: usize) -> Result<Complex64> {
    check_truncation(n)?;
    if l.distance_to_lattice(z) <= 1e-8 * l.omega1.norm() {
        return Err(Error::Pole(format!("z = {z} is a lattice point")));
    }
    let mut acc = z.powi(-3);
    for w in lattice_points(l, n) {
        acc += (z - w).powi(-3);
    }
    Ok(acc * -2.0)
}

/// Eisenstein invariants together with the quasi-period `eta1` of sigma.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EllipticInvariants {
    pub g2: Complex64,
    pub g3: Complex64,
    /// Quasi-period: `sigma(z + omega1) = -exp(eta1 (z + omega1/2)) sigma(z)`.
    pub eta1: Complex64,
    pub truncation: usize,
}

/// `g2 = 60 sum' w^{-4}`, `g3 = 140 sum' w^{-6}` over the truncated lattice.
pub fn eisenstein(l: &PeriodPair, n: usize) -> Result<(Complex64, Complex64)> {
    check_truncation(n)?;
    let (mut s4, mut s6) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for w in lattice_points(l, n) {
        let inv2 = w.powi(-2);
        let inv4 = inv2 * inv2;
        s4 += inv4;
        s6 += inv4 * inv2;
    }
    Ok((s4 * 60.0, s6 * 140.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_validation() {
        let one = Complex64::new(1.0, 0.0);
        assert!(PeriodPair::new(one, Complex64::new(0.0, -1.0)).is_err());
        assert!(PeriodPair::new(one, one * 2.0).is_err());
        assert!(PeriodPair::new(Complex64::new(0.0, 0.0), one).is_err());
        assert!(PeriodPair::new(one, Complex64::new(0.5, 1.2)).is_ok());
    }

    #[test]
    fn coordinates_round_trip() {
        let l = PeriodPair::new(Complex64::new(1.0, 0.2), Complex64::new(0.5, 1.2)).unwrap();
        let z = l.omega1 * 0.3 + l.omega2 * -1.7;
        let (a, b) = l.coordinates(z);
        assert!((a - 0.3).abs() < 1e-14 && (b + 1.7).abs() < 1e-14);
        assert!(l.distance_to_lattice(l.point(3, -2)) < 1e-14);
    }

    #[test]
    fn symmetric_truncation_kills_forced_invariants() {
        let (_, g3) = eisenstein(&PeriodPair::square(), 40).unwrap();
        assert!(g3.norm() < 1e-10);
        let (g2, _) = eisenstein(&PeriodPair::hexagonal(), 40).unwrap();
        assert!(g2.norm() < 1e-8);
    }

    #[test]
    fn square_lattice_g2_matches_reference() {
        // g2(1, i) = Gamma(1/4)^8 / (16 pi^2) = 189.07272...
        let (g2, _) = eisenstein(&PeriodPair::square(), 200).unwrap();
        assert!((g2.re - 189.072_720_129_2).abs() < 1e-4, "{g2}");
    }

    #[test]
    fn wp_is_even_and_has_poles_on_the_lattice() {
        let l = PeriodPair::square();
        let z = Complex64::new(0.23, 0.11);
        let d = wp_lattice(z, &l, 40).unwrap() - wp_lattice(-z, &l, 40).unwrap();
        assert!(d.norm() < 1e-10);
        assert!(matches!(wp_lattice(l.point(1, 1), &l, 40), Err(Error::Pole(_))));
        assert!(wp_lattice(z, &l, 5).is_err());
    }
}
