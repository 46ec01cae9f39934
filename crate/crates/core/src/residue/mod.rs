//! Residues, contour integrals, the argument principle, the classical
//! integral catalog and the Gamma function.

mod cauchy_green;
mod classical;
mod contour;
mod gamma;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

pub use cauchy_green::{cauchy_green_disk, CauchyGreen};
pub use classical::{classical_integral, ClassicalIntegral, ClassicalOutcome};
pub use contour::{contour_integral, Contour, Orientation};
pub use gamma::{gamma, gamma_residue};

use crate::error::{Error, Result};
use crate::numeric::{laurent_expand, order_at, Polynomial, RationalFunction, Scalar};
use crate::quadrature::QuadratureResult;
use crate::tolerances;

const TWO_PI_I: Complex64 = Complex64::new(0.0, 2.0 * PI);

/// Residue of a rational function at one of its poles, read off the Laurent expansion.
pub fn residue_rational<T: Scalar>(f: &RationalFunction<T>, pole: &T) -> Result<T> {
    let k = order_at(f, pole)?;
    if k >= 0 {
        return Err(Error::domain(format!("not a pole: ord_at = {k}")));
    }
    Ok(laurent_expand(f, pole, -1)?.residue())
}

/// Residue by `(1/(k-1)!) d^{k-1}/dz^{k-1} [(z - p)^k f(z)]` at `z = p`.
///
/// Independent of the series-division route; used to cross-check it.
pub fn residue_by_derivative<T: Scalar>(f: &RationalFunction<T>, pole: &T) -> Result<T> {
    let k = order_at(f, pole)?;
    if k >= 0 {
        return Err(Error::domain(format!("not a pole: ord_at = {k}")));
    }
    let k = (-k) as usize;
    let mut den = f.den().clone();
    for _ in 0..k {
        den = den.deflate(pole);
    }
    let mut g = RationalFunction::new(f.num().clone(), den)?;
    let mut factorial = T::one();
    for j in 1..k {
        g = g.derivative()?;
        factorial = factorial * T::from_i64(j as i64);
    }
    Ok(g.eval(pole)? / factorial)
}

/// `Res(1/h, z0) = 1/h'(z0)` at a simple zero of `h`.
pub fn residue_reciprocal<H, D>(h: H, h_prime: D, z0: Complex64, tol: f64) -> Result<Complex64>
where
    H: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    let v = h(z0);
    if v.norm() >= tol {
        return Err(Error::domain(format!("h(z0) = {v} is not zero")));
    }
    let d = h_prime(z0);
    if d.norm() < tol {
        return Err(Error::domain("degenerate zero: h'(z0) vanishes"));
    }
    Ok(d.inv())
}

/// Residue-theorem evaluation and the quadrature it was checked against.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueIntegral {
    pub value: Complex64,
    pub poles_inside: Vec<(Complex64, Complex64)>,
    pub quadrature: QuadratureResult,
}

/// `2 pi i` times the sum of residues inside a circle, cross-checked by quadrature.
pub fn integrate_by_residues<T: Scalar>(f: &RationalFunction<T>, c: &Contour) -> Result<ResidueIntegral> {
    let Contour::Circle { center, radius, orientation } = c else {
        return Err(Error::domain("residue integration needs a circle"));
    };
    let fc = f.to_complex();
    let poles = match f.den().degree() {
        Some(d) if d >= 1 => T::roots(f.den())?,
        _ => Vec::new(),
    };
    let mut inside = Vec::new();
    for p in &poles {
        let dist = (p.root - center).norm();
        if (dist - radius).abs() <= tolerances::ON_CONTOUR * radius {
            return Err(Error::Pole(format!("pole {} lies on the contour", p.root)));
        }
        if dist < *radius {
            inside.push((p.root, residue_rational(&fc, &p.root)?));
        }
    }
    let sum: Complex64 = inside.iter().map(|(_, r)| r).sum();
    let value = TWO_PI_I * sum * orientation.sign();

    let quadrature = contour_integral(fc.complex_fn(), c, tolerances::CONTOUR_TOL)?;
    let scale = 1.0 + value.norm() + quadrature.value.norm();
    if (quadrature.value - value).norm() > quadrature.error_estimate + 1e-8 * scale {
        return Err(Error::Consistency(format!(
            "residue sum {value} disagrees with quadrature {}",
            quadrature.value
        )));
    }
    Ok(ResidueIntegral { value, poles_inside: inside, quadrature })
}

/// Winding number together with the raw value of `(1/2 pi i) \oint dz/(z - p)`.
pub fn winding_number_raw(c: &Contour, p: Complex64) -> Result<(i64, Complex64)> {
    if !c.is_closed() {
        return Err(Error::domain("winding number needs a closed contour"));
    }
    round_to_integer(contour_integral(|z| (z - p).inv(), c, tolerances::CONTOUR_TOL)?)
}

pub fn winding_number(c: &Contour, p: Complex64) -> Result<i64> {
    winding_number_raw(c, p).map(|(n, _)| n)
}

/// Zeros minus poles inside a closed contour, `(1/2 pi i) \oint f'/f`.
pub fn count_zeros_argument<F, D>(f: F, f_prime: D, c: &Contour) -> Result<i64>
where
    F: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    count_zeros_argument_raw(f, f_prime, c).map(|(n, _)| n)
}

/// As [`count_zeros_argument`], also returning the unrounded contour value.
pub fn count_zeros_argument_raw<F, D>(f: F, f_prime: D, c: &Contour) -> Result<(i64, Complex64)>
where
    F: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    if !c.is_closed() {
        return Err(Error::domain("argument principle needs a closed contour"));
    }
    let r = contour_integral(|z| f_prime(z) / f(z), c, tolerances::CONTOUR_TOL)?;
    round_to_integer(r)
}

/// Zero count of a polynomial inside a circle by the argument principle.
pub fn count_polynomial_zeros(p: &Polynomial<Complex64>, c: &Contour) -> Result<i64> {
    count_polynomial_zeros_raw(p, c).map(|(n, _)| n)
}

pub fn count_polynomial_zeros_raw(p: &Polynomial<Complex64>, c: &Contour) -> Result<(i64, Complex64)> {
    let dp = p.derivative();
    count_zeros_argument_raw(|z| p.eval(&z), |z| dp.eval(&z), c)
}

fn round_to_integer(r: QuadratureResult) -> Result<(i64, Complex64)> {
    let raw = r.value / TWO_PI_I;
    let n = raw.re.round();
    if (raw - n).norm() > tolerances::WINDING_INTEGER || !n.is_finite() {
        return Err(Error::NonIntegerWinding { raw });
    }
    Ok((n as i64, raw))
}
