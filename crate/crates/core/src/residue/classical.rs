use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, QuadratureResult};
use crate::tolerances;

/// Entries of the classical-integral catalog.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ClassicalIntegral {
    /// `\int_0^{2 pi} d theta / (a + b cos theta)`, `a > |b| > 0`.
    TrigRational { a: f64, b: f64 },
    /// `\int_R e^{ikx} / (x^2 + a^2) dx`, `a > 0`.
    FourierQuadratic { a: f64, k: f64 },
    /// `\int_0^\infty sin x / x dx`.
    Dirichlet,
    /// `\int_0^\infty x^{alpha - 1} / (1 + x) dx`, `0 < alpha < 1`.
    KeyholePower { alpha: f64 },
    /// `\int_0^\infty x^{1/3} / (1 + x^2) dx`.
    Cuberoot,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalOutcome {
    pub closed_form: f64,
    pub numeric: QuadratureResult,
    pub tolerance: f64,
    pub agrees: bool,
}

impl ClassicalIntegral {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::domain(m));
        match *self {
            ClassicalIntegral::TrigRational { a, b } if !(a > b.abs() && b.abs() > 0.0) => bad("need a > |b| > 0"),
            ClassicalIntegral::FourierQuadratic { a, k } if !(a > 0.0) || !k.is_finite() => bad("need a > 0"),
            ClassicalIntegral::KeyholePower { alpha } if !(alpha > 0.0 && alpha < 1.0) => bad("need 0 < alpha < 1"),
            _ => Ok(()),
        }
    }

    pub fn closed_form(&self) -> Result<f64> {
        self.validate()?;
        Ok(match *self {
            ClassicalIntegral::TrigRational { a, b } => 2.0 * PI / (a * a - b * b).sqrt(),
            ClassicalIntegral::FourierQuadratic { a, k } => PI / a * (-a * k.abs()).exp(),
            ClassicalIntegral::Dirichlet => PI / 2.0,
            ClassicalIntegral::KeyholePower { alpha } => PI / (PI * alpha).sin(),
            ClassicalIntegral::Cuberoot => PI / 3f64.sqrt(),
        })
    }

    pub fn tolerance(&self) -> f64 {
        match self {
            ClassicalIntegral::Dirichlet => tolerances::DIRICHLET,
            _ => tolerances::CLASSICAL,
        }
    }

    /// Direct evaluation on the real line, independent of any contour argument.
    pub fn numeric(&self) -> Result<QuadratureResult> {
        self.validate()?;
        let tol = 1e-11;
        match *self {
            ClassicalIntegral::TrigRational { a, b } => {
                quadrature::periodic_trapezoid(|t| Complex64::new(1.0 / (a + b * t.cos()), 0.0), tol, 1 << 22)
            }
            ClassicalIntegral::FourierQuadratic { a, k: 0.0 } => {
                // x = a tan(theta) turns the integrand into the constant 1/a
                quadrature::integrate_real(|_| 1.0 / a, -PI / 2.0, PI / 2.0, tol)
            }
            ClassicalIntegral::FourierQuadratic { a, k } => {
                // the sine part is odd; the cosine part is an alternating series of half-period windows
                let h = PI / k.abs();
                let r = alternating_tail(|x| 2.0 * (k * x).cos() / (x * x + a * a), h / 2.0, h)?;
                Ok(r)
            }
            ClassicalIntegral::Dirichlet => alternating_tail(|x| if x == 0.0 { 1.0 } else { x.sin() / x }, PI, PI),
            ClassicalIntegral::KeyholePower { alpha } => {
                // split at 1, x = 1/y on the tail; the substitutions s = x^alpha and
                // s = y^{1 - alpha} absorb the endpoint power singularities
                let head = quadrature::integrate_real(|s| 1.0 / (alpha * (1.0 + s.powf(1.0 / alpha))), 0.0, 1.0, tol)?;
                let beta = 1.0 - alpha;
                let tail = quadrature::integrate_real(|s| 1.0 / (beta * (1.0 + s.powf(1.0 / beta))), 0.0, 1.0, tol)?;
                Ok(head.combine(tail))
            }
            ClassicalIntegral::Cuberoot => {
                // x = s^3 on [0, 1]; x = 1/y, y = s^{3/2} on the tail
                let head = quadrature::integrate_real(|s| 3.0 * s.powi(3) / (1.0 + s.powi(6)), 0.0, 1.0, tol)?;
                let tail = quadrature::integrate_real(|s| 1.5 / (1.0 + s.powi(3)), 0.0, 1.0, tol)?;
                Ok(head.combine(tail))
            }
        }
    }
}

/// Closed form, direct numeric value, and whether they agree at the catalog tolerance.
pub fn classical_integral(which: ClassicalIntegral) -> Result<ClassicalOutcome> {
    let closed_form = which.closed_form()?;
    let numeric = which.numeric()?;
    let tolerance = which.tolerance();
    let agrees = (numeric.value.re - closed_form).abs() <= tolerance && numeric.value.im.abs() <= tolerance;
    Ok(ClassicalOutcome { closed_form, numeric, tolerance, agrees })
}

const WINDOWS: usize = 400;
const AVERAGING_PASSES: usize = 12;

/// `\int_0^\infty f` for an oscillatory `f` whose sign changes at `first + j h`:
/// partial sums over whole windows, then repeated pairwise averaging of the
/// partial-sum sequence.
fn alternating_tail<F: Fn(f64) -> f64>(f: F, first: f64, h: f64) -> Result<QuadratureResult> {
    let tol = 1e-13;
    let mut acc = quadrature::integrate_real(&f, 0.0, first, tol)?;
    let mut sums = Vec::with_capacity(WINDOWS);
    for j in 0..WINDOWS {
        let a = first + j as f64 * h;
        let w = quadrature::integrate_real(&f, a, a + h, tol)?;
        acc = acc.combine(w);
        sums.push(acc.value.re);
    }
    for _ in 0..AVERAGING_PASSES {
        sums = sums.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    let n = sums.len();
    let value = sums[n - 1];
    let error_estimate = (sums[n - 1] - sums[n - 2]).abs() + acc.error_estimate;
    Ok(QuadratureResult { value: Complex64::new(value, 0.0), error_estimate, evaluations: acc.evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(w: ClassicalIntegral, want: f64) {
        let o = classical_integral(w).unwrap();
        assert!((o.closed_form - want).abs() < 1e-14, "{w:?}");
        assert!(o.agrees, "{w:?}: {} vs {}", o.numeric.value, o.closed_form);
    }

    #[test]
    fn catalog_values() {
        check(ClassicalIntegral::TrigRational { a: 2.0, b: 1.0 }, 2.0 * PI / 3f64.sqrt());
        check(ClassicalIntegral::FourierQuadratic { a: 1.0, k: 1.0 }, PI / 1f64.exp());
        check(ClassicalIntegral::Dirichlet, PI / 2.0);
        check(ClassicalIntegral::KeyholePower { alpha: 1.0 / 3.0 }, 2.0 * PI / 3f64.sqrt());
        check(ClassicalIntegral::Cuberoot, PI / 3f64.sqrt());
    }

    #[test]
    fn numeric_routes_are_tight() {
        let d = ClassicalIntegral::Dirichlet.numeric().unwrap();
        assert!((d.value.re - PI / 2.0).abs() < 1e-8);
        let f = ClassicalIntegral::FourierQuadratic { a: 0.7, k: -2.5 }.numeric().unwrap();
        assert!((f.value.re - PI / 0.7 * (-0.7f64 * 2.5).exp()).abs() < 1e-8);
        let z = ClassicalIntegral::FourierQuadratic { a: 2.0, k: 0.0 }.numeric().unwrap();
        assert!((z.value.re - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(classical_integral(ClassicalIntegral::TrigRational { a: 1.0, b: 1.0 }).is_err());
        assert!(classical_integral(ClassicalIntegral::TrigRational { a: 1.0, b: 0.0 }).is_err());
        assert!(classical_integral(ClassicalIntegral::FourierQuadratic { a: 0.0, k: 1.0 }).is_err());
        assert!(classical_integral(ClassicalIntegral::KeyholePower { alpha: 1.0 }).is_err());
    }
}
