use std::f64::consts::{E, PI};

use num_complex::Complex64;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeric::Q;
use crate::quadrature;

const TOL: f64 = 1e-13;

/// Euler's Gamma function.
///
/// For `Re s >= 1/2` the integral is evaluated directly after shifting `s`
/// into `(1/2, 3/2]`; the left half-plane uses the reflection formula.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("Gamma needs a finite argument"));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole(format!("Gamma has a pole at {}", s.re)));
    }
    if s.re < 0.5 {
        let sin = (s * PI).sin();
        if sin.norm() == 0.0 {
            return Err(Error::Pole(format!("Gamma has a pole at {s}")));
        }
        return Ok(PI / (sin * gamma(Complex64::new(1.0, 0.0) - s)?));
    }
    // Gamma(s) = (s-1)(s-2)...(s-m) Gamma(s-m)
    let mut factor = Complex64::new(1.0, 0.0);
    let mut t = s;
    while t.re > 1.5 {
        t -= 1.0;
        factor *= t;
    }
    Ok(factor * gamma_integral(t)?)
}

/// `\int_0^\infty t^{s-1} e^{-t} dt` for `1/2 <= Re s <= 3/2`, split at `t = 1`.
fn gamma_integral(s: Complex64) -> Result<Complex64> {
    // t = v^p with p = 1/Re s makes t^{s-1} dt = p v^{i Im s / Re s} dv, bounded on [0, 1]
    let p = 1.0 / s.re;
    let twist = s.im / s.re;
    let head = quadrature::integrate(
        |v| {
            if v == 0.0 {
                return Complex64::new(if twist == 0.0 { p } else { 0.0 }, 0.0);
            }
            let t = v.powf(p);
            Complex64::from_polar(p * (-t).exp(), twist * v.ln())
        },
        0.0,
        1.0,
        TOL,
    )?;
    // u = e^{-t}: \int_1^\infty t^{s-1} e^{-t} dt = \int_0^{1/e} (-ln u)^{s-1} du
    let tail = quadrature::integrate(
        |u| {
            if u == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            Complex64::new(-u.ln(), 0.0).powc(s - 1.0)
        },
        0.0,
        1.0 / E,
        TOL,
    )?;
    Ok(head.value + tail.value)
}

/// `Res_{s = -n} Gamma(s) = (-1)^n / n!`, exactly.
pub fn gamma_residue(n: u32) -> Q {
    let mut f = Q::one();
    for k in 1..=n {
        f *= Q::from_integer(k.into());
    }
    let r = Q::one() / f;
    if n % 2 == 1 {
        -r
    } else {
        r
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{q, q_frac};

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn half_integer_and_integer_values() {
        let sqrt_pi = PI.sqrt();
        assert!((gamma(re(0.5)).unwrap() - sqrt_pi).norm() < 1e-8);
        assert!((gamma(re(5.0)).unwrap() - 24.0).norm() < 1e-8);
        assert!((gamma(re(2.5)).unwrap() - 0.75 * sqrt_pi).norm() < 1e-8);
        assert!((gamma(re(1.0)).unwrap() - 1.0).norm() < 1e-11);
    }

    #[test]
    fn negative_arguments_use_reflection() {
        // Gamma(-1/2) = -2 sqrt(pi)
        assert!((gamma(re(-0.5)).unwrap() + 2.0 * PI.sqrt()).norm() < 1e-8);
    }

    #[test]
    fn complex_argument_matches_known_value() {
        // |Gamma(i)|^2 = pi / (sinh pi)
        let g = gamma(Complex64::new(0.0, 1.0)).unwrap();
        assert!((g.norm_sqr() - PI / PI.sinh()).abs() < 1e-9);
        // Gamma(1 + i) = i Gamma(i)
        let g1 = gamma(Complex64::new(1.0, 1.0)).unwrap();
        assert!((g1 - Complex64::new(0.0, 1.0) * g).norm() < 1e-9);
    }

    #[test]
    fn poles_are_rejected() {
        for n in 0..4 {
            assert!(matches!(gamma(re(-(n as f64))), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn residues_at_poles() {
        assert_eq!(gamma_residue(0), q(1));
        assert_eq!(gamma_residue(1), q(-1));
        assert_eq!(gamma_residue(3), q_frac(-1, 6));
        assert_eq!(gamma_residue(4), q_frac(1, 24));
    }

    #[test]
    fn residue_matches_local_behaviour() {
        // (s + n) Gamma(s) -> Res as s -> -n
        for n in 0..4u32 {
            let eps = 1e-7;
            let s = re(-(n as f64) + eps);
            let approx = gamma(s).unwrap() * eps;
            let want = crate::numeric::q_to_f64(&gamma_residue(n));
            assert!((approx.re - want).abs() < 1e-5, "n = {n}");
        }
    }
}
