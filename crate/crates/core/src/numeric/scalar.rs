use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::Polynomial;
use super::roots::{self, RootCluster};
use crate::error::{Error, Result};
use crate::tolerances;

/// Exact rational scalar.
pub type Q = BigRational;

/// Floating complex scalar.
pub type ComplexValue = Complex64;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Field of coefficients for polynomials and rational functions.
///
/// Two instances exist: [`Q`] (exact) and [`ComplexValue`] (floating). The
/// exact instance never uses tolerances; the floating one treats values
/// below a relative threshold as zero when counting orders of vanishing.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn to_complex(&self) -> Complex64;

    fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }

    /// Zero for counting purposes, relative to `scale`.
    fn negligible(&self, scale: f64) -> bool;

    /// Distinct roots with multiplicities.
    fn roots(p: &Polynomial<Self>) -> Result<Vec<RootCluster>>;

    /// Cancel common factors of a numerator/denominator pair.
    fn reduce(num: Polynomial<Self>, den: Polynomial<Self>) -> Result<(Polynomial<Self>, Polynomial<Self>)>;
}

impl Scalar for Q {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        q(n)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(q_to_f64(self), 0.0)
    }

    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn roots(p: &Polynomial<Self>) -> Result<Vec<RootCluster>> {
        roots::exact_roots(p)
    }

    fn reduce(num: Polynomial<Self>, den: Polynomial<Self>) -> Result<(Polynomial<Self>, Polynomial<Self>)> {
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        // monic denominator
        let lc = d.leading().cloned().unwrap_or_else(Q::one);
        n = n.scale(&(Q::one() / lc.clone()));
        d = d.scale(&(Q::one() / lc));
        Ok((n, d))
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn abs_f64(&self) -> f64 {
        self.norm()
    }

    fn negligible(&self, scale: f64) -> bool {
        self.norm() <= 1e-9 * scale
    }

    fn roots(p: &Polynomial<Self>) -> Result<Vec<RootCluster>> {
        roots::float_roots(p)
    }

    fn reduce(num: Polynomial<Self>, den: Polynomial<Self>) -> Result<(Polynomial<Self>, Polynomial<Self>)> {
        if num.degree().unwrap_or(0) == 0 || den.degree().unwrap_or(0) == 0 {
            return Ok((num, den));
        }
        let num_roots = Self::roots(&num)?;
        let den_roots = Self::roots(&den)?;
        let (mut n, mut d) = (num, den);
        for a in &num_roots {
            for b in &den_roots {
                let scale = 1.0 + a.root.norm().max(b.root.norm());
                if (a.root - b.root).norm() < tolerances::COMMON_ROOT * scale {
                    let shared = a.multiplicity.min(b.multiplicity);
                    let centre = (a.root + b.root) * 0.5;
                    for _ in 0..shared {
                        n = n.deflate(&centre);
                        d = d.deflate(&centre);
                    }
                }
            }
        }
        Ok((n, d))
    }
}

/// Reject NaN and infinite components.
pub fn finite_complex(re: f64, im: f64) -> Result<Complex64> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::domain("complex value must have finite components"))
    }
}
