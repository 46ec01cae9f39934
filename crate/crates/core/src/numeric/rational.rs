use num_complex::Complex64;

use super::poly::Polynomial;
use super::scalar::Scalar;
use crate::divisor::P1Point;
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<T: Scalar> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Builds and reduces `num / den`.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("denominator is identically zero"));
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(),
            });
        }
        let (num, den) = T::reduce(num, den)?;
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, z: &T) -> Result<T> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return Err(Error::Pole("denominator vanishes".into()));
        }
        Ok(self.num.eval(z) / d)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn derivative(&self) -> Result<Self> {
        Self::new(
            self.num
                .derivative()
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    pub fn to_complex(&self) -> RationalFunction<Complex64> {
        RationalFunction {
            num: self.num.to_complex(),
            den: self.den.to_complex(),
        }
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let n = self.num.to_complex().eval(&z);
        let d = self.den.to_complex().eval(&z);
        n / d
    }

    /// Evaluation closure over complex arguments (coefficients converted once).
    pub fn complex_fn(&self) -> impl Fn(Complex64) -> Complex64 + Send + Sync {
        let n = self.num.to_complex();
        let d = self.den.to_complex();
        move |z| n.eval(&z) / d.eval(&z)
    }
}

/// Order of vanishing of `f` at the center `c` (negative for poles).
///
/// Exact scalars give an exact answer; floating scalars count leading
/// shifted coefficients below a relative threshold as zero.
pub fn order_at<T: Scalar>(f: &RationalFunction<T>, c: &T) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::domain("order of the zero function is undefined"));
    }
    let on = f.num.taylor_shift(c).low_order().unwrap_or(0) as i64;
    let od = f.den.taylor_shift(c).low_order().unwrap_or(0) as i64;
    Ok(on - od)
}

/// Order at infinity: the order of `f(1/w)` at `w = 0`, i.e. `deg den - deg num`.
pub fn ord_at_infinity<T: Scalar>(f: &RationalFunction<T>) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::domain("order of the zero function is undefined"));
    }
    // f(1/w) = w^(dd - dn) * rev(num)(w) / rev(den)(w), and both reversals are units at 0.
    let dn = f.num.degree().unwrap() as i64;
    let dd = f.den.degree().unwrap() as i64;
    let rn = f.num.reversed().low_order().unwrap_or(0) as i64;
    let rd = f.den.reversed().low_order().unwrap_or(0) as i64;
    Ok(dd - dn + rn - rd)
}

/// Order of `f` at a point of the Riemann sphere.
pub fn ord_at<T: Scalar>(f: &RationalFunction<T>, p: &P1Point) -> Result<i64> {
    match p {
        P1Point::Infinity => ord_at_infinity(f),
        P1Point::Finite(c) => order_at(&f.to_complex(), c),
    }
}
