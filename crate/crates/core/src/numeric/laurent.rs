use super::poly::Polynomial;
use super::rational::RationalFunction;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Truncated Laurent expansion `sum_{n=n_min}^{n_max} a_n (z - center)^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSegment<T: Scalar> {
    pub center: T,
    pub n_min: i64,
    pub coeffs: Vec<T>,
}

impl<T: Scalar> LaurentSegment<T> {
    pub fn n_max(&self) -> i64 {
        self.n_min + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `(z - center)^n`, zero outside the stored window.
    pub fn coeff(&self, n: i64) -> T {
        if n < self.n_min {
            return T::zero();
        }
        self.coeffs
            .get((n - self.n_min) as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Coefficient of `(z - center)^(-1)`.
    pub fn residue(&self) -> T {
        self.coeff(-1)
    }
}

/// Laurent coefficients of a rational function around `center`, exponents
/// `ord_at(f, center) ..= n_max`, by series division after removing the
/// powers of `(z - center)` from numerator and denominator.
pub fn laurent_expand<T: Scalar>(
    f: &RationalFunction<T>,
    center: &T,
    n_max: i64,
) -> Result<LaurentSegment<T>> {
    if f.is_zero() {
        return Err(Error::domain("Laurent expansion of the zero function"));
    }
    let a = f.num().taylor_shift(center);
    let b = f.den().taylor_shift(center);
    let ka = a.low_order().unwrap_or(0);
    let kb = b.low_order().unwrap_or(0);
    let order = ka as i64 - kb as i64;
    if n_max < order {
        return Err(Error::domain(format!(
            "empty window: n_max = {n_max} is below the order {order}"
        )));
    }
    let count = (n_max - order + 1) as usize;
    let a = Polynomial::new(a.coeffs()[ka..].to_vec());
    let b = Polynomial::new(b.coeffs()[kb..].to_vec());
    let b0 = b.coeff(0);
    let mut out: Vec<T> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = a.coeff(k);
        for j in 1..=k.min(b.coeffs().len().saturating_sub(1)) {
            acc = acc - b.coeff(j) * out[k - j].clone();
        }
        out.push(acc / b0.clone());
    }
    Ok(LaurentSegment {
        center: center.clone(),
        n_min: order,
        coeffs: out,
    })
}
