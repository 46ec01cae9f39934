use num_complex::Complex64;
use serde::Serialize;

use super::{principal_divisor, Divisor, P1Point};
use crate::error::{Error, Result};
use crate::numeric::{ord_at_infinity, poly_roots, Polynomial, RationalFunction, Scalar};

/// `h^0(CP^1, O(m))` and the exponents `k` of the monomial basis `Z0^(m-k) Z1^k`.
pub fn h0_om(m: i64) -> (usize, Vec<u32>) {
    if m < 0 {
        (0, Vec::new())
    } else {
        ((m + 1) as usize, (0..=m as u32).collect())
    }
}

/// Divisor of the section of O(m) whose affine representative is `s0`:
/// the zeros of `s0` plus `(m - deg s0)` times the point at infinity.
pub fn section_divisor_om<T: Scalar>(m: i64, s0: &Polynomial<T>) -> Result<Divisor> {
    let d = s0
        .degree()
        .ok_or_else(|| Error::domain("the zero section has no divisor"))? as i64;
    if d > m {
        return Err(Error::domain(format!("deg s0 = {d} exceeds m = {m}")));
    }
    let mut div = Divisor::new();
    if d > 0 {
        for r in poly_roots(s0)? {
            div.add_point(P1Point::Finite(r.root), r.multiplicity as i64);
        }
    }
    div.add_point(P1Point::Infinity, m - d);
    Ok(div)
}

/// `l(D)` on the sphere with an explicit basis of `L(D)`.
///
/// `D` is moved to `deg(D) [inf]` by the function `h = prod (z - p_i)^{n_i}`
/// over the finite entries, since `D - (h) = deg(D) [inf]`; the basis is then
/// `z^k / h` for `k = 0..=deg D`. Every basis element is checked to satisfy
/// `(f) + D >= 0`.
pub fn ell_p1(d: &Divisor) -> Result<(usize, Vec<RationalFunction<Complex64>>)> {
    let n = d.degree();
    if n < 0 {
        return Ok((0, Vec::new()));
    }
    let mut zeros = Polynomial::<Complex64>::one();
    let mut poles = Polynomial::<Complex64>::one();
    for e in d.entries() {
        if let P1Point::Finite(p) = e.point {
            let factor = Polynomial::linear_root(p).pow(e.coeff.unsigned_abs() as u32);
            if e.coeff > 0 {
                zeros = zeros.mul(&factor);
            } else {
                poles = poles.mul(&factor);
            }
        }
    }
    let mut basis = Vec::with_capacity(n as usize + 1);
    for k in 0..=n as usize {
        // z^k / h = z^k * poles / zeros
        let f = RationalFunction::new(
            Polynomial::monomial(k, Complex64::new(1.0, 0.0)).mul(&poles),
            zeros.clone(),
        )?;
        let check = principal_divisor(&f)?.add(d);
        if !check.is_effective() {
            return Err(Error::Consistency(format!("basis element {k} violates (f) + D >= 0: {check}")));
        }
        basis.push(f);
    }
    Ok((basis.len(), basis))
}

/// Riemann–Roch on a curve of genus `g`: `l(D) - l(K - D) = 1 - g + deg D`.
pub fn rr_verify(g: i64, deg_d: i64, ell_d: i64, ell_kd: i64) -> Result<bool> {
    if g < 0 {
        return Err(Error::domain("genus must be nonnegative"));
    }
    Ok(ell_d - ell_kd == 1 - g + deg_d)
}

/// `l(D) = deg D` on a genus-one curve, valid for `deg D > 0`.
pub fn ell_elliptic(deg_d: i64) -> Result<i64> {
    if deg_d <= 0 {
        return Err(Error::domain(
            "only deg D > 0 is covered; degree-0 classes need a principality test",
        ));
    }
    Ok(deg_d)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FtaReport {
    pub degree: usize,
    pub root_count: usize,
    pub pole_order_at_infinity: i64,
    pub holds: bool,
}

/// Counts zeros three ways: coefficient degree, root multiplicities, and the pole order at infinity.
pub fn fta_verify<T: Scalar>(p: &Polynomial<T>) -> Result<FtaReport> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::domain("need deg p >= 1")),
    };
    let root_count = poly_roots(p)?.iter().map(|r| r.multiplicity).sum();
    let pole_order_at_infinity = -ord_at_infinity(&RationalFunction::polynomial(p.clone()))?;
    Ok(FtaReport {
        degree,
        root_count,
        pole_order_at_infinity,
        holds: root_count == degree && pole_order_at_infinity == degree as i64,
    })
}
