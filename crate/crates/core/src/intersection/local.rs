use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{q, Polynomial, Q};

use super::mpoly::BivariatePolynomialQ;
use super::resultant::resultant_y;

/// `m_0(C)`: the lowest total degree of a monomial of `f`.
pub fn multiplicity_point(f: &BivariatePolynomialQ) -> Result<u32> {
    f.min_degree().ok_or_else(|| Error::domain("multiplicity of the zero polynomial"))
}

/// `I_0(C, C') = ord_{x=0} f(x, h(x))` for `C'` the graph `y = h(x)`.
pub fn mult_origin_graph(f: &BivariatePolynomialQ, h: &Polynomial<Q>) -> Result<u32> {
    if !h.coeff(0).is_zero() {
        return Err(Error::Precondition("graph must pass through the origin: h(0) = 0".into()));
    }
    let s = f.substitute_y(h);
    match s.low_order() {
        None => Err(Error::CommonComponent),
        Some(k) => Ok(k as u32),
    }
}

fn content(f: &BivariatePolynomialQ) -> Polynomial<Q> {
    f.coeffs_in_y().iter().fold(Polynomial::zero(), |acc, c| acc.gcd(c))
}

fn is_power_of_y(p: &Polynomial<Q>) -> bool {
    matches!(p.degree(), Some(d) if (0..d).all(|k| p.coeff(k).is_zero()))
}

/// `I_0(f, g) = ord_{x=0} Res_y(f, g)`.
///
/// Requires that the origin is the only common zero on the line `x = 0` and
/// that at least one curve has no branch escaping to `y = infinity` over
/// `x = 0`; otherwise a precondition error asks for a coordinate change.
pub fn mult_origin_resultant(f: &BivariatePolynomialQ, g: &BivariatePolynomialQ) -> Result<u32> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("intersection with the zero polynomial"));
    }
    if content(f).gcd(&content(g)).degree() != Some(0) {
        return Err(Error::CommonComponent);
    }
    let zero = Q::zero();
    let (f0, g0) = (f.at_x(&zero), g.at_x(&zero));
    let lc_nonzero = |p: &BivariatePolynomialQ| {
        let cy = p.coeffs_in_y();
        !cy.last().map(|c| c.coeff(0)).unwrap_or_else(Q::zero).is_zero()
    };
    if !lc_nonzero(f) && !lc_nonzero(g) {
        return Err(Error::Precondition(
            "both curves have a branch at infinity over x = 0; shear the coordinates first".into(),
        ));
    }
    if !is_power_of_y(&f0.gcd(&g0)) {
        return Err(Error::Precondition(
            "another common zero lies on the line x = 0; shift or shear the coordinates first".into(),
        ));
    }
    let r = resultant_y(f, g);
    match r.low_order() {
        None => Err(Error::CommonComponent),
        Some(k) => Ok(k as u32),
    }
}

/// Local intersection number at `(a, b)`: translate to the origin and try
/// the shears `x -> x + c y`, `c = 0, 1, -1, 2, ...`, until the resultant
/// method's preconditions hold.
pub fn intersection_multiplicity_at(
    f: &BivariatePolynomialQ,
    g: &BivariatePolynomialQ,
    a: &Q,
    b: &Q,
) -> Result<u32> {
    let (ft, gt) = (f.translate(a, b), g.translate(a, b));
    let mut last = None;
    for c in [0i64, 1, -1, 2, -2, 3, -3, 5, -5, 7] {
        let (fs, gs) = (ft.shear(&q(c)), gt.shear(&q(c)));
        match mult_origin_resultant(&fs, &gs) {
            Err(e @ Error::Precondition(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.unwrap())
}

/// Homogeneous forms in `x, y` are coprime iff they share no linear factor.
pub fn forms_coprime(a: &BivariatePolynomialQ, b: &BivariatePolynomialQ) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let one = Q::from_integer(1.into());
    // linear factors x - t y  <->  roots of F(x, 1); the factor y  <->  missing x^d term
    let (pa, pb) = (a.at_y(&one), b.at_y(&one));
    let y_divides = |p: &BivariatePolynomialQ| {
        let d = p.total_degree().unwrap();
        d > 0 && p.coeff([d, 0]).is_zero()
    };
    pa.gcd(&pb).degree() == Some(0) && !(y_divides(a) && y_divides(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCone {
    pub bound: u32,
    pub multiplicity: u32,
    pub equality: bool,
}

/// `I_0 >= m_0(f) m_0(g)`, with equality exactly when the initial forms are coprime.
pub fn tangent_cone_check(f: &BivariatePolynomialQ, g: &BivariatePolynomialQ) -> Result<TangentCone> {
    let (mf, mg) = (multiplicity_point(f)?, multiplicity_point(g)?);
    let multiplicity = mult_origin_resultant(f, g)?;
    let bound = mf * mg;
    let equality = forms_coprime(&f.homogeneous_part(mf), &g.homogeneous_part(mg));
    if multiplicity < bound || equality != (multiplicity == bound) {
        return Err(Error::Consistency(format!(
            "tangent-cone bound violated: I = {multiplicity}, m m' = {bound}, coprime cones = {equality}"
        )));
    }
    Ok(TangentCone { bound, multiplicity, equality })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> BivariatePolynomialQ {
        BivariatePolynomialQ::from_int_terms(terms)
    }

    #[test]
    fn point_multiplicities() {
        assert_eq!(multiplicity_point(&p(&[(1, 0, 2), (-1, 3, 0)])).unwrap(), 2);
        assert_eq!(multiplicity_point(&p(&[(1, 0, 1), (-1, 2, 0)])).unwrap(), 1);
        assert_eq!(multiplicity_point(&p(&[(1, 2, 3)])).unwrap(), 5);
        assert!(multiplicity_point(&BivariatePolynomialQ::zero()).is_err());
    }

    #[test]
    fn graph_method() {
        let cusp = p(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(mult_origin_graph(&cusp, &Polynomial::zero()).unwrap(), 3);
        let parabola = p(&[(1, 0, 1), (-1, 2, 0)]);
        assert_eq!(mult_origin_graph(&parabola, &Polynomial::from_ints(&[0, 0, 0, 1])).unwrap(), 2);
        for m in 1..8u32 {
            let f = p(&[(1, 0, 1), (-1, m, 0)]);
            assert_eq!(mult_origin_graph(&f, &Polynomial::zero()).unwrap(), m);
        }
        // y - x^2 contains the graph y = x^2
        assert!(matches!(
            mult_origin_graph(&parabola, &Polynomial::from_ints(&[0, 0, 1])),
            Err(Error::CommonComponent)
        ));
    }

    #[test]
    fn resultant_method() {
        let (x, y) = (p(&[(1, 1, 0)]), p(&[(1, 0, 1)]));
        assert_eq!(mult_origin_resultant(&y, &x).unwrap(), 1);
        assert_eq!(mult_origin_resultant(&p(&[(1, 0, 1), (-1, 2, 0)]), &y).unwrap(), 2);
        assert_eq!(mult_origin_resultant(&p(&[(1, 0, 2), (-1, 2, 0), (-1, 3, 0)]), &y).unwrap(), 2);
    }

    #[test]
    fn resultant_preconditions() {
        let y = p(&[(1, 0, 1)]);
        // x(y - 1) and x: common component x
        let f = p(&[(1, 1, 1), (-1, 1, 0)]);
        assert!(matches!(mult_origin_resultant(&f, &p(&[(1, 1, 0)])), Err(Error::CommonComponent)));
        // y(y - 1) and x meet at (0, 0) and (0, 1)
        let g = p(&[(1, 0, 2), (-1, 0, 1)]);
        assert!(matches!(mult_origin_resultant(&g, &p(&[(1, 1, 0)])), Err(Error::Precondition(_))));
        // shear-free route through intersection_multiplicity_at still resolves it
        assert_eq!(intersection_multiplicity_at(&g, &p(&[(1, 1, 0)]), &q(0), &q(0)).unwrap(), 1);
        assert_eq!(mult_origin_resultant(&y, &y.add(&p(&[(1, 2, 0)]))).unwrap(), 2);
    }

    #[test]
    fn tangent_cones() {
        let (x, y) = (p(&[(1, 1, 0)]), p(&[(1, 0, 1)]));
        let t = tangent_cone_check(&p(&[(1, 0, 1), (-1, 2, 0)]), &y).unwrap();
        assert_eq!(t, TangentCone { bound: 1, multiplicity: 2, equality: false });
        assert_eq!(tangent_cone_check(&y, &x).unwrap(), TangentCone { bound: 1, multiplicity: 1, equality: true });
        let t = tangent_cone_check(&p(&[(1, 0, 2), (-1, 3, 0)]), &x).unwrap();
        assert_eq!(t, TangentCone { bound: 2, multiplicity: 2, equality: true });
    }

    #[test]
    fn translated_point() {
        // circle x^2 + y^2 = 2 and line x = y meet transversally at (1, 1)
        let circle = p(&[(1, 2, 0), (1, 0, 2), (-2, 0, 0)]);
        let diag = p(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(intersection_multiplicity_at(&circle, &diag, &q(1), &q(1)).unwrap(), 1);
        // tangent line y = 1 at (0, 1) of x^2 + y^2 = 1
        let unit = p(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]);
        let tangent = p(&[(1, 0, 1), (-1, 0, 0)]);
        assert_eq!(intersection_multiplicity_at(&unit, &tangent, &q(0), &q(1)).unwrap(), 2);
    }
}
