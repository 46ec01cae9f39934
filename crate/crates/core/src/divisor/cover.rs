use num_traits::Zero;

use super::P1Point;
use crate::error::{Error, Result};
use crate::numeric::{poly_roots, Polynomial, Q};

/// The curve `y^2 = f(x)` viewed as a two-sheeted cover of the x-sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleCoverSpec {
    f: Polynomial<Q>,
}

impl DoubleCoverSpec {
    pub fn new(f: Polynomial<Q>) -> Result<Self> {
        if f.degree().unwrap_or(0) < 1 {
            return Err(Error::domain("y^2 = f(x) needs deg f >= 1"));
        }
        if f.gcd(&f.derivative()).degree() != Some(0) {
            return Err(Error::domain("f is not squarefree"));
        }
        Ok(DoubleCoverSpec { f })
    }

    pub fn f(&self) -> &Polynomial<Q> {
        &self.f
    }
}

/// Roots of `f`, plus infinity exactly when `deg f` is odd.
pub fn branch_values(spec: &DoubleCoverSpec) -> Result<Vec<P1Point>> {
    let mut out: Vec<P1Point> = poly_roots(&spec.f)?
        .into_iter()
        .map(|r| {
            if r.multiplicity != 1 {
                Err(Error::domain("repeated root in f"))
            } else {
                Ok(P1Point::Finite(r.root))
            }
        })
        .collect::<Result<_>>()?;
    if spec.f.degree().unwrap() % 2 == 1 {
        out.push(P1Point::Infinity);
    }
    Ok(out)
}

/// Riemann–Hurwitz for a double cover with `B` simple branch values: `g = (B - 2) / 2`.
pub fn genus_double_cover(spec: &DoubleCoverSpec) -> Result<i64> {
    let b = branch_values(spec)?.len() as i64;
    if b % 2 != 0 {
        return Err(Error::Consistency(format!("odd number of branch values ({b})")));
    }
    Ok((b - 2) / 2)
}

/// Ramification index `n / gcd(n, m)` of `y^n = prod (x - a_j)^{m_j}` over `a_j`.
pub fn kummer_ram_index(n: u64, m: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let r = m.rem_euclid(n as i64) as u64;
    let g = if r.is_zero() { n } else { num_integer::gcd(n, r) };
    Ok(n / g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(c: &[i64]) -> DoubleCoverSpec {
        DoubleCoverSpec::new(Polynomial::from_ints(c)).unwrap()
    }

    fn has(points: &[P1Point], p: P1Point) -> bool {
        points.iter().any(|q| q.approx_eq(&p))
    }

    #[test]
    fn square_root_cover() {
        let s = spec(&[0, 1]);
        let b = branch_values(&s).unwrap();
        assert_eq!(b.len(), 2);
        assert!(has(&b, P1Point::real(0.0)) && has(&b, P1Point::Infinity));
        assert_eq!(genus_double_cover(&s).unwrap(), 0);
    }

    #[test]
    fn cubic_covers_are_tori() {
        let s = spec(&[0, 2, -3, 1]); // x(x-1)(x-2)
        let b = branch_values(&s).unwrap();
        for p in [0.0, 1.0, 2.0] {
            assert!(has(&b, P1Point::real(p)));
        }
        assert!(has(&b, P1Point::Infinity));
        assert_eq!(genus_double_cover(&s).unwrap(), 1);
        assert_eq!(genus_double_cover(&spec(&[0, -1, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn even_degree_has_no_branching_at_infinity() {
        let s = spec(&[-1, 0, 0, 0, 1]); // x^4 - 1
        assert!(!has(&branch_values(&s).unwrap(), P1Point::Infinity));
        assert_eq!(genus_double_cover(&s).unwrap(), 1);
    }

    #[test]
    fn repeated_root_rejected() {
        assert!(DoubleCoverSpec::new(Polynomial::from_ints(&[0, 0, 1])).is_err());
    }

    #[test]
    fn kummer_indices() {
        assert_eq!(kummer_ram_index(6, 4).unwrap(), 3);
        assert_eq!(kummer_ram_index(2, 1).unwrap(), 2);
        assert_eq!(kummer_ram_index(5, 5).unwrap(), 1);
        assert_eq!(kummer_ram_index(6, -4).unwrap(), 3);
        assert!(kummer_ram_index(0, 1).is_err());
    }
}
