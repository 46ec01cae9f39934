use crate::numeric::{Polynomial, Q};

use super::mpoly::BivariatePolynomialQ;

type Px = Polynomial<Q>;

/// Sylvester matrix of two polynomials in `y` with coefficients in `Q[x]`
/// (coefficient lists in ascending powers of `y`).
pub fn sylvester_matrix(f: &[Px], g: &[Px]) -> Vec<Vec<Px>> {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![Px::zero(); size];
            for (k, c) in coeffs.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant over `Q[x]` by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<Px>>) -> Px {
    let n = a.len();
    if n == 0 {
        return Px::one();
    }
    let mut sign = false;
    let mut prev = Px::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Px::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Px::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// `Res_y(f, g)` as a polynomial in `x`.
pub fn resultant_y(f: &BivariatePolynomialQ, g: &BivariatePolynomialQ) -> Px {
    bareiss_determinant(sylvester_matrix(&f.coeffs_in_y(), &g.coeffs_in_y()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn naive_det(m: &[Vec<Px>]) -> Px {
        // cofactor expansion along the first row
        let n = m.len();
        if n == 0 {
            return Px::one();
        }
        let mut acc = Px::zero();
        for j in 0..n {
            let minor: Vec<Vec<Px>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, c)| c.clone()).collect())
                .collect();
            let term = m[0][j].mul(&naive_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn resultant_of_univariate_polynomials_is_product_over_roots() {
        // Res((y-1)(y-2), y-3) = (1-3)(2-3) = 2 (monic, so no leading factors)
        let f = BivariatePolynomialQ::from_int_terms(&[(2, 0, 0), (-3, 0, 1), (1, 0, 2)]);
        let g = BivariatePolynomialQ::from_int_terms(&[(-3, 0, 0), (1, 0, 1)]);
        assert_eq!(resultant_y(&f, &g), Px::constant(q(2)));
    }

    #[test]
    fn bareiss_agrees_with_cofactor_expansion() {
        let f = BivariatePolynomialQ::from_int_terms(&[(1, 0, 3), (-2, 1, 1), (1, 2, 0), (3, 0, 1)]);
        let g = BivariatePolynomialQ::from_int_terms(&[(1, 0, 2), (-1, 3, 0), (5, 1, 1)]);
        let m = sylvester_matrix(&f.coeffs_in_y(), &g.coeffs_in_y());
        assert_eq!(bareiss_determinant(m.clone()), naive_det(&m));
    }

    #[test]
    fn cusp_against_vertical_line() {
        // Res_y(y^2 - x^3, x) = x^2
        let f = BivariatePolynomialQ::from_int_terms(&[(1, 0, 2), (-1, 3, 0)]);
        let g = BivariatePolynomialQ::from_int_terms(&[(1, 1, 0)]);
        assert_eq!(resultant_y(&f, &g), Polynomial::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn common_factor_gives_zero() {
        let h = BivariatePolynomialQ::from_int_terms(&[(1, 0, 1), (-1, 1, 0)]);
        let f = h.mul(&BivariatePolynomialQ::from_int_terms(&[(1, 0, 1), (1, 0, 0)]));
        let g = h.mul(&BivariatePolynomialQ::from_int_terms(&[(1, 2, 0), (1, 0, 1)]));
        assert!(resultant_y(&f, &g).is_zero());
    }
}
