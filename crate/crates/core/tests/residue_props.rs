use num_complex::Complex64;
use proptest::prelude::*;
use rk_core::numeric::{Polynomial, RationalFunction};
use rk_core::residue::{
    contour_integral, count_polynomial_zeros, gamma, integrate_by_residues, winding_number, Contour,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn root_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn residue_sum_matches_quadrature(
        poles in root_strategy(),
        numer in prop::collection::vec(-3i64..=3, 1..=3),
        cx in -1.0f64..1.0,
        cy in -1.0f64..1.0,
        radius in 0.5f64..4.0,
    ) {
        let centre = c(cx, cy);
        // poles at (a + bi)/2; skip circles that pass too close to one
        let pts: Vec<Complex64> = poles.iter().map(|&(a, b)| c(a as f64 / 2.0, b as f64 / 2.0)).collect();
        prop_assume!(pts.iter().all(|p| ((p - centre).norm() - radius).abs() > 0.05));
        let den = Polynomial::from_roots(&pts);
        let num = Polynomial::from_reals(&numer.iter().map(|&v| v as f64).collect::<Vec<_>>());
        prop_assume!(!num.is_zero());
        let f = RationalFunction::new(num, den).unwrap();
        let circle = Contour::circle(centre, radius).unwrap();
        let by_res = integrate_by_residues(&f, &circle).unwrap();
        let quad = contour_integral(f.complex_fn(), &circle, 1e-10).unwrap();
        let scale = 1.0 + by_res.value.norm();
        prop_assert!((by_res.value - quad.value).norm() <= quad.error_estimate + 1e-7 * scale);
    }

    #[test]
    fn winding_is_additive_over_composites(r in 0.0f64..0.8, t in 0.0f64..std::f64::consts::TAU, k in 1usize..=3) {
        let p = Complex64::from_polar(r, t);
        let loops: Vec<Contour> = (0..k).map(|_| Contour::circle(c(0.0, 0.0), 1.0).unwrap()).collect();
        let parts: i64 = loops.iter().map(|l| winding_number(l, p).unwrap()).sum();
        let whole = winding_number(&Contour::Composite(loops), p).unwrap();
        prop_assert_eq!(whole, parts);
        prop_assert_eq!(whole, k as i64);
    }

    #[test]
    fn all_zeros_lie_inside_the_cauchy_radius(coeffs in prop::collection::vec(-5i64..=5, 2..=7)) {
        let mut coeffs = coeffs;
        if *coeffs.last().unwrap() == 0 {
            *coeffs.last_mut().unwrap() = 1;
        }
        let p = Polynomial::from_reals(&coeffs.iter().map(|&v| v as f64).collect::<Vec<_>>());
        let lead = coeffs.last().unwrap().abs() as f64;
        let bound = 1.0 + coeffs.iter().map(|&v| v.abs() as f64 / lead).fold(0.0, f64::max);
        let n = count_polynomial_zeros(&p, &Contour::circle(c(0.0, 0.0), bound + 0.5).unwrap()).unwrap();
        prop_assert_eq!(n, (coeffs.len() - 1) as i64);
    }

    #[test]
    fn gamma_reflection(x in 0.01f64..0.99, y in -1.0f64..1.0) {
        let s = c(x, y);
        let v = gamma(s).unwrap() * gamma(1.0 - s).unwrap() * (s * std::f64::consts::PI).sin() / std::f64::consts::PI;
        prop_assert!((v - 1.0).norm() <= 1e-8);
    }
}

#[test]
fn gamma_duplication() {
    for s in [0.3, 0.75, 1.2] {
        let s = c(s, 0.0);
        let lhs = gamma(s).unwrap() * gamma(s + 0.5).unwrap();
        let rhs = c(2.0, 0.0).powc(1.0 - 2.0 * s) * std::f64::consts::PI.sqrt() * gamma(2.0 * s).unwrap();
        assert!((lhs - rhs).norm() <= 1e-7 * rhs.norm());
    }
}
