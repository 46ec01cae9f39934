use proptest::prelude::*;
use rk_core::divisor::{
    ell_p1, genus_double_cover, principal_divisor, rr_verify, section_divisor_om, Divisor, DoubleCoverSpec, P1Point,
};
use rk_core::numeric::{q, Polynomial, RationalFunction, Q};

fn poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|mut v| {
        if *v.last().unwrap() == 0 {
            *v.last_mut().unwrap() = 2;
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn principal_divisors_have_degree_zero(n in poly(4), d in poly(4)) {
        let f = RationalFunction::new(Polynomial::from_ints(&n), Polynomial::from_ints(&d)).unwrap();
        prop_assume!(!f.is_zero());
        prop_assert_eq!(principal_divisor(&f).unwrap().degree(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sections_of_o_m_have_degree_m(s in poly(6), extra in 0i64..=3) {
        let p = Polynomial::<Q>::from_ints(&s);
        let m = (s.len() as i64 - 1 + extra).min(6).max(s.len() as i64 - 1);
        prop_assert_eq!(section_divisor_om(m, &p).unwrap().degree(), m);
    }

    #[test]
    fn riemann_roch_basis_is_valid(pts in prop::collection::vec((-3i32..=3, -3i64..=3), 0..=4), at_inf in -2i64..=4) {
        let mut d = Divisor::point(P1Point::Infinity, at_inf);
        for (x, k) in pts {
            d.add_point(P1Point::real(x as f64), k);
        }
        let (dim, basis) = ell_p1(&d).unwrap();
        prop_assert_eq!(dim as i64, (d.degree() + 1).max(0));
        for f in basis {
            prop_assert!(principal_divisor(&f).unwrap().add(&d).is_effective());
        }
    }
}

#[test]
fn riemann_roch_closes_on_the_sphere() {
    for n in -4..=6i64 {
        assert!(rr_verify(0, n, (n + 1).max(0), (-n - 1).max(0)).unwrap());
    }
}

#[test]
fn double_cover_genus_is_ceil_half_degree_minus_one() {
    for d in 1..=10i64 {
        let roots: Vec<Q> = (0..d).map(|k| q(2 * k - 5)).collect();
        let spec = DoubleCoverSpec::new(Polynomial::from_roots(&roots)).unwrap();
        assert_eq!(genus_double_cover(&spec).unwrap(), (d + 1) / 2 - 1, "degree {d}");
    }
}
