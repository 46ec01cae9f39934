use proptest::prelude::*;
use rk_core::intersection::{
    canonical_class, intersection_number, mult_origin_graph, mult_origin_resultant, multiplicity_point, surface_chi,
    tangent_cone_check, BivariatePolynomialQ, SurfaceModel,
};
use rk_core::numeric::{Polynomial, Q};
use rk_core::Error;

/// Polynomials through the origin with small integer coefficients.
fn curve() -> impl Strategy<Value = BivariatePolynomialQ> {
    prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=3), 1..=4).prop_map(|terms| {
        let terms: Vec<(i64, u32, u32)> = terms.into_iter().filter(|&(_, i, j)| i + j > 0).collect();
        BivariatePolynomialQ::from_int_terms(&terms)
    })
}

fn graph() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..=4).prop_map(|mut v| {
        v.insert(0, 0);
        v
    })
}

fn graph_curve(h: &[i64]) -> BivariatePolynomialQ {
    let hx = BivariatePolynomialQ::from_x_poly(&Polynomial::<Q>::from_ints(h));
    BivariatePolynomialQ::y().sub(&hx)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn graph_and_resultant_agree(f in curve(), h in graph()) {
        prop_assume!(!f.is_zero());
        let g = graph_curve(&h);
        match (mult_origin_graph(&f, &Polynomial::from_ints(&h)), mult_origin_resultant(&f, &g)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(Error::CommonComponent), _) | (_, Err(Error::CommonComponent)) => {}
            (_, Err(Error::Precondition(_))) => {}
            (a, b) => prop_assert!(false, "graph {:?} resultant {:?}", a, b),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_method_is_symmetric(f in curve(), g in curve()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        if let (Ok(a), Ok(b)) = (mult_origin_resultant(&f, &g), mult_origin_resultant(&g, &f)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn tangent_cone_bound(f in curve(), g in curve()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        if let Ok(i) = mult_origin_resultant(&f, &g) {
            let bound = multiplicity_point(&f).unwrap() * multiplicity_point(&g).unwrap();
            prop_assert!(i >= bound);
            let cone = tangent_cone_check(&f, &g).unwrap();
            prop_assert_eq!(cone.equality, i == bound);
        }
    }
}

#[test]
fn worked_pairs_agree() {
    type Case<'a> = (&'a [(i64, u32, u32)], &'a [i64], u32);
    let cases: [Case; 5] = [
        (&[(1, 1, 0)], &[0], 1),
        (&[(1, 0, 1), (-1, 2, 0)], &[0], 2),
        (&[(1, 0, 2), (-1, 3, 0)], &[0], 3),
        (&[(1, 0, 1), (-1, 2, 0)], &[0, 0, 0, 1], 2),
        (&[(1, 0, 2), (-1, 2, 0), (-1, 3, 0)], &[0], 2),
    ];
    for (f, h, want) in cases {
        let f = BivariatePolynomialQ::from_int_terms(f);
        assert_eq!(mult_origin_graph(&f, &Polynomial::from_ints(h)).unwrap(), want);
        assert_eq!(mult_origin_resultant(&f, &graph_curve(h)).unwrap(), want);
    }
}

#[test]
fn chi_is_always_integral() {
    let models = [SurfaceModel::P2, SurfaceModel::P1xP1, SurfaceModel::Hirzebruch(3), SurfaceModel::BlowupP2];
    for m in models {
        let k = canonical_class(m);
        let dims = m.basis().len();
        for a in -10..=10i64 {
            for b in -10..=10i64 {
                let d: Vec<i64> = [a, b][..dims].to_vec();
                let twice = intersection_number(m, &d, &d).unwrap() - intersection_number(m, &d, &k).unwrap();
                assert_eq!(twice % 2, 0, "{m:?} {d:?}");
                assert!(surface_chi(m, &d).is_ok());
            }
        }
    }
}

#[test]
fn chi_on_the_plane_counts_monomials() {
    for d in 0..=5i64 {
        let monomials = (0..=d).map(|i| d - i + 1).sum::<i64>();
        assert_eq!(surface_chi(SurfaceModel::P2, &[d]).unwrap(), monomials);
    }
}
