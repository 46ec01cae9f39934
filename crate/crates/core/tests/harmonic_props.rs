use std::f64::consts::PI;

use proptest::prelude::*;
use rk_core::harmonic::{
    laplace_circle, laplace_torus, poisson_extend_quadrature, poisson_extend_trig, poisson_kernel_disk,
    total_curvature, Parity, SurfaceSpec, TorusMode, TorusModes, TrigPolynomial,
};

#[test]
fn kernel_is_positive_and_normalised() {
    for r in [0.0, 0.1, 0.5, 0.8, 0.95] {
        for nodes in [64, 256, 1024] {
            let h = 2.0 * PI / nodes as f64;
            let mut total = 0.0;
            for j in 0..nodes {
                let v = poisson_kernel_disk(r, j as f64 * h).unwrap();
                assert!(v > 0.0);
                total += v;
            }
            // trapezoid error decays like r^nodes
            if r.powi(nodes) < 1e-14 {
                assert!((total / nodes as f64 - 1.0).abs() <= 1e-10, "r={r} nodes={nodes}");
            }
        }
    }
}

fn trig(max: usize) -> impl Strategy<Value = TrigPolynomial> {
    (
        -2.0f64..2.0,
        prop::collection::vec(-1.0f64..1.0, 0..=max),
        prop::collection::vec(-1.0f64..1.0, 0..=max),
    )
        .prop_map(|(a0, c, s)| TrigPolynomial::new(a0, c, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fourier_and_quadrature_agree(f in trig(8), r in 0.0f64..0.9, th in -PI..PI) {
        let closed = poisson_extend_trig(&f, r, th).unwrap();
        let g = f.clone();
        let quad = poisson_extend_quadrature(move |p| g.eval(p), r, th, 512).unwrap();
        prop_assert!((closed - quad).abs() <= 1e-8);
    }

    #[test]
    fn circle_solver_inverts_the_operator(mut f in trig(8)) {
        f.a0 = 0.0;
        let u = laplace_circle(&f).unwrap();
        let back = u.neg_second_derivative();
        for n in 1..=8 {
            prop_assert!((back.a(n) - f.a(n)).abs() <= 1e-15 * (1.0 + f.a(n).abs()));
            prop_assert!((back.b(n) - f.b(n)).abs() <= 1e-15 * (1.0 + f.b(n).abs()));
        }
        prop_assert_eq!(u.mean(), 0.0);
    }

    #[test]
    fn torus_solver_inverts_the_operator(
        modes in prop::collection::vec((0u32..4, 0u32..4, any::<bool>(), any::<bool>(), -1.0f64..1.0), 1..6)
    ) {
        let mut f = TorusModes::default();
        for (m, n, sx, sy, c) in modes {
            let px = if sx && m > 0 { Parity::Sin } else { Parity::Cos };
            let py = if sy && n > 0 { Parity::Sin } else { Parity::Cos };
            if m + n > 0 {
                f.0.insert(TorusMode::new(m, n, px, py).unwrap(), c);
            }
        }
        let back = laplace_torus(&f).unwrap().neg_laplacian();
        for (mode, c) in &f.0 {
            prop_assert!((back.coefficient(mode) - c).abs() <= 1e-14 * (1.0 + c.abs()));
        }
    }
}

#[test]
fn sphere_refinement_converges_to_the_floor() {
    let err = |g: usize| (total_curvature(&SurfaceSpec::UnitSphere, g).unwrap() - 4.0 * PI).abs();
    let mut g = 16;
    while g <= 256 {
        let (e0, e1) = (err(g), err(2 * g));
        assert!(e1 <= 1e-10 || e1 * 4.0 <= e0, "grid {g}: {e0:.2e} -> {e1:.2e}");
        g *= 2;
    }
}
