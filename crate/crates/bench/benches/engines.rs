use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use rk_core::expr::{parse_bivariate, parse_polynomial_complex, parse_rational_q};
use rk_core::intersection::{mult_origin_resultant, resultant_y};
use rk_core::residue::{count_polynomial_zeros, integrate_by_residues, Contour};
use rk_core::theta::{eisenstein, jacobi_theta, riemann_theta, wp_lattice, PeriodPair, RiemannPeriodMatrix, TauValue};

fn theta(c: &mut Criterion) {
    let tau = TauValue::new(Complex64::new(0.1, 1.0)).unwrap();
    let z = Complex64::new(0.3, 0.2);
    c.bench_function("jacobi_theta3", |b| b.iter(|| jacobi_theta(3, black_box(z), tau, 1e-12).unwrap()));

    let mut g = c.benchmark_group("riemann_theta");
    for genus in 1..=3usize {
        let mut om = vec![vec![Complex64::new(0.0, 0.0); genus]; genus];
        for (i, row) in om.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = if i == j { Complex64::new(0.0, 1.0) } else { Complex64::new(0.1, 0.05) };
            }
        }
        let om = RiemannPeriodMatrix::new(om).unwrap();
        let zs = vec![Complex64::new(0.1, 0.05); genus];
        g.bench_with_input(BenchmarkId::from_parameter(genus), &genus, |b, _| {
            b.iter(|| riemann_theta(black_box(&zs), &om, 1e-10).unwrap())
        });
    }
    g.finish();
}

fn lattice_sums(c: &mut Criterion) {
    let l = PeriodPair::square();
    let z = Complex64::new(0.3, 0.1);
    let mut g = c.benchmark_group("lattice");
    for n in [20usize, 50, 200] {
        g.bench_with_input(BenchmarkId::new("wp", n), &n, |b, &n| b.iter(|| wp_lattice(black_box(z), &l, n).unwrap()));
        g.bench_with_input(BenchmarkId::new("eisenstein", n), &n, |b, &n| b.iter(|| eisenstein(&l, n).unwrap()));
    }
    g.finish();
}

fn resultant(c: &mut Criterion) {
    let pairs = [("y^2-x^3", "y"), ("y-x^2", "y-x^3"), ("y^2-x^2-x^3", "y^3-x^5+x^2y")];
    let mut g = c.benchmark_group("resultant");
    for (f, h) in pairs {
        let (fp, hp) = (parse_bivariate(f).unwrap(), parse_bivariate(h).unwrap());
        g.bench_function(format!("res_y({f}, {h})"), |b| b.iter(|| resultant_y(black_box(&fp), &hp)));
        g.bench_function(format!("mult({f}, {h})"), |b| b.iter(|| mult_origin_resultant(black_box(&fp), &hp)));
    }
    g.finish();
}

fn contour(c: &mut Criterion) {
    let f = parse_rational_q("1/(z^2(z-2)^4)").unwrap();
    let circle = Contour::circle(Complex64::new(2.0, 0.0), 1.0).unwrap();
    c.bench_function("residue_theorem_and_quadrature", |b| {
        b.iter(|| integrate_by_residues(black_box(&f), &circle).unwrap())
    });
    let p = parse_polynomial_complex("z^7-8z+1").unwrap();
    let unit = Contour::circle(Complex64::new(0.0, 0.0), 1.0).unwrap();
    c.bench_function("argument_principle_deg7", |b| b.iter(|| count_polynomial_zeros(black_box(&p), &unit).unwrap()));
}

criterion_group!(benches, theta, lattice_sums, resultant, contour);
criterion_main!(benches);
