use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::poly::Polynomial;
use super::scalar::{Scalar, Q};
use crate::error::{Error, Result};
use crate::tolerances;

const MAX_ITERATIONS: usize = 800;

/// A distinct root and how many times it occurs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootCluster {
    pub root: Complex64,
    pub multiplicity: usize,
}

/// All roots of `p` with multiplicities summing to `deg p`.
///
/// Exact polynomials are first split into squarefree parts, so every
/// numerical solve works on simple roots.
pub fn poly_roots<T: Scalar>(p: &Polynomial<T>) -> Result<Vec<RootCluster>> {
    match p.degree() {
        None | Some(0) => Err(Error::domain("root finding needs degree >= 1")),
        Some(_) => T::roots(p),
    }
}

/// Yun's squarefree decomposition: `p = lc * prod_i a_i^i`, returned as `(a_i, i)`.
pub fn squarefree_decomposition(p: &Polynomial<Q>) -> Vec<(Polynomial<Q>, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.div_exact(&a).expect("gcd divides");
    let mut c = dp.div_exact(&a).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

pub(crate) fn exact_roots(p: &Polynomial<Q>) -> Result<Vec<RootCluster>> {
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(p) {
        for r in float_roots(&factor.to_complex())? {
            out.push(RootCluster {
                root: r.root,
                multiplicity: r.multiplicity * mult,
            });
        }
    }
    Ok(out)
}

pub(crate) fn float_roots(p: &Polynomial<Complex64>) -> Result<Vec<RootCluster>> {
    let approx = aberth(p)?;
    Ok(cluster(p, approx))
}

fn backward_bound(p: &Polynomial<Complex64>, z: Complex64) -> f64 {
    let az = z.norm();
    p.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * az + c.norm())
}

/// Aberth–Ehrlich simultaneous iteration.
fn aberth(p: &Polynomial<Complex64>) -> Result<Vec<Complex64>> {
    let n = p.degree().unwrap_or(0);
    let coeffs = p.coeffs();
    // Roots at the origin are stripped off so the initial circle is well scaled.
    let zeros_at_origin = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = Polynomial::new(coeffs[zeros_at_origin..].to_vec());
    let m = n - zeros_at_origin;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
    if m == 0 {
        return Ok(roots);
    }
    let lead = reduced.leading().copied().unwrap();
    let c0 = reduced.coeff(0);
    // geometric mean of root moduli as the starting radius
    let radius = (c0.norm() / lead.norm()).powf(1.0 / m as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / m as f64 + 0.4))
        .collect();
    let mut converged = vec![false; m];
    let eps = f64::EPSILON;
    for _ in 0..MAX_ITERATIONS {
        let mut all = true;
        for i in 0..m {
            if converged[i] {
                continue;
            }
            let (pv, dpv) = reduced.eval_with_derivative(z[i]);
            if pv.norm() <= 16.0 * eps * backward_bound(&reduced, z[i]) {
                converged[i] = true;
                continue;
            }
            all = false;
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                if step.norm() <= eps * z[i].norm().max(eps) {
                    converged[i] = true;
                }
            } else {
                let bump = Complex64::new(1e-3, 1e-3) * (1.0 + z[i].norm());
                z[i] += bump;
            }
        }
        if all {
            roots.extend(z);
            return Ok(roots);
        }
    }
    // Accept iterates whose residual is small even if not at rounding level
    // (multiple roots converge linearly).
    let ok = z
        .iter()
        .all(|&zi| reduced.eval(&zi).norm() <= 1e-6 * backward_bound(&reduced, zi));
    roots.extend(z);
    if ok {
        Ok(roots)
    } else {
        Err(Error::RootsNotConverged {
            iterations: MAX_ITERATIONS,
            best: roots,
        })
    }
}

/// Merge approximations of the same root.
///
/// Two estimates merge when they are within the cluster radius, or when
/// they are within a looser radius and the candidate centroid annihilates
/// the derivatives up to the group size (a numerically multiple root).
fn cluster(p: &Polynomial<Complex64>, approx: Vec<Complex64>) -> Vec<RootCluster> {
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for z in approx {
        let hit = groups.iter_mut().find(|g| {
            let c = centroid(g);
            (c - z).norm() <= tolerances::ROOT_CLUSTER * (1.0 + c.norm())
        });
        match hit {
            Some(g) => g.push(z),
            None => groups.push(vec![z]),
        }
    }
    // second pass: merge groups lying within the perturbation radius of a
    // candidate multiple root, validated by the vanishing derivatives there.
    // An m-fold root moves by about (eps * B / |p^(m)(c) / m!|)^(1/m) under
    // rounding of size eps * B, so high multiplicities need wider radii.
    let mut merged = true;
    while merged {
        merged = false;
        'outer: for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                let (ci, cj) = (centroid(&groups[i]), centroid(&groups[j]));
                let mut union = groups[i].clone();
                union.extend(groups[j].iter().copied());
                let m = union.len();
                let c = refine_multiple(p, centroid(&union), m);
                let sm = p.taylor_shift(&c).coeff(m).norm();
                let spread = 4.0 * (16.0 * f64::EPSILON * backward_bound(p, c) / sm).powf(1.0 / m as f64);
                let radius = (1e-4 * (1.0 + c.norm())).max(spread);
                if (ci - c).norm() <= radius && (cj - c).norm() <= radius && is_multiple_root(p, c, m) {
                    groups[i] = union;
                    groups.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
    }
    groups
        .into_iter()
        .map(|g| RootCluster {
            root: refine_multiple(p, centroid(&g), g.len()),
            multiplicity: g.len(),
        })
        .collect()
}

/// A root of multiplicity `k` is a simple root of `p^(k-1)`; a few Newton
/// steps there recover the accuracy the centroid loses (`~eps^(1/k)`).
fn refine_multiple(p: &Polynomial<Complex64>, z0: Complex64, k: usize) -> Complex64 {
    if k < 2 {
        return z0;
    }
    let mut d = p.clone();
    for _ in 1..k {
        d = d.derivative();
    }
    let mut z = z0;
    for _ in 0..30 {
        let (v, dv) = d.eval_with_derivative(z);
        let step = v / dv;
        if !step.is_finite() || step.norm() > 1e-2 * (1.0 + z0.norm()) {
            return z;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn centroid(g: &[Complex64]) -> Complex64 {
    g.iter().sum::<Complex64>() / g.len() as f64
}

fn is_multiple_root(p: &Polynomial<Complex64>, c: Complex64, m: usize) -> bool {
    let shifted = p.taylor_shift(&c);
    let scale = shifted.norm1();
    (0..m).all(|k| shifted.coeff(k).norm() <= 1e-7 * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<RootCluster>) -> Vec<RootCluster> {
        v.sort_by(|a, b| {
            (a.root.re, a.root.im)
                .partial_cmp(&(b.root.re, b.root.im))
                .unwrap()
        });
        v
    }

    #[test]
    fn fivefold_float_root_is_one_cluster() {
        let p = Polynomial::<Complex64>::linear_root(Complex64::new(3.0, 0.0)).pow(5);
        let r = poly_roots(&p).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 5);
        assert!((r[0].root - 3.0).norm() < 1e-10);
    }

    #[test]
    fn z_squared_plus_one() {
        let r = sorted(poly_roots(&Polynomial::from_reals(&[1.0, 0.0, 1.0])).unwrap());
        assert_eq!(r.len(), 2);
        assert!((r[0].root - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1].root - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!(r.iter().all(|c| c.multiplicity == 1));
    }

    #[test]
    fn z_cubed_minus_z() {
        let r = sorted(poly_roots(&Polynomial::from_ints(&[0, -1, 0, 1])).unwrap());
        let re: Vec<f64> = r.iter().map(|c| c.root.re).collect();
        assert!((re[0] + 1.0).abs() < 1e-12 && re[1].abs() < 1e-12 && (re[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rouche_quartic_roots_inside_radius_two() {
        let p = Polynomial::from_reals(&[1.0, 4.0, 0.0, 0.0, 1.0]);
        let r = poly_roots(&p).unwrap();
        assert_eq!(r.iter().map(|c| c.multiplicity).sum::<usize>(), 4);
        for c in &r {
            assert!(c.root.norm() < 2.0);
            assert!(p.eval(&c.root).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_multiplicities_from_squarefree_split() {
        // z^2 (z-1)^3 (z+2)
        let p = Polynomial::from_ints(&[0, 0, 1])
            .mul(&Polynomial::from_ints(&[-1, 1]).pow(3))
            .mul(&Polynomial::from_ints(&[2, 1]));
        let r = sorted(poly_roots(&p).unwrap());
        let mults: Vec<usize> = r.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn float_double_root_is_clustered() {
        // (z - 0.5)^2 (z + 1)
        let p = Polynomial::from_reals(&[0.25, -0.75, 0.0, 1.0]);
        let r = sorted(poly_roots(&p).unwrap());
        assert_eq!(r.len(), 2);
        assert_eq!(r[1].multiplicity, 2);
        assert!((r[1].root.re - 0.5).abs() < 1e-7);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(poly_roots(&Polynomial::from_reals(&[3.0])).is_err());
    }
}
