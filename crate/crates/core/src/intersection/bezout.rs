use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{poly_roots, squarefree_decomposition, Polynomial, Q};

use super::local::{forms_coprime, intersection_multiplicity_at};
use super::mpoly::{form_degree, BivariatePolynomialQ, TernaryForm};
use super::resultant::resultant_y;

/// A point of the projective plane with rational coordinates, scaled so the
/// last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint(pub [Q; 3]);

impl ProjectivePoint {
    pub fn new(mut c: [Q; 3]) -> Result<Self> {
        let Some(k) = (0..3).rev().find(|&i| !c[i].is_zero()) else {
            return Err(Error::domain("[0:0:0] is not a projective point"));
        };
        let s = c[k].clone();
        for v in c.iter_mut() {
            *v = v.clone() / s.clone();
        }
        Ok(ProjectivePoint(c))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BezoutPoint {
    pub point: ProjectivePoint,
    pub multiplicity: u32,
}

/// Intersections whose coordinates are not rational, counted together.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugateCluster {
    /// Description of the points in the working chart.
    pub locus: String,
    pub total_order: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct BezoutReport {
    pub points: Vec<BezoutPoint>,
    pub clusters: Vec<ConjugateCluster>,
    pub total: u32,
    pub expected: u32,
    /// Coordinate change `P = M P'` used for the computation.
    pub transform: [[i64; 3]; 3],
}

fn candidate_transforms() -> Vec<[[i64; 3]; 3]> {
    let mut out = Vec::new();
    for r in 0..=3i64 {
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    if a.abs().max(b.abs()).max(c.abs()) == r {
                        out.push([[1, c, 0], [0, 1, 0], [a, b, 1]]);
                    }
                }
            }
        }
    }
    out
}

fn restrict_to_line_at_infinity(f: &TernaryForm) -> BivariatePolynomialQ {
    BivariatePolynomialQ::from_terms(f.terms().filter(|(e, _)| e[2] == 0).map(|(e, c)| ([e[0], e[1]], c.clone())))
}

/// Verify Bézout's theorem for two projective plane curves.
///
/// After an integer coordinate change chosen so that `[0:1:0]` lies on
/// neither curve and no intersection lies on `Z = 0`, the resultant
/// `Res_y` of the affine equations has degree `deg F * deg G` and its roots
/// are the `x`-coordinates of the intersections. Rational intersection
/// points are listed with their local multiplicities (computed by the
/// resultant method after translation); the rest of the resultant is
/// reported as conjugate clusters with summed order.
pub fn bezout_verify(f: &TernaryForm, g: &TernaryForm) -> Result<BezoutReport> {
    let (df, dg) = (form_degree(f)?, form_degree(g)?);
    let expected = df * dg;
    for m in candidate_transforms() {
        let (ft, gt) = (f.linear_substitution(&m), g.linear_substitution(&m));
        if ft.coeff([0, df, 0]).is_zero() || gt.coeff([0, dg, 0]).is_zero() {
            continue;
        }
        let (fa, ga) = (ft.dehomogenize(2), gt.dehomogenize(2));
        let r = resultant_y(&fa, &ga);
        if r.is_zero() {
            return Err(Error::CommonComponent);
        }
        if !forms_coprime(&restrict_to_line_at_infinity(&ft), &restrict_to_line_at_infinity(&gt)) {
            continue;
        }
        return finish(&fa, &ga, &r, m, expected);
    }
    Err(Error::Unsupported("no small integer coordinate change puts the curves in general position".into()))
}

fn finish(
    fa: &BivariatePolynomialQ,
    ga: &BivariatePolynomialQ,
    r: &Polynomial<Q>,
    m: [[i64; 3]; 3],
    expected: u32,
) -> Result<BezoutReport> {
    if r.degree() != Some(expected as usize) {
        return Err(Error::Consistency(format!(
            "resultant degree {:?} differs from deg F * deg G = {expected}",
            r.degree()
        )));
    }
    let map_back = |a: &Q, b: &Q| {
        let v = [a.clone(), b.clone(), Q::one()];
        let img = [0, 1, 2].map(|i| (0..3).fold(Q::zero(), |acc, j| acc + Q::from_integer(m[i][j].into()) * v[j].clone()));
        ProjectivePoint::new(img)
    };
    let mut points = Vec::new();
    let mut clusters = Vec::new();
    let (rational, rest) = rational_roots(r)?;
    for (a, order) in rational {
        let h = fa.at_x(&a).gcd(&ga.at_x(&a));
        let (ys, _) = rational_roots(&h)?;
        let mut found = 0;
        for (b, _) in ys {
            let mult = intersection_multiplicity_at(fa, ga, &a, &b)?;
            found += mult;
            points.push(BezoutPoint { point: map_back(&a, &b)?, multiplicity: mult });
        }
        if found > order as u32 {
            return Err(Error::Consistency(format!("local multiplicities over x = {a} exceed the resultant order")));
        }
        if found < order as u32 {
            clusters.push(ConjugateCluster {
                locus: format!("x = {a}, y irrational"),
                total_order: order as u32 - found,
            });
        }
    }
    for (factor, mult) in rest {
        clusters.push(ConjugateCluster {
            locus: format!("roots of {factor}"),
            total_order: (factor.degree().unwrap() * mult) as u32,
        });
    }
    let total = points.iter().map(|p| p.multiplicity).sum::<u32>() + clusters.iter().map(|c| c.total_order).sum::<u32>();
    if total != expected {
        return Err(Error::Consistency(format!("intersection total {total} differs from {expected}")));
    }
    Ok(BezoutReport { points, clusters, total, expected, transform: m })
}

/// `(rational roots with multiplicity, remaining squarefree pieces with multiplicity)`.
pub type RationalRootSplit = (Vec<(Q, usize)>, Vec<(Polynomial<Q>, usize)>);

/// Rational roots with multiplicity, and the squarefree pieces (with their
/// multiplicities) that have no rational roots left.
pub fn rational_roots(p: &Polynomial<Q>) -> Result<RationalRootSplit> {
    let mut found = Vec::new();
    let mut rest = Vec::new();
    for (mut factor, mult) in squarefree_decomposition(p) {
        let approx = poly_roots(&factor.to_complex())?;
        for c in approx {
            if c.root.im.abs() > 1e-6 * (1.0 + c.root.re.abs()) {
                continue;
            }
            if let Some(a) = convergents(c.root.re, 1_000_000_000)
                .into_iter()
                .find(|a| factor.eval(a).is_zero())
            {
                factor = factor.div_exact(&Polynomial::linear_root(a.clone()))?;
                found.push((a, mult));
            }
        }
        if factor.degree().unwrap_or(0) > 0 {
            rest.push((factor, mult));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((found, rest))
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<Q> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut t = x;
    for _ in 0..64 {
        let a = t.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2.abs() > BigInt::from(max_den) {
            break;
        }
        out.push(Q::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = t - a;
        if frac.abs() < 1e-15 {
            break;
        }
        t = 1.0 / frac;
    }
    out
}
