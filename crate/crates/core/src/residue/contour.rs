use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{self, QuadratureResult};
use crate::tolerances;

/// Half-width of the angular gap that separates the two edges of a keyhole,
/// so a branch cut along the slit sees them on opposite sides.
const KEYHOLE_GAP: f64 = 1e-10;

const MAX_CIRCLE_NODES: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Counterclockwise => 1.0,
            Orientation::Clockwise => -1.0,
        }
    }
}

/// Integration paths in the plane.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Contour {
    Circle {
        center: Complex64,
        radius: f64,
        orientation: Orientation,
    },
    Segment {
        a: Complex64,
        b: Complex64,
    },
    Polyline(Vec<Complex64>),
    Composite(Vec<Contour>),
    /// Keyhole around the slit `{ t e^{i angle} : t >= 0 }`, traversed counterclockwise on the outer circle.
    Keyhole {
        inner: f64,
        outer: f64,
        angle: f64,
    },
}

impl Contour {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self> {
        Self::oriented_circle(center, radius, Orientation::Counterclockwise)
    }

    pub fn oriented_circle(center: Complex64, radius: f64, orientation: Orientation) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::domain("circle radius must be positive"));
        }
        Ok(Contour::Circle { center, radius, orientation })
    }

    pub fn keyhole(inner: f64, outer: f64, angle: f64) -> Result<Self> {
        if !(0.0 < inner && inner < outer) {
            return Err(Error::domain("keyhole needs 0 < inner < outer"));
        }
        Ok(Contour::Keyhole { inner, outer, angle })
    }

    /// Closed polygon through the vertices (the first vertex is repeated at the end).
    pub fn polygon(vertices: &[Complex64]) -> Self {
        let mut v = vertices.to_vec();
        if let Some(&first) = vertices.first() {
            v.push(first);
        }
        Contour::Polyline(v)
    }

    pub fn start(&self) -> Option<Complex64> {
        match self {
            Contour::Circle { center, radius, .. } => Some(center + radius),
            Contour::Segment { a, .. } => Some(*a),
            Contour::Polyline(v) => v.first().copied(),
            Contour::Composite(parts) => parts.first().and_then(Contour::start),
            Contour::Keyhole { outer, angle, .. } => Some(Complex64::from_polar(*outer, angle + KEYHOLE_GAP)),
        }
    }

    pub fn end(&self) -> Option<Complex64> {
        match self {
            Contour::Circle { .. } | Contour::Keyhole { .. } => self.start(),
            Contour::Segment { b, .. } => Some(*b),
            Contour::Polyline(v) => v.last().copied(),
            Contour::Composite(parts) => parts.last().and_then(Contour::end),
        }
    }

    fn scale(&self) -> f64 {
        match self {
            Contour::Circle { center, radius, .. } => center.norm() + radius,
            Contour::Segment { a, b } => a.norm().max(b.norm()),
            Contour::Polyline(v) => v.iter().map(|z| z.norm()).fold(0.0, f64::max),
            Contour::Composite(p) => p.iter().map(Contour::scale).fold(0.0, f64::max),
            Contour::Keyhole { outer, .. } => *outer,
        }
        .max(1.0)
    }

    /// Closed loop: every piece starts where the previous one ended and the last returns to the first.
    pub fn is_closed(&self) -> bool {
        let tol = tolerances::LOOP_CLOSURE * self.scale();
        let near = |a: Option<Complex64>, b: Option<Complex64>| match (a, b) {
            (Some(a), Some(b)) => (a - b).norm() <= tol,
            _ => false,
        };
        match self {
            Contour::Circle { .. } | Contour::Keyhole { .. } => true,
            Contour::Segment { .. } => false,
            Contour::Polyline(v) => v.len() >= 3 && near(self.start(), self.end()),
            Contour::Composite(parts) => {
                !parts.is_empty()
                    && parts.windows(2).all(|w| near(w[0].end(), w[1].start()))
                    && near(self.end(), self.start())
            }
        }
    }

    fn piece_count(&self) -> usize {
        match self {
            Contour::Polyline(v) => v.len().saturating_sub(1).max(1),
            Contour::Composite(p) => p.iter().map(Contour::piece_count).sum::<usize>().max(1),
            Contour::Keyhole { .. } => 4,
            _ => 1,
        }
    }
}

/// `integral_c f(z) dz`.
///
/// Full circles use the periodic trapezoid rule with node doubling; every
/// other piece uses adaptive Gauss–Kronrod in the path parameter.
pub fn contour_integral<F>(f: F, c: &Contour, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> Complex64,
{
    integrate_piece(&f, c, tol / c.piece_count() as f64)
}

fn integrate_piece<F>(f: &F, c: &Contour, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> Complex64,
{
    match c {
        Contour::Circle { center, radius, orientation } => {
            let s = orientation.sign();
            quadrature::periodic_trapezoid(
                |t| {
                    let e = Complex64::from_polar(1.0, s * t);
                    f(center + e * *radius) * (Complex64::new(0.0, s) * e * *radius)
                },
                tol,
                MAX_CIRCLE_NODES,
            )
        }
        Contour::Segment { a, b } => segment(f, *a, *b, tol),
        Contour::Polyline(v) => v
            .windows(2)
            .try_fold(QuadratureResult::zero(), |acc, w| Ok(acc.combine(segment(f, w[0], w[1], tol)?))),
        Contour::Composite(parts) => parts
            .iter()
            .try_fold(QuadratureResult::zero(), |acc, p| Ok(acc.combine(integrate_piece(f, p, tol)?))),
        Contour::Keyhole { inner, outer, angle } => {
            let lo = angle + KEYHOLE_GAP;
            let hi = angle + 2.0 * PI - KEYHOLE_GAP;
            let outer_arc = arc(f, *outer, lo, hi, tol)?;
            let inward = segment(f, Complex64::from_polar(*outer, hi), Complex64::from_polar(*inner, hi), tol)?;
            let inner_arc = arc(f, *inner, hi, lo, tol)?;
            let outward = segment(f, Complex64::from_polar(*inner, lo), Complex64::from_polar(*outer, lo), tol)?;
            Ok(outer_arc.combine(inward).combine(inner_arc).combine(outward))
        }
    }
}

fn segment<F: Fn(Complex64) -> Complex64>(f: &F, a: Complex64, b: Complex64, tol: f64) -> Result<QuadratureResult> {
    let d = b - a;
    quadrature::integrate(|t| f(a + d * t) * d, 0.0, 1.0, tol)
}

/// Arc of the circle `|z| = r` from angle `t0` to `t1`.
fn arc<F: Fn(Complex64) -> Complex64>(f: &F, r: f64, t0: f64, t1: f64, tol: f64) -> Result<QuadratureResult> {
    quadrature::integrate(
        |t| {
            let e = Complex64::from_polar(r, t);
            f(e) * Complex64::new(0.0, 1.0) * e
        },
        t0,
        t1,
        tol,
    )
}
