use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;

/// Parametrised surfaces in coordinates `(theta, phi)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceSpec {
    /// `(sin phi cos theta, sin phi sin theta, cos phi)`, `phi in [0, pi]`.
    UnitSphere,
    /// `((R + r cos phi) cos theta, (R + r cos phi) sin theta, r sin phi)`.
    #[serde(rename_all = "snake_case")]
    Torus { big_r: f64, small_r: f64 },
}

impl SurfaceSpec {
    pub fn torus(big_r: f64, small_r: f64) -> Result<Self> {
        let s = SurfaceSpec::Torus { big_r, small_r };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SurfaceSpec::UnitSphere => Ok(()),
            SurfaceSpec::Torus { big_r, small_r } => {
                if small_r > 0.0 && big_r > small_r && big_r.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain(format!("torus needs R > r > 0, got R = {big_r}, r = {small_r}")))
                }
            }
        }
    }

    /// Parameter range of `phi`.
    pub fn phi_range(&self) -> (f64, f64) {
        match self {
            SurfaceSpec::UnitSphere => (0.0, PI),
            SurfaceSpec::Torus { .. } => (0.0, 2.0 * PI),
        }
    }

    /// Euler characteristic, for the Gauss–Bonnet comparison.
    pub fn euler_characteristic(&self) -> i32 {
        match self {
            SurfaceSpec::UnitSphere => 2,
            SurfaceSpec::Torus { .. } => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FundamentalForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// `sqrt(EG - F^2)`.
    pub density: f64,
}

pub fn first_fundamental(s: &SurfaceSpec, _theta: f64, phi: f64) -> FundamentalForm {
    match *s {
        SurfaceSpec::UnitSphere => {
            let sp = phi.sin();
            FundamentalForm { e: sp * sp, f: 0.0, g: 1.0, density: sp.abs() }
        }
        SurfaceSpec::Torus { big_r, small_r } => {
            let w = big_r + small_r * phi.cos();
            FundamentalForm { e: w * w, f: 0.0, g: small_r * small_r, density: small_r * w }
        }
    }
}

pub fn gauss_curvature(s: &SurfaceSpec, _theta: f64, phi: f64) -> f64 {
    match *s {
        SurfaceSpec::UnitSphere => 1.0,
        SurfaceSpec::Torus { big_r, small_r } => phi.cos() / (small_r * (big_r + small_r * phi.cos())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSample {
    pub u: f64,
    pub v: f64,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "dA")]
    pub da: f64,
    /// Quadrature weight of this node.
    #[serde(skip)]
    pub weight: f64,
}

/// Tensor-product nodes: periodic trapezoid in `theta`; in `phi`, Gauss–Legendre on the
/// sphere and trapezoid on the (periodic) torus.
pub fn surface_grid(s: &SurfaceSpec, grid: usize) -> Result<Vec<GridSample>> {
    s.validate()?;
    if grid < 16 {
        return Err(Error::domain("grid must be at least 16"));
    }
    let h = 2.0 * PI / grid as f64;
    let (lo, hi) = s.phi_range();
    let phis: Vec<(f64, f64)> = match s {
        SurfaceSpec::UnitSphere => {
            let (x, w) = gauss_legendre(grid);
            let half = 0.5 * (hi - lo);
            x.iter().zip(&w).map(|(xi, wi)| (lo + half * (xi + 1.0), half * wi)).collect()
        }
        SurfaceSpec::Torus { .. } => (0..grid).map(|j| (j as f64 * h, h)).collect(),
    };
    let mut out = Vec::with_capacity(grid * phis.len());
    for i in 0..grid {
        let theta = i as f64 * h;
        for &(phi, w) in &phis {
            out.push(GridSample {
                u: theta,
                v: phi,
                k: gauss_curvature(s, theta, phi),
                da: first_fundamental(s, theta, phi).density,
                weight: h * w,
            });
        }
    }
    Ok(out)
}

/// `\iint K dA`.
pub fn total_curvature(s: &SurfaceSpec, grid: usize) -> Result<f64> {
    Ok(surface_grid(s, grid)?.iter().map(|p| p.weight * p.k * p.da).sum())
}

/// `\iint dA`.
pub fn surface_area(s: &SurfaceSpec, grid: usize) -> Result<f64> {
    Ok(surface_grid(s, grid)?.iter().map(|p| p.weight * p.da).sum())
}
