use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::TrigPolynomial;

/// Solve `-u'' = f` on the circle with mean-zero `u`.
pub fn laplace_circle(f: &TrigPolynomial) -> Result<TrigPolynomial> {
    if f.a0 != 0.0 {
        return Err(Error::Precondition(format!(
            "compatibility: right-hand side has mean {} but must integrate to zero",
            f.a0
        )));
    }
    Ok(f.map_modes(|n| 1.0 / (n * n) as f64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

impl Parity {
    fn eval(self, k: u32, t: f64) -> f64 {
        let a = 2.0 * PI * k as f64 * t;
        match self {
            Parity::Cos => a.cos(),
            Parity::Sin => a.sin(),
        }
    }

    /// `\int_0^1 (basis)^2`.
    fn norm_sq(self, k: u32) -> f64 {
        if k == 0 {
            1.0
        } else {
            0.5
        }
    }
}

/// Basis function `p(2 pi m x) q(2 pi n y)` on the unit square torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorusMode {
    pub m: u32,
    pub n: u32,
    pub px: Parity,
    pub py: Parity,
}

impl TorusMode {
    pub fn new(m: u32, n: u32, px: Parity, py: Parity) -> Result<Self> {
        if (m == 0 && px == Parity::Sin) || (n == 0 && py == Parity::Sin) {
            return Err(Error::domain("sin of a zero frequency vanishes identically"));
        }
        Ok(TorusMode { m, n, px, py })
    }

    pub fn eigenvalue(&self) -> f64 {
        4.0 * PI * PI * ((self.m * self.m + self.n * self.n) as f64)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.px.eval(self.m, x) * self.py.eval(self.n, y)
    }

    pub fn norm_sq(&self) -> f64 {
        self.px.norm_sq(self.m) * self.py.norm_sq(self.n)
    }

    fn is_constant(&self) -> bool {
        self.m == 0 && self.n == 0
    }
}

/// Finite expansion in the orthogonal basis of [`TorusMode`]s.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TorusModes(pub BTreeMap<TorusMode, f64>);

impl TorusModes {
    pub fn single(mode: TorusMode, c: f64) -> Self {
        TorusModes(BTreeMap::from([(mode, c)]))
    }

    pub fn coefficient(&self, mode: &TorusMode) -> f64 {
        self.0.get(mode).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.0.iter().map(|(m, c)| c * m.eval(x, y)).sum()
    }

    /// `-Δ` by mode multiplication.
    pub fn neg_laplacian(&self) -> Self {
        TorusModes(self.0.iter().map(|(m, c)| (*m, c * m.eigenvalue())).collect())
    }

    /// `\int_{T^2} |∇u|^2`.
    pub fn dirichlet_energy(&self) -> f64 {
        self.0.iter().map(|(m, c)| c * c * m.eigenvalue() * m.norm_sq()).sum()
    }

    pub fn l2_norm_sq(&self) -> f64 {
        self.0.iter().map(|(m, c)| c * c * m.norm_sq()).sum()
    }
}

/// Solve `-Δu = f` on `R^2 / Z^2` with mean-zero `u`.
pub fn laplace_torus(f: &TorusModes) -> Result<TorusModes> {
    let mut out = BTreeMap::new();
    for (mode, c) in &f.0 {
        if mode.is_constant() {
            if *c != 0.0 {
                return Err(Error::Precondition(format!(
                    "compatibility: right-hand side has mean {c} but must integrate to zero"
                )));
            }
            continue;
        }
        out.insert(*mode, c / mode.eigenvalue());
    }
    Ok(TorusModes(out))
}

/// Coefficient of the height function `z` in the mean-zero solution of `Δu = c z` on `S^2`,
/// with `Δz = 2z`.
pub fn laplace_sphere_l1(c: f64) -> f64 {
    c / 2.0
}
