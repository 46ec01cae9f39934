//! Poisson extension, explicit Laplace solvers and curvature quadrature.

mod laplace;
mod poisson;
mod surface;

pub use laplace::{laplace_circle, laplace_sphere_l1, laplace_torus, Parity, TorusMode, TorusModes};
pub use poisson::{
    mean_value_check, poisson_extend_adaptive, poisson_extend_quadrature, poisson_extend_trig, poisson_halfplane,
    poisson_kernel_disk, HalfPlaneValue,
};
pub use surface::{
    first_fundamental, gauss_curvature, surface_area, surface_grid, total_curvature, FundamentalForm, GridSample,
    SurfaceSpec,
};

use serde::{Deserialize, Serialize};

/// `a0 + sum_{n>=1} (a_n cos n t + b_n sin n t)`; `cos[0]` is `a_1`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TrigPolynomial {
    pub a0: f64,
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl TrigPolynomial {
    pub fn new(a0: f64, cos: Vec<f64>, sin: Vec<f64>) -> Self {
        TrigPolynomial { a0, cos, sin }
    }

    pub fn mean(&self) -> f64 {
        self.a0
    }

    pub fn degree(&self) -> usize {
        let last = |v: &[f64]| v.iter().rposition(|c| *c != 0.0).map_or(0, |i| i + 1);
        last(&self.cos).max(last(&self.sin))
    }

    pub fn a(&self, n: usize) -> f64 {
        if n == 0 {
            self.a0
        } else {
            self.cos.get(n - 1).copied().unwrap_or(0.0)
        }
    }

    pub fn b(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.sin.get(n - 1).copied().unwrap_or(0.0)
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_scaled(t, 1.0)
    }

    /// Value with mode `n` damped by `r^n`.
    pub(crate) fn eval_scaled(&self, t: f64, r: f64) -> f64 {
        let mut v = self.a0;
        let mut rn = 1.0;
        for n in 1..=self.degree() {
            rn *= r;
            let nt = n as f64 * t;
            v += rn * (self.a(n) * nt.cos() + self.b(n) * nt.sin());
        }
        v
    }

    /// Mode-wise map `(a_n, b_n) -> (k(n) a_n, k(n) b_n)` for `n >= 1`; the mean is kept.
    pub fn map_modes(&self, k: impl Fn(usize) -> f64) -> Self {
        TrigPolynomial {
            a0: self.a0,
            cos: self.cos.iter().enumerate().map(|(i, c)| c * k(i + 1)).collect(),
            sin: self.sin.iter().enumerate().map(|(i, c)| c * k(i + 1)).collect(),
        }
    }

    /// `-u''` by mode multiplication.
    pub fn neg_second_derivative(&self) -> Self {
        let mut out = self.map_modes(|n| (n * n) as f64);
        out.a0 = 0.0;
        out
    }

    /// `\int_0^{2 pi} u^2`.
    pub fn l2_norm_sq(&self) -> f64 {
        let modes: f64 = (1..=self.degree()).map(|n| self.a(n).powi(2) + self.b(n).powi(2)).sum();
        2.0 * std::f64::consts::PI * self.a0 * self.a0 + std::f64::consts::PI * modes
    }

    /// `\int_0^{2 pi} |u'|^2`.
    pub fn dirichlet_energy(&self) -> f64 {
        let modes: f64 = (1..=self.degree())
            .map(|n| (n * n) as f64 * (self.a(n).powi(2) + self.b(n).powi(2)))
            .sum();
        std::f64::consts::PI * modes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trig_accessors() {
        let f = TrigPolynomial::new(1.5, vec![0.0, 2.0], vec![0.0, 0.0, 0.0]);
        assert_eq!(f.mean(), 1.5);
        assert_eq!(f.degree(), 2);
        assert_eq!(f.a(2), 2.0);
        assert_eq!(f.b(7), 0.0);
        assert!((f.eval(0.3) - (1.5 + 2.0 * 0.6f64.cos())).abs() < 1e-15);
    }

    #[test]
    fn energies_match_quadrature() {
        let f = TrigPolynomial::new(0.5, vec![1.0, 0.0, -0.25], vec![0.0, 2.0]);
        let n = 512;
        let h = 2.0 * std::f64::consts::PI / n as f64;
        let sq: f64 = (0..n).map(|j| f.eval(j as f64 * h).powi(2)).sum::<f64>() * h;
        assert!((sq - f.l2_norm_sq()).abs() < 1e-10);
        let d = |t: f64| -(1.0 * t.sin()) + 0.75 * (3.0 * t).sin() + 4.0 * (2.0 * t).cos();
        let e: f64 = (0..n).map(|j| d(j as f64 * h).powi(2)).sum::<f64>() * h;
        assert!((e - f.dirichlet_energy()).abs() < 1e-10);
    }
}
