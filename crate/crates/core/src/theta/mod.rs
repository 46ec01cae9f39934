//! Riemann and Jacobi theta functions, Weierstrass functions from lattice
//! sums and from `theta_1`, Eisenstein invariants, and real-cubic periods.

mod jacobi;
mod lattice;
mod periods;
mod riemann;
mod series;
mod weierstrass;

pub use jacobi::{jacobi_theta, quasi_period_residual, theta_jet, TauValue, ThetaCharacteristic, ThetaJet};
pub use lattice::{
    eisenstein, lattice_points, wp_lattice, wp_prime_lattice, EllipticInvariants, PeriodPair,
};
pub use periods::periods_real_cubic;
pub use riemann::{riemann_theta, RiemannPeriodMatrix, ThetaValue};
pub use weierstrass::{
    elliptic_invariants, eta1_ratio, ode_residual, parallelogram_residue_sum, sigma, wp_prime, wp_via_theta,
};
