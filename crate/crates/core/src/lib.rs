//! Residue calculus, divisor arithmetic, plane-curve intersection numbers,
//! theta and Weierstrass functions, and harmonic/curvature computations.
//!
//! The crate is organised by subsystem:
//!
//! * [`numeric`]: scalars, polynomials, rational functions, Laurent series, roots.
//! * [`quadrature`]: Gauss–Kronrod, Gauss–Legendre and periodic trapezoid rules.
//! * [`residue`]: contours, residues, argument principle, classical integrals, Γ.
//! * [`divisor`]: divisors on the Riemann sphere, O(m) sections, Riemann–Roch, covers.
//! * [`intersection`]: exact plane-curve multiplicities, Bézout, surface tables.
//! * [`theta`]: Riemann/Jacobi theta, ℘, σ, Eisenstein invariants, periods.
//! * [`harmonic`]: Poisson kernels, explicit Laplace solvers, Gauss–Bonnet.
//!
//! [`selftest`] holds the acceptance table that both the `acceptance` test
//! target and the `rk selftest` command run.

// NaN-rejecting guards are written `!(x > 0.0)` on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod divisor;
pub mod error;
pub mod expr;
pub mod harmonic;
pub mod intersection;
pub mod numeric;
pub mod quadrature;
pub mod residue;
pub mod selftest;
pub mod theta;
pub mod tolerances;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use numeric::{
    poly_roots, ComplexValue, LaurentSegment, Polynomial, Q, RationalFunction, RootCluster, Scalar,
};
pub use quadrature::QuadratureResult;
