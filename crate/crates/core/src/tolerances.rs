//! Named numerical thresholds shared by the engines and the acceptance table.

/// Roots closer than `ROOT_CLUSTER * (1 + |root|)` are the same root.
pub const ROOT_CLUSTER: f64 = 1e-8;

/// Common roots of numerator and denominator (float coefficients) closer than this cancel.
pub const COMMON_ROOT: f64 = 1e-10;

/// Absolute-plus-relative tolerance for identifying points of the sphere built from floats.
pub const POINT_EQ: f64 = 1e-9;

/// A pole closer than `ON_CONTOUR * radius` to a circle counts as lying on it.
pub const ON_CONTOUR: f64 = 1e-9;

/// Closed-loop endpoint matching for composite contours.
pub const LOOP_CLOSURE: f64 = 1e-12;

/// Raw winding values must be this close to an integer.
pub const WINDING_INTEGER: f64 = 1e-3;

/// Default integration tolerance for contour quadrature.
pub const CONTOUR_TOL: f64 = 1e-11;

/// Default global tolerance (overridable from the CLI via `RK_DEFAULT_TOL`).
pub const DEFAULT_TOL: f64 = 1e-8;

/// Agreement between closed form and quadrature for the classical integrals.
pub const CLASSICAL: f64 = 1e-6;

/// The oscillatory Dirichlet integral only has to reach this.
pub const DIRICHLET: f64 = 1e-3;

/// Cauchy–Green area integral agreement.
pub const CAUCHY_GREEN: f64 = 1e-3;

/// Smallest lattice truncation accepted by the ℘ and Eisenstein sums.
pub const MIN_LATTICE_TRUNCATION: usize = 20;

/// Per-axis cap for theta box summation.
pub const THETA_MAX_BOX: i64 = 10_000;
