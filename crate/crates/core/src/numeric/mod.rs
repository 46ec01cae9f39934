//! Scalars, polynomials, rational functions, Laurent segments, root finding
//! and coefficient-based series tools.

mod laurent;
mod poly;
mod rational;
mod roots;
mod scalar;
mod series;

pub use laurent::{laurent_expand, LaurentSegment};
pub use poly::Polynomial;
pub use rational::{ord_at, ord_at_infinity, order_at, RationalFunction};
pub use roots::{poly_roots, squarefree_decomposition, RootCluster};
pub use scalar::{finite_complex, q, q_frac, q_to_f64, ComplexValue, Scalar, Q};
pub use series::{radius_from_coeffs, taylor_coeffs_numeric};
