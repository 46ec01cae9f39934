//! Exact plane-curve intersection numbers and intersection tables of the
//! model surfaces.

mod bezout;
mod local;
mod mpoly;
mod resultant;
mod surface;

pub use bezout::{
    bezout_verify, rational_roots, BezoutPoint, BezoutReport, ConjugateCluster, ProjectivePoint, RationalRootSplit,
};
pub use local::{
    forms_coprime, intersection_multiplicity_at, mult_origin_graph, mult_origin_resultant, multiplicity_point,
    tangent_cone_check, TangentCone,
};
pub use mpoly::{form_degree, BivariatePolynomialQ, MPoly, TernaryForm};
pub use resultant::{bareiss_determinant, resultant_y, sylvester_matrix};
pub use surface::{
    adjunction_genus, canonical_class, intersection_number, surface_chi, ClassVector, SurfaceModel,
};
