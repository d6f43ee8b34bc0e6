//! Catenaries of the de Sitter plane S²₁ and the rotational surfaces of S³₁
//! they generate.
//!
//! A curve of S²₁ is a catenary with respect to a reference plane when it is
//! critical for the weighted length `∫ (d + lambda) |g'| dt`, `d` being the
//! distance to the plane. Rotating it about the axis geodesic gives a minimal
//! surface exactly when `lambda = 0`. The modules here evaluate both sides of
//! that statement numerically:
//!
//! * [`lorentz`]: inner products, determinants and cross products of L³, L⁴.
//! * [`curves`]: the chart of S²₁, geodesic curvature, catenary residuals.
//! * [`solver`]: RK4 integration of the catenary ODEs.
//! * [`variational`]: discrete energies and first-variation certificates.
//! * [`surfaces`]: rotation groups, fundamental forms, mean curvature.


// `!(x > tol)` rejects NaN along with small values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curves;
pub mod error;
pub mod lorentz;
pub mod solver;
pub mod spline;
pub mod surfaces;
pub mod variational;

pub use curves::{CaseKind, CurveUV, FrameAtT};
pub use error::{GeometryError, Result};
pub use lorentz::{Causal, LVec3, LVec4};
pub use solver::{CatenaryProblem, CatenaryResult, Termination};
pub use surfaces::{FormsMode, RotationGroup, SurfaceSample};
pub use variational::{DiscreteCurve, Perturbation};
