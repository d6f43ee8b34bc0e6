use thiserror::Error;

use crate::curves::CaseKind;

/// Failures raised by the geometric evaluators and the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate curve at t = {t}: <g', g'> = {speed2:e} is within the lightlike tolerance")]
    DegenerateCurve { t: f64, speed2: f64 },

    #[error("point (u, v) = ({u}, {v}) is outside the positive half-space of the {case} case (predicate = {predicate:e})")]
    OutOfHalfSpace {
        case: CaseKind,
        u: f64,
        v: f64,
        predicate: f64,
    },

    #[error("singular denominator: |d + lambda| = {value:e}")]
    SingularDenominator { value: f64 },

    #[error("degenerate surface at (t, s) = ({t}, {s}): EG - F^2 = {det:e}")]
    DegenerateSurface { t: f64, s: f64, det: f64 },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
