use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements of Q(sqrt({left})) and Q(sqrt({right})) cannot be mixed")]
    FieldMismatch { left: String, right: String },

    #[error("sqrt({0}) is not supported: radicand must be a square-free integer > 1")]
    InvalidRadicand(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("the zero vector is not a projective point")]
    ZeroVector,

    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),

    #[error("conic is nonsingular")]
    NonsingularConic,

    #[error("conic vanishes identically")]
    ZeroConic,

    #[error("catalecticant order {0} is not supported for ternary cubics")]
    UnsupportedK(usize),

    #[error("the zero form has no rank")]
    ZeroForm,

    #[error("form is not homogeneous of degree {0}")]
    WrongDegree(usize),

    #[error("{0}")]
    UnsupportedAlgebraicDegree(String),

    #[error("line meets the Hessian in fewer than three distinct representable points: {0}")]
    IndistinctIntersection(String),

    #[error("polar conic vanishes identically (cubic is a cone)")]
    ConeDetected,

    #[error("inconsistent De Paolis system: {0}")]
    InconsistentSystem(String),

    #[error("not of the form a(x^3+y^3+z^3)+b*xyz")]
    NotHesseForm,

    #[error("decomposition does not expand to its target form")]
    ExpansionMismatch,

    #[error("catalog record {id}: clause {clause} failed: {detail}")]
    VerificationFailed {
        id: String,
        clause: char,
        detail: String,
    },

    #[error("no catalog record with id {0}")]
    UnknownRecord(String),
}
