//! Error type shared by every module of the crate.

use thiserror::Error;

/// Coarse classification used by callers (notably the CLI) to pick exit codes:
/// input problems versus failures discovered during computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input document, fan data or class coefficients are unusable.
    Validation,
    /// The input was accepted but a computation could not produce a result.
    Computation,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive normalization")]
    ZeroVector,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cone refers to invalid ray index {index} (fan has {rays} rays)")]
    InvalidCone { index: usize, rays: usize },
    #[error("ray {index} is not primitive")]
    RayNotPrimitive { index: usize },
    #[error("rays {first} and {second} are identical")]
    DuplicateRay { first: usize, second: usize },
    #[error("vector lies outside the support of the fan")]
    OutsideSupport,
    #[error("fan is not complete: facet {0} does not lie in exactly two maximal cones")]
    NotComplete(String),
    #[error("fan must be smooth and complete for this computation")]
    NotSmoothComplete,
    #[error("class coefficient kappa[{index}] is negative; pass --normalize or normalize_kappa first")]
    NegativeKappa { index: usize },
    #[error("no point of the lattice dual makes every coefficient nonnegative (empty momentum polytope)")]
    NotRepresentable,
    #[error("no nonzero nonnegative relation exists among the rays")]
    NoRelation,
    #[error("cone expression has non-integer coefficients; input fan is not smooth")]
    NotSmoothCone,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("the zero relation carries no curve")]
    ZeroRelation,
    #[error("relation has a negative entry at index {index}")]
    RelationNotNonneg { index: usize },
    #[error("relation does not balance: ray-weighted sum is nonzero in coordinate {coordinate}")]
    UnbalancedRelation { coordinate: usize },
    #[error("marker parameters must be pairwise distinct (duplicate value {value})")]
    DuplicateMarker { value: String },
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("width direction must be nonzero")]
    ZeroDirection,
    #[error("curve degree list is empty")]
    NoCurves,
    #[error("curve degree must be positive, got {value}")]
    InvalidDegree { value: String },
    #[error("class is not ample")]
    NotAmple,
    #[error("document has no kappa coefficients but the computation needs them")]
    MissingKappa,
    #[error("malformed number {value:?}: {reason}")]
    BadNumber { value: String, reason: String },
    #[error("document parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ZeroVector
            | Error::ShapeMismatch(_)
            | Error::InvalidCone { .. }
            | Error::RayNotPrimitive { .. }
            | Error::DuplicateRay { .. }
            | Error::NotSmoothComplete
            | Error::NegativeKappa { .. }
            | Error::MissingKappa
            | Error::BadNumber { .. }
            | Error::Parse(_) => ErrorKind::Validation,
            Error::OutsideSupport
            | Error::NotComplete(_)
            | Error::NotRepresentable
            | Error::NoRelation
            | Error::NotSmoothCone
            | Error::InternalContradiction(_)
            | Error::ZeroRelation
            | Error::RelationNotNonneg { .. }
            | Error::UnbalancedRelation { .. }
            | Error::DuplicateMarker { .. }
            | Error::EmptyPolytope
            | Error::Unbounded
            | Error::ZeroDirection
            | Error::NoCurves
            | Error::InvalidDegree { .. }
            | Error::NotAmple => ErrorKind::Computation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
