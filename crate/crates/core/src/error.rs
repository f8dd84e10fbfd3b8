use thiserror::Error;

use crate::complex::VertexId;

/// Errors raised while building or querying a complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("no cells given")]
    EmptyInput,

    #[error("a cube cell needs a power-of-two number of corners, got {0}")]
    CornerCount(usize),

    #[error("vertex {vertex} appears twice in cell {cell:?}")]
    DuplicateVertexInCell {
        cell: Vec<VertexId>,
        vertex: VertexId,
    },

    #[error("faces {first:?} and {second:?} intersect in {intersection:?}, which is not a face")]
    IntersectionNotAFace {
        first: Vec<VertexId>,
        second: Vec<VertexId>,
        intersection: Vec<VertexId>,
    },

    #[error("vertex set {face:?} is claimed by incompatible cube structures ({reason})")]
    InconsistentSharedFace { face: Vec<VertexId>, reason: String },

    #[error("complex is not pure")]
    NotPure,

    #[error("operation needs dimension at least {needed}, complex has dimension {actual}")]
    DimensionTooSmall { needed: i64, actual: i64 },

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("{0:?} is not a face")]
    UnknownFace(Vec<VertexId>),

    #[error("antipodal pairs need a face of dimension at least 1")]
    ZeroDimensionalFace,
}

/// Errors from the enumerative transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerativeError {
    #[error("cubical h-vectors are undefined for a complex of dimension {0}")]
    NegativeDimension(i64),

    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Bad generator parameters, or a generated object that fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("validation failed: {0}")]
    ValidationFailed(#[from] ComplexError),

    #[error("topology tag {tag} is inconsistent with the complex: {reason}")]
    InconsistentTopology { tag: String, reason: String },
}
