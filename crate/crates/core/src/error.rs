use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a polytope needs at least one generator")]
    EmptyPolytope,

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("dilation factor must be positive, got {0}")]
    InvalidDilation(i64),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal step of a constructive algorithm broke an invariant that
    /// the underlying theorem guarantees; always a defect.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{0}")]
    Input(String),
}
