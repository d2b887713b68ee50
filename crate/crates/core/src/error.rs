use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lambda: {0}")]
    InvalidLambda(String),

    #[error("faces belong to different diagrams")]
    DiagramMismatch,

    #[error("ambient dimension {dim} exceeds oracle cap {cap}")]
    CapacityExceeded { dim: usize, cap: usize },

    #[error("point outside polytope: violates {0}")]
    OutsidePolytope(String),

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("pfaffian requires an even-sized matrix, got {0}")]
    OddPfaffian(usize),

    #[error("interlacing violated at stage {stage}: {detail}")]
    Interlacing { stage: usize, detail: String },

    #[error("terminal coordinate is undefined when some b_j vanishes")]
    TerminalUndefined,

    #[error("{0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
