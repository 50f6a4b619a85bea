use thiserror::Error;

pub type Result<T> = std::result::Result<T, IepgError>;

#[derive(Debug, Error)]
pub enum IepgError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {order} exceeds the limit {limit}")]
    InstanceTooLarge { order: usize, limit: usize },
    #[error("matrix is not symmetric (max deviation {0:e})")]
    NotSymmetric(f64),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("not attainable: {0}")]
    NotAttainable(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl IepgError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        IepgError::Domain(msg.into())
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        IepgError::Hypothesis(msg.into())
    }
}
