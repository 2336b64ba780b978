use thiserror::Error;

/// Errors raised while constructing data or evaluating operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("invalid configuration field `{field}`: {message}")]
    InvalidConfig { field: String, message: String },

    #[error("unknown root: {0}")]
    UnknownRoot(String),

    #[error("subset of simple roots is not Frobenius-stable: {0:?}")]
    NotSigmaStable(Vec<usize>),

    #[error("Weyl group order exceeds the configured cap of {cap}")]
    WeylOrderCap { cap: usize },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("not a root functional: {0}")]
    NotRootFunctional(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation requires a quasi-split Frobenius (no omega twist)")]
    TwistedFrobenius,

    #[error("operation requires an omega-twisted Frobenius")]
    MissingTwist,

    #[error("invalid edge path: {0}")]
    InvalidPath(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
