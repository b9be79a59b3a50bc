use thiserror::Error;

/// Errors raised by the library. Statistical inconclusiveness is reported
/// separately from hard failures so the CLI can map it to its own exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not transversal to the complement of the base point (smallest squared cosine {0:e})")]
    Degenerate(f64),

    #[error("Gram pivot for {partition} is {pivot:e}, below 5x its standard error {stderr:e}; increase the sample count")]
    InsufficientSamples {
        partition: String,
        pivot: f64,
        stderr: f64,
    },

    #[error("statistically inconclusive: {0}")]
    Inconclusive(String),

    #[error("Cauchy matrix precondition violated: {0}")]
    CauchyPrecondition(String),

    #[error("operator is not reduced: term {0} has a coefficient exponent exceeding its derivative index")]
    NotReduced(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
