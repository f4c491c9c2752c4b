use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unseeded class {0}: {1}")]
    Unseeded(String, String),
    #[error("unknown singularity class {0:?}")]
    UnknownClass(String),
    #[error("operation not available for class {0}: {1}")]
    Unsupported(String, String),
    #[error("braid generator {index} out of range for {mu} strands")]
    GeneratorOutOfRange { index: i32, mu: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("rank deficiency of the Jacobi quotient at weighted degree {0}")]
    RankDeficient(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
