use thiserror::Error;

/// Errors raised while building grids, states, families and spectra.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("composite Simpson quadrature needs an odd number of points, got {0}")]
    EvenPointCount(usize),

    #[error("non-finite sample at index {index}")]
    NonFinite { index: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("grid outside the problem domain: {0}")]
    OutOfDomain(String),

    #[error("lambda = {0} is not admissible (need lambda > 0 or lambda < -1)")]
    InadmissibleLambda(f64),

    #[error("state not normalized on this grid: {0}")]
    Normalization(String),

    #[error("requested {requested} eigenvalues from an operator of size {size}")]
    EigenvalueCount { requested: usize, size: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
