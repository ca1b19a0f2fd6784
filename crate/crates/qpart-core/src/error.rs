use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} did not converge within {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("{what} = {value} exceeds the guard {limit}")]
    LimitExceeded { what: &'static str, value: usize, limit: usize },

    #[error("partition of size {actual} passed to Plancherel measure of order {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("duplicate point {0}")]
    DuplicatePoint(String),

    #[error("measure is not determinantal: {0}")]
    NotDeterminantal(&'static str),

    #[error("Fredholm truncation too small: dropped diagonal mass {mass:e} at size {size}")]
    TruncationTooSmall { mass: f64, size: usize },

    #[error("near-singular {what} at index {index}")]
    Singular { what: &'static str, index: usize },

    #[error("quadrature did not stabilise with {points} nodes: {what}")]
    Quadrature { what: &'static str, points: usize },

    #[error("Fourier grid {grid} too coarse for orders {n_min}..={n_max}")]
    Aliasing { grid: usize, n_min: i64, n_max: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
