use thiserror::Error;

/// Errors raised by the phase-space routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("operator is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not an SU(2) element (deviation {deviation:.3e})")]
    NotSu2 { deviation: f64 },

    #[error("singular point: {0}")]
    SingularPoint(&'static str),

    #[error("vector is not tangent at the base point (|v.x| = {deviation:.3e})")]
    NotTangent { deviation: f64 },

    #[error("symbol has complex coefficients; use the series star exponential")]
    ComplexGenerator,

    #[error(
        "star exponential series not converged after {terms} terms (next term {estimate:.3e})"
    )]
    Truncation { terms: usize, estimate: f64 },

    #[error("state vector has zero norm")]
    ZeroNorm,

    #[error("consecutive path points {index} and {next} have overlap {overlap:.3e}")]
    SingularPath {
        index: usize,
        next: usize,
        overlap: f64,
    },

    #[error("path is not closed (endpoint distance {distance:.3e})")]
    OpenPath { distance: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
