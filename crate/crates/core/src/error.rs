use thiserror::Error;

/// Errors raised by the numerical routines and state constructors.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dag| = {max_dev:e})")]
    NotHermitian { max_dev: f64 },

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal mass {off:e})"
    )]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("bipartite dimensions {dims:?} do not match a {size}x{size} matrix")]
    BadDims { dims: (usize, usize), size: usize },

    #[error(
        "|a|^2+|b|^2+|c|^2+|d|^2 = {sum} violates the normalization constraint (must equal 1)"
    )]
    NormalizationViolated { sum: f64 },

    #[error("eps = {0} lies outside [0, 1]")]
    EpsOutOfRange(f64),

    #[error("non-finite entry in input")]
    NonFinite,

    #[error("not a density matrix: {0}")]
    InvalidDensity(String),

    #[error("negative radicand {0:e} in the closed-form partial-transpose roots")]
    NegativeRadicand(f64),

    #[error("free scalar {0} must be nonzero for this family")]
    DegenerateScalar(&'static str),

    #[error("product-vector span failed to stabilize (rank {rank} exceeds bound {bound})")]
    NoStabilization { rank: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
