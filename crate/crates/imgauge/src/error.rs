//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("eigensolver failed to converge (lapack return code {code})")]
    NoConvergence { code: i32 },

    #[error("eigenpair {index} residual {residual:.3e} exceeds bound {bound:.3e}")]
    ResidualExceeded {
        index: usize,
        residual: f64,
        bound: f64,
    },

    #[error("period must be positive and finite, got {0}")]
    NonPositivePeriod(f64),

    #[error("quadrature did not reach tolerance {tol:.3e} within the refinement depth limit")]
    QuadratureDepth { tol: f64 },

    #[error("field has no intrinsic period; supply one explicitly")]
    NoPeriod,

    #[error("spectral ellipse degenerates to a line at h0 = 0; test Im(E) = 0 instead")]
    DegenerateEllipse,

    #[error("reality condition violated: |period-averaged sinh h| = {sinh_average:.3e} > {tol:.3e}")]
    ConditionNotMet { sinh_average: f64, tol: f64 },

    #[error("gauge factor exponent {exponent:.1} out of safe range (|h|*N > {limit})")]
    GaugeOverflow { exponent: f64, limit: f64 },

    #[error("invalid {what}: {reason}")]
    InvalidInput { what: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            what,
            reason: reason.into(),
        }
    }
}
