use num_complex::Complex64;
use thiserror::Error;

use crate::quadrature::QuadratureResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Evaluation at (or too close to) a pole.
    #[error("pole: {0}")]
    Pole(String),

    #[error("root finding did not converge after {iterations} iterations")]
    RootsNotConverged {
        iterations: usize,
        best: Vec<Complex64>,
    },

    #[error("quadrature tolerance not reached: {context} (estimate {:.3e})", best.error_estimate)]
    Quadrature {
        context: String,
        best: QuadratureResult,
    },

    #[error("contour value {raw} is not close to an integer")]
    NonIntegerWinding { raw: Complex64 },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("evaluation budget exceeded: {0}")]
    Budget(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("curves share a common component")]
    CommonComponent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for failures caused by numerics (tolerance not met) rather than by the input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::RootsNotConverged { .. }
                | Error::Quadrature { .. }
                | Error::NonIntegerWinding { .. }
                | Error::Numeric(_)
                | Error::Budget(_)
                | Error::Consistency(_)
        )
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
