use thiserror::Error;

/// Errors raised by the geometry, shape and quantum routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("non-finite derivative at node ({i}, {j})")]
    NonFiniteDerivative { i: usize, j: usize },

    #[error("inconsistent curvature at node ({i}, {j}): H^2 - K = {discriminant:e}")]
    InconsistentCurvature {
        i: usize,
        j: usize,
        discriminant: f64,
    },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("collapsed to trivial branch H = 0 after {iterations} iterations")]
    CollapsedToTrivial { iterations: usize },

    #[error("inverse iteration stagnated for eigenvalue {eigenvalue} (residual {residual:e})")]
    Stagnation { eigenvalue: f64, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
