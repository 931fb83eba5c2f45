use thiserror::Error;

/// Errors raised by the transform toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain the operation accepts.
    #[error("input out of domain: {0}")]
    InputDomain(String),

    #[error("dimension {dim} is not supported (expected {min}..={max})")]
    UnsupportedDimension { dim: usize, min: usize, max: usize },

    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    /// A quotient whose denominator is identically zero.
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    /// Evaluation hit a pole of the expression.
    #[error("evaluation pole: {0}")]
    EvaluationPole(String),

    /// `s == 2/T` in the bilinear map.
    #[error("bilinear map is singular at s = 2/T ({0})")]
    MapSingularity(String),

    #[error("not implemented: {0}")]
    NotImplemented(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(dim: usize, min: usize, max: usize) -> Result<()> {
    if dim < min || dim > max {
        Err(Error::UnsupportedDimension { dim, min, max })
    } else {
        Ok(())
    }
}
