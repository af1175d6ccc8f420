use thiserror::Error;

/// Errors raised by the algebra layers and the trace algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The extension modulus has a nontrivial factor; found while inverting.
    #[error("extension modulus is reducible")]
    ReducibleModulus,

    #[error("element is not in the subfield: nonzero coefficient at index {index}")]
    NotInSubfield { index: usize },

    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    #[error("point is not on the curve: residual {residual}")]
    NotOnCurve { residual: String },

    /// A step of the trace algorithm observed something impossible for valid
    /// input (reducible or inseparable modulus, point off the curve).
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn inconsistent(message: impl Into<String>) -> Self {
        Error::InconsistentInput(message.into())
    }
}
