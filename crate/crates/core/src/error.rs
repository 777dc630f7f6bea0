use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown identifier `{0}`")]
    UnknownSymbol(String),

    #[error("signature mismatch: `{left}` vs `{right}`")]
    SignatureMismatch { left: String, right: String },

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("grading mismatch: expected {expected}, found {found}")]
    GradingMismatch { expected: String, found: String },

    #[error("rule {rule} does not decrease the monomial order")]
    NonDecreasingRule { rule: String },

    #[error("generator `{0}` is not invertible")]
    NotInvertible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("not in grading 0: {0}")]
    NotDegreeZero(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
