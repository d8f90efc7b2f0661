use detideal::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check `{0}`; run `verify list` for the catalog")]
    UnknownCheck(String),
    #[error("check `{check}` does not take parameter `{param}`")]
    UnknownParam { check: String, param: String },
    #[error("invalid parameters for `{check}`: {reason}")]
    InvalidParams { check: String, reason: String },
    #[error("check `{0}` has no field choice")]
    FieldNotSupported(String),
    #[error("no reference value for `{check}` with these parameters: {reason}")]
    NoReference { check: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
