use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus m must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("partition {0} is not {1}-regular")]
    NotRegular(String, u32),

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_modulus(m: u32) -> Result<()> {
    if m < 2 {
        Err(Error::InvalidModulus(m))
    } else {
        Ok(())
    }
}
