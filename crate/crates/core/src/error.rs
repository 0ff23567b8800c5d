use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("count for n = {n} exceeds the 64-bit range")]
    Overflow { n: usize },

    #[error("arithmetic overflow in exact polynomial computation")]
    ArithmeticOverflow,

    #[error("no stabilization: {0}")]
    NoStabilization(String),

    #[error("S-map did not reach a fixed point of {perm} within {steps} steps")]
    NoFixedPoint { perm: String, steps: usize },
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
