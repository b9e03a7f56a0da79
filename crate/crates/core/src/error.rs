use alloc::string::String;

/// Errors produced by the library.
///
/// Two classes matter to callers: user-facing rejections (bad input, caps,
/// unsupported requests) and invariant violations, which mean a computed
/// object failed one of its own cross-checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan type factor `{factor}`: {reason}")]
    InvalidCartanType { factor: String, reason: String },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("enumeration exceeded cap {cap} (partial count {partial})")]
    CapExceeded { cap: usize, partial: usize },

    #[error("invalid Satake diagram: {0}")]
    InvalidSatake(String),

    #[error("involution rejected: {0}")]
    InvalidInvolution(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated [{check}]: {detail}")]
    Invariant { check: &'static str, detail: String },
}

impl Error {
    /// True for failed internal cross-checks, false for rejected input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant { .. })
    }

    pub(crate) fn invariant(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            check,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
