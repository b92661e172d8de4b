use alloc::string::String;

/// Errors surfaced by constructions, enumeration and the theorem suite.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input: bad parameters, mismatched owners,
    /// ill-defined maps, violated construction preconditions.
    #[error("input error: {0}")]
    Input(String),
    /// A size cap would be exceeded.
    #[error("capacity error: {what} exceeds cap {cap}")]
    Capacity { what: String, cap: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! input_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Input(alloc::format!($($arg)*))
    };
}
pub(crate) use input_err;
