use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside an operation's domain, e.g. `m > n`.
    #[error("domain error: {0}")]
    Domain(String),
    /// Full enumeration of `2^n` strings was refused.
    #[error("n = {n} exceeds the enumeration cap of {cap} bits")]
    SizeCap { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
