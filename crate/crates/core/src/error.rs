use thiserror::Error;

/// Errors raised by the exponent calculus and the numerical engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain where the formula is asserted.
    #[error("domain error: {0}")]
    Domain(String),

    /// A guard on a table index or search length was exceeded.
    #[error("range error: {0}")]
    Range(String),

    /// A mu table has no point at the requested abscissa.
    #[error("no mu bound at alpha = {alpha}")]
    MissingMuPoint { alpha: String },

    /// A mu point violates the convexity ceiling mu <= 1 - alpha.
    #[error("invalid mu point at alpha = {alpha}: {reason}")]
    InvalidMuPoint { alpha: String, reason: String },

    /// zeta(s) was requested at the pole s = 1.
    #[error("zeta has a pole at s = 1")]
    Pole,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
