use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Catalan trapezoid order must be >= 1")]
    ZeroTrapezoidOrder,

    #[error("invalid Schubert index ({a},{b}) for ambient n = {n}")]
    InvalidIndex { n: u32, a: u32, b: u32 },

    #[error("ambient dimension mismatch: n = {0} vs n = {1}")]
    AmbientMismatch(u32, u32),

    #[error("unsupported Schubert product s[{a},{b}] * s[{c},{d}]")]
    UnsupportedProduct { a: u32, b: u32, c: u32, d: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("the zero polynomial has no contact order")]
    ZeroPolynomial,

    #[error("points are projectively equal")]
    CoincidentPoints,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
