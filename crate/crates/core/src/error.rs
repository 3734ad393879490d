use thiserror::Error;

use crate::numeric::Signature;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("line direction must be nonzero")]
    ZeroDirection,
    #[error("matrix size {size} is smaller than polynomial degree {degree}")]
    SizeTooSmall { size: usize, degree: usize },
    #[error("pencil is not definite at the origin (signature {0})")]
    NotDefinite(Signature),
    #[error("pencil sign has not been normalized")]
    NotNormalized,
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("origin lies on the curve f(x, y) = 0")]
    OriginOnCurve,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("stability criteria disagree: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable variant name, used by the CLI in machine-readable error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegreeTooSmall => "DegreeTooSmall",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::ZeroDirection => "ZeroDirection",
            Error::SizeTooSmall { .. } => "SizeTooSmall",
            Error::NotDefinite(_) => "NotDefinite",
            Error::NotNormalized => "NotNormalized",
            Error::BadRange(_) => "BadRange",
            Error::OriginOnCurve => "OriginOnCurve",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse(_) => "Parse",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}
