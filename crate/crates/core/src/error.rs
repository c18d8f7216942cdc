use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad braid-word text. `position` is the 1-based token index.
    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("closure has {components} components; a knot is required")]
    NotAKnot { components: usize },

    #[error("invalid arrow index {index} (diagram has {arrows} arrows)")]
    InvalidArrow { index: usize, arrows: usize },

    #[error("invalid gap {gap} (circle has {gaps} gaps)")]
    InvalidGap { gap: usize, gaps: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no arrow pattern reproduces the calibration corpus")]
    CalibrationFailure,

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("value out of domain: {0}")]
    OutOfDomain(String),

    #[error("polynomial is not palindromic: {0}")]
    NotPalindromic(String),

    /// Only reachable through a convention or construction bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
