use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid fraction: zero denominator")]
    ZeroDenominator,

    #[error("malformed rational {text:?} at byte {position}: {reason}")]
    Parse {
        text: String,
        position: usize,
        reason: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// Enumerating all 2^(n-1) compositions of `n` was refused.
    #[error(
        "composition enumeration for n = {n} would visit 2^{} terms; the cap is n = {cap} \
         (raise it with --composition-cap)",
        n - 1
    )]
    CompositionCap { n: usize, cap: usize },

    #[error(
        "coefficient a0 must be exactly 1 (found {found}); divide every coefficient by a0, \
         e.g. with CoefficientSequence::normalized_from"
    )]
    LeadingCoefficient { found: String },

    #[error("coefficient a{index} requested but the sequence {name:?} only defines a0..a{}", len - 1)]
    MissingCoefficient {
        name: String,
        index: usize,
        len: usize,
    },

    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),

    #[error("cannot read coefficient file {path}: {reason}")]
    CoefficientFile { path: String, reason: String },
}
