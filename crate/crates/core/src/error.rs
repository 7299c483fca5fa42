use std::path::PathBuf;

use thiserror::Error;

/// An algorithm was asked to handle a pattern length it is not defined for.
///
/// These correspond to the blank cells of a results table: the algorithm is
/// correct, it just does not apply at that `m`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{algorithm} is not applicable to patterns of length {m}: requires {bound}")]
pub struct ApplicabilityError {
    pub algorithm: &'static str,
    pub m: usize,
    pub bound: String,
}

impl ApplicabilityError {
    pub(crate) fn new(algorithm: &'static str, m: usize, bound: impl Into<String>) -> Self {
        ApplicabilityError {
            algorithm,
            m,
            bound: bound.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern must be non-empty")]
    EmptyPattern,
    #[error("text id must be non-empty")]
    EmptyTextId,
    #[error(transparent)]
    NotApplicable(#[from] ApplicabilityError),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("alphabet size {0} is not supported (expected one of 2, 4, 8, ..., 256)")]
    BadSigma(usize),
    #[error("invalid word width {0} (expected 32, 64 or 128)")]
    BadWordWidth(u32),
    #[error("pattern length {m} exceeds text length {n}")]
    PatternLongerThanText { m: usize, n: usize },
    #[error("invalid escape sequence at byte {offset}: {reason}")]
    BadEscape { offset: usize, reason: &'static str },
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("measurements span several texts ({0} and {1})")]
    MixedTexts(String, String),
    #[error("invalid benchmark configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {reason}")]
    Parse { line: u64, reason: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
