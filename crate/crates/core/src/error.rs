use thiserror::Error;

use crate::brace::BraceViolation;
use crate::cycleset::Violation;
use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("invalid cycle set: {0}")]
    CycleSet(Violation),

    #[error("invalid solution: {0}")]
    Solution(String),

    #[error("invalid left brace: {0}")]
    Brace(BraceViolation),

    #[error("not a congruence: {0}")]
    NotCongruence(String),

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("subset is not a union of lambda-orbits: element {0} leaves it")]
    NotLambdaClosed(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size {size} exceeds the enumeration limit {limit}")]
    SizeGuard { size: usize, limit: usize },

    /// A mathematical cross-check failed. This indicates a bug, not bad input.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for errors that signal an implementation defect rather than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::CycleSet(v)
    }
}

impl From<BraceViolation> for Error {
    fn from(v: BraceViolation) -> Self {
        Error::Brace(v)
    }
}
