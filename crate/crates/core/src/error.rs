use std::fmt;

/// Errors raised by the workbench.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("{what} is {value}, above the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("connectivity certificate fails for color set {subset:?}: {detail}")]
    Connectivity { subset: Vec<usize>, detail: String },

    #[error("theorem violation ({what}); instance: {instance}")]
    TheoremViolation { what: String, instance: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(msg: impl fmt::Display) -> Self {
        Error::Parse(msg.to_string())
    }

    pub(crate) fn invalid(msg: impl fmt::Display) -> Self {
        Error::InvalidInput(msg.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Size bounds for exponential enumerations. Exceeding a bound is an
/// explicit refusal, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for vector/covector closure.
    pub max_n: usize,
    /// Largest number of faces a simplicial complex may have.
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 9,
            max_faces: 500_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::LimitExceeded {
                what: "ground set size",
                value: n,
                limit: self.max_n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_faces(&self, count: usize) -> Result<()> {
        if count > self.max_faces {
            return Err(Error::LimitExceeded {
                what: "face count",
                value: count,
                limit: self.max_faces,
            });
        }
        Ok(())
    }
}
