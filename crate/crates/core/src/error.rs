use thiserror::Error;

/// Errors raised by the combinatorial constructions and poset analyzers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("enumeration limit: {what} of degree {n} exceeds the configured bound {max}")]
    EnumerationLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("invalid one-line notation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("s_{index} is not a simple reflection of S_{n}")]
    InvalidGenerator { index: usize, n: usize },

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("no meet: maximal lower bounds {0:?}")]
    NoMeet(Vec<usize>),

    #[error("no join: minimal upper bounds {0:?}")]
    NoJoin(Vec<usize>),

    #[error("poset is not a lattice")]
    NotALattice,

    #[error("poset is not graded: {0}")]
    NotGraded(String),

    #[error("poset has no unique minimum and maximum")]
    Unbounded,

    #[error("({lower}, {upper}) is not a cover relation")]
    NotACover { lower: String, upper: String },

    #[error("not a GJ representative: {0}")]
    NotGjRepresentative(String),

    #[error("invalid class representative: {0}")]
    InvalidRepresentative(String),

    #[error("inconsistent parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed poset document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
