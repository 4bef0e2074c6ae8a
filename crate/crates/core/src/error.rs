use thiserror::Error;

/// Errors raised by the combinatorial and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid permutation `{0}`")]
    InvalidPermutation(String),

    #[error("invalid clan: {0}")]
    InvalidClan(String),

    #[error("{what} limit exceeded: {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("{perm} is not a {kind} shuffle at p = {p}")]
    NotShuffle {
        perm: String,
        kind: &'static str,
        p: usize,
    },

    #[error(
        "u = {u} is not Bruhat-above v = {v}: at position {position} the number of \
         (u > p, v <= p) positions falls below the number of (u <= p, v > p) positions; \
         the Richardson variety is empty and the clan rule does not apply (use the \
         polynomial oracle instead)"
    )]
    NotComparable { u: String, v: String, position: usize },

    #[error("clan {0} contains the (1,2,1,2) pattern and is not a Richardson variety")]
    PatternPresent(String),

    #[error("w = {w} has length {actual}, expected {expected}")]
    WrongLength {
        w: String,
        actual: usize,
        expected: usize,
    },

    #[error("polynomial arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("{0} variables are too few for the Schubert polynomial of {1}")]
    TooFewVariables(usize, String),

    #[error("coefficient {0} does not fit in a 64-bit integer")]
    CoefficientOverflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
