use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants split into two classes: malformed or out-of-range input (the
/// caller's fault, [`Error::is_input_error`]) and violated internal
/// invariants, which indicate a bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid type literal `{0}`: {1}")]
    InvalidType(String, String),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("coefficient vector {0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("root id {0} out of range")]
    BadRootId(usize),
    #[error("Weyl group of order {order} exceeds the enumeration limit {limit}")]
    GroupTooLarge { order: u128, limit: u128 },
    #[error("element is not a minimal coset representative for the marked node")]
    NotMinimalRepresentative,
    #[error("the set I must be a proper subset of the simple roots")]
    NotProperSubset,
    #[error("invalid subdiagram: {0}")]
    InvalidSubdiagram(String),
    #[error("unknown exceptional tag `{tag}` for {diagram}")]
    UnknownTag { tag: String, diagram: String },
    #[error("malformed address token `{0}`")]
    MalformedAddress(String),
    #[error("malformed word token `{0}`")]
    MalformedWord(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("malformed points file: {0}")]
    MalformedPoints(String),
    #[error("root id {0} is not a coordinate of this chart")]
    NotInChart(usize),
    #[error("point has a nonzero coordinate on positive-weight root {0}; its limit leaves the chart")]
    LeavesChart(usize),
    #[error("scaling parameter t must be nonzero")]
    ZeroParameter,
    #[error("cocharacter has zero weight on every chart coordinate")]
    DegenerateChart,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than a defect.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
