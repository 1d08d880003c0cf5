use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Text input could not be parsed; `offset` is a byte offset into the input.
    Parse { offset: usize, message: String },
    /// A word that was required to be a permutation of {1..n} is not one.
    InvalidPermutation(String),
    /// The word contains repeated values.
    RepeatedValue(usize),
    /// The permutation contains the pattern 231; positions and values of one
    /// witnessing triple, 1-based.
    NotStackSortable {
        positions: [usize; 3],
        values: [usize; 3],
    },
    /// A factor span does not fit in the host permutation.
    SpanOutOfRange { start: usize, end: usize, len: usize },
    /// The span is not a compact factor.
    NotCompact { start: usize, end: usize },
    /// The span is not a complete factor, so insertion is not defined at it.
    NotComplete { start: usize, end: usize },
    /// A 1-based position is outside the permutation.
    PositionOutOfRange { pos: usize, len: usize },
    /// The value is absent from the permutation.
    ValueNotFound { value: usize },
    /// Input is too large for an exhaustive (exponential) routine.
    SizeLimit { limit: usize, actual: usize },
    /// Breadth-first search gave up: the distance exceeds the cap.
    SearchCapExceeded { cap: usize },
    /// An argument is outside the documented domain of the operation.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, message } => {
                write!(f, "parse error at offset {offset}: {message}")
            }
            Error::InvalidPermutation(msg) => write!(f, "not a permutation: {msg}"),
            Error::RepeatedValue(v) => write!(f, "repeated value {v}"),
            Error::NotStackSortable { positions, values } => write!(
                f,
                "not one-stack-sortable: pattern 231 at positions {},{},{} (values {},{},{})",
                positions[0], positions[1], positions[2], values[0], values[1], values[2]
            ),
            Error::SpanOutOfRange { start, end, len } => {
                write!(f, "span {start}:{end} out of range for length {len}")
            }
            Error::NotCompact { start, end } => {
                write!(f, "factor {start}:{end} is not compact")
            }
            Error::NotComplete { start, end } => {
                write!(f, "factor {start}:{end} is not complete")
            }
            Error::PositionOutOfRange { pos, len } => {
                write!(f, "position {pos} out of range for length {len}")
            }
            Error::ValueNotFound { value } => write!(f, "value {value} not found"),
            Error::SizeLimit { limit, actual } => {
                write!(f, "input size {actual} exceeds the limit {limit}")
            }
            Error::SearchCapExceeded { cap } => write!(f, "distance > {cap} (search cap)"),
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
