use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptySequence: the sequence has no items")]
    EmptySequence,
    #[error("NonPositiveWeight: item {index} has weight <= 0")]
    NonPositiveWeight { index: usize },
    #[error("IndexOutOfRange: ({start}, {end}) is not a segment of a sequence of length {len}")]
    IndexOutOfRange {
        start: usize,
        end: usize,
        len: usize,
    },
    #[error("InfeasibleWidthWindow: no segment has width within the requested bounds")]
    InfeasibleWidthWindow,
    #[error("InvalidWidthBounds: need 0 < L <= U")]
    InvalidWidthBounds,
    #[error("ItemWiderThanMax: item {index} is wider than the maximum width")]
    ItemWiderThanMax { index: usize },
    #[error("NumericRange: {0}")]
    NumericRange(String),
    #[error("InvalidNumber: {0:?} is not a plain decimal number")]
    InvalidNumber(String),
    #[error("QueryOrderViolation: query {got} issued after query {previous}; left indices must strictly decrease")]
    QueryOrderViolation { previous: usize, got: usize },
    #[error(
        "InfeasibleQuery: left index {index} has no feasible right endpoint in this structure"
    )]
    InfeasibleQuery { index: usize },
    #[error("RangeViolation: left index {index} cannot reach the structure range")]
    RangeViolation { index: usize },
    #[error("NonUniformInput: every weight must equal one unit")]
    NonUniformInput,
    #[error("WeightBelowOne: item {index} has weight below one unit")]
    WeightBelowOne { index: usize },
    #[error("CapExceeded: size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("MalformedFasta: line {line}")]
    MalformedFasta { line: usize },
    #[error("MalformedTsv: line {line}: {reason}")]
    MalformedTsv { line: usize, reason: String },
    #[error("UnknownSymbol: {symbol:?} at position {position} of record {record}")]
    UnknownSymbol {
        record: String,
        position: usize,
        symbol: char,
    },
    #[error("InvalidMapping: {0}")]
    InvalidMapping(String),
    #[error("Io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
