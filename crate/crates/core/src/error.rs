use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `value` appears a second time at (1-based) `index`.
    DuplicateValue {
        index: usize,
        value: usize,
    },
    /// A zero entry at (1-based) `index`.
    ZeroValue {
        index: usize,
    },
    /// An entry larger than the word length.
    ValueOutOfRange {
        index: usize,
        value: usize,
        len: usize,
    },
    /// Insertion position outside `1..=len+1`.
    PositionOutOfRange {
        position: usize,
        len: usize,
    },
    /// Index `k` outside the allowed range `lo..=hi`.
    IndexOutOfRange {
        k: usize,
        lo: usize,
        hi: usize,
    },
    UnknownSymmetry(String),
    UnknownStatistic(String),
    PatternTooShort(String),
    DuplicatePattern(String),
    /// `outer` contains `inner` as a pattern.
    RedundantPattern {
        inner: String,
        outer: String,
    },
    MixedPatternLengths,
    EmptyPatternSet,
    /// Checked 64-bit arithmetic overflowed.
    Overflow(&'static str),
    /// A series or rational function whose constant term is not a unit.
    NotInvertible,
    OrderMismatch {
        left: usize,
        right: usize,
    },
    /// A continued-fraction level that is not divisible by `z`.
    LevelNotDivisibleByZ {
        level: usize,
    },
    /// Polynomial division that does not come out exact.
    InexactDivision,
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateValue { index, value } => {
                write!(f, "duplicate value {value} at index {index}")
            }
            Error::ZeroValue { index } => write!(f, "zero value at index {index}"),
            Error::ValueOutOfRange { index, value, len } => {
                write!(f, "value {value} at index {index} is out of range 1..={len}")
            }
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} is out of range 1..={}", len + 1)
            }
            Error::IndexOutOfRange { k, lo, hi } => {
                write!(f, "index {k} is out of range {lo}..={hi}")
            }
            Error::UnknownSymmetry(s) => write!(f, "unknown symmetry `{s}`"),
            Error::UnknownStatistic(s) => write!(f, "unknown statistic `{s}`"),
            Error::PatternTooShort(p) => write!(f, "pattern {p} is shorter than 2"),
            Error::DuplicatePattern(p) => write!(f, "pattern {p} listed twice"),
            Error::RedundantPattern { inner, outer } => {
                write!(f, "pattern {outer} contains pattern {inner}")
            }
            Error::MixedPatternLengths => f.write_str("patterns have different lengths"),
            Error::EmptyPatternSet => f.write_str("pattern set is empty"),
            Error::Overflow(what) => write!(f, "integer overflow in {what}"),
            Error::NotInvertible => f.write_str("constant term is not +1 or -1"),
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            Error::LevelNotDivisibleByZ { level } => {
                write!(f, "continued fraction level {level} has a nonzero constant term")
            }
            Error::InexactDivision => f.write_str("polynomial division is not exact"),
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
