use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A complete multipartite graph needs at least two parts.
    TooFewParts { count: usize },
    /// Part `index` (0-based) has size zero.
    EmptyPart { index: usize },
    /// Part sizes must be nondecreasing.
    UnsortedSizes { index: usize },
    /// The number of colors or vertices must be at least one.
    ZeroCount(&'static str),
    /// A quantity exceeds [`MAX_QUANTITY`](crate::MAX_QUANTITY).
    Overflow(&'static str),
    /// The r-equitable chromatic threshold does not exist for r = 0.
    ThresholdUndefined,
    /// A witness does not satisfy its invariants for the given instance.
    InvalidWitness(&'static str),
    /// A coloring leaves a vertex unassigned or uses a color outside `1..=k`.
    MalformedColoring { part: usize, detail: &'static str },
    /// The instance is beyond what the exhaustive oracle accepts.
    InstanceTooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },
}

impl Error {
    /// True for errors that reject the caller's input outright.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::TooFewParts { .. }
                | Error::EmptyPart { .. }
                | Error::UnsortedSizes { .. }
                | Error::ZeroCount(_)
                | Error::Overflow(_)
                | Error::ThresholdUndefined
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewParts { count } => {
                write!(
                    f,
                    "a complete multipartite graph needs at least 2 parts, got {count}"
                )
            }
            Error::EmptyPart { index } => {
                write!(f, "part {} has size 0; sizes must be >= 1", index + 1)
            }
            Error::UnsortedSizes { index } => {
                write!(
                    f,
                    "part sizes must be nondecreasing (part {} is smaller than part {})",
                    index + 1,
                    index
                )
            }
            Error::ZeroCount(what) => write!(f, "{what} must be >= 1"),
            Error::Overflow(what) => write!(f, "{what} exceeds the supported range (2^62)"),
            Error::ThresholdUndefined => {
                f.write_str("the 0-equitable chromatic threshold does not exist; r must be >= 1")
            }
            Error::InvalidWitness(why) => write!(f, "invalid witness: {why}"),
            Error::MalformedColoring { part, detail } => {
                write!(f, "malformed coloring in part {}: {detail}", part + 1)
            }
            Error::InstanceTooLarge { what, value, limit } => {
                write!(
                    f,
                    "instance too large for the oracle: {what} = {value} exceeds {limit}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
