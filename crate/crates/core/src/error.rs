use thiserror::Error;

use crate::partitions::Partition;
use crate::words::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one component")]
    EmptyPartition,
    #[error("partition components must be positive")]
    ZeroComponent,
    #[error("{0} is not in Λ: at least two components are required")]
    NotInLambda(Partition),
    #[error("cannot unite components {i} and {j} of {partition}")]
    InvalidUnion { partition: Partition, i: usize, j: usize },
    #[error("no partitions of {n} into {m} parts with 2 <= m <= n")]
    InvalidShape { n: u32, m: u32 },
    #[error("a word needs at least one letter")]
    EmptyWord,
    #[error("letter indices start at 1")]
    ZeroLetter,
    #[error("identity {lhs} = {rhs} is not balanced")]
    Unbalanced { lhs: Word, rhs: Word },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid deduction trace: {0}")]
    InvalidTrace(String),
    #[error("bound must be at least 2, got {0}")]
    BoundTooSmall(u32),
    #[error("identity {identity} has length {length}, above the bound {bound}")]
    BoundExceeded { identity: String, length: usize, bound: u32 },
    #[error("truncation level {k} is outside 0..={s} for {partition}")]
    TruncationOutOfRange { partition: Partition, k: u32, s: u32 },
    #[error("meet of an empty family of presentations")]
    EmptyMeet,
    #[error("declared collapse of W{0} does not follow from the identities")]
    CollapseNotHeld(Partition),
    #[error("invalid legacy family parameters: {0}")]
    LegacyParameters(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }

    /// True for failures caused by malformed text rather than by the values it denotes.
    pub fn is_syntax(&self) -> bool {
        match self {
            Error::Parse { .. } => true,
            Error::Line { source, .. } => source.is_syntax(),
            _ => false,
        }
    }
}
