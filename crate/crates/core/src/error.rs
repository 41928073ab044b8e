use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("subgroup count exceeds the configured cap of {cap}")]
    SubgroupCountCapExceeded { cap: usize },
    #[error("operands belong to different parent groups")]
    ParentMismatch,
    #[error("subgroup is not contained in the given overgroup")]
    NotContained,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("section orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("actor {actor} does not normalize the section")]
    ActorDoesNotNormalize { actor: usize },
    #[error("family is not closed under intersection of members {a} and {b}")]
    NotMeetClosed { a: usize, b: usize },
    #[error("family is not closed under join of members {a} and {b}")]
    NotJoinClosed { a: usize, b: usize },
    #[error("lattice elements {a} and {b} are not comparable")]
    NotComparable { a: usize, b: usize },
    #[error("element is not a member of the lattice")]
    ElementNotInLattice,
    #[error("empty family")]
    EmptyFamily,
    #[error("group has no complete Hall set for this partition")]
    NotSigmaFull,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    /// True for the cap errors that callers report as skipped instances.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::SubgroupCountCapExceeded { .. }
        )
    }
}
