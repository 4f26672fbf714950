use std::path::PathBuf;

use thiserror::Error;

use crate::diameter::BfsReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree {0} outside supported range 1..=12")]
    Degree(usize),
    #[error("image array is not a bijection")]
    NotBijection,
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle product")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("rank {rank} out of range (must be < {bound})")]
    RankOutOfRange { rank: u64, bound: u64 },
    #[error("permutation is odd")]
    OddPermutation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowerError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("width must be at least 1")]
    EmptyWidth,
    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("slot {slot} out of range 1..={width}")]
    SlotOutOfRange { slot: usize, width: usize },
    #[error("coordinate {slot} is odd under alternating coding")]
    OddPart { slot: usize },
    #[error("code space radix^{width} for degree {degree} does not fit below 2^63")]
    CodeSpaceOverflow { degree: usize, width: usize },
    #[error("code {code} outside code space of size {space}")]
    CodeOutOfRange { code: u64, space: u64 },
}

#[derive(Debug, Error)]
pub enum GenSetError {
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generating set is empty")]
    Empty,
    #[error("generator {0} has shape ({1}, {2}), expected ({3}, {4})")]
    Shape(usize, usize, usize, usize, usize),
    #[error("generator {0} duplicates generator {1}")]
    Duplicate(usize, usize),
    #[error("generator {0} is the identity")]
    IdentityGenerator(usize),
    #[error("generator {index} has an odd coordinate {slot} under an alternating header")]
    OddGenerator { index: usize, slot: usize },
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0}")]
    Invalid(String),
    #[error("unknown builtin generating set {0:?}")]
    UnknownBuiltin(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HallError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("degree {0} not supported here: {1}")]
    UnsupportedDegree(usize, &'static str),
    #[error("closure enumeration limited to degree <= 10, got {0}")]
    ClosureBudget(usize),
    #[error("column {0} contains an odd permutation")]
    OddColumn(usize),
    #[error("tuples of different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Memory,
    Time,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetKind::Memory => f.write_str("memory"),
            BudgetKind::Time => f.write_str("time"),
        }
    }
}

#[derive(Debug, Error)]
pub enum DiameterError {
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(
        "{kind} budget exceeded after {} completed levels",
        partial.level_sizes.len()
    )]
    Budget {
        kind: BudgetKind,
        partial: Box<BfsReport>,
    },
    #[error("element is not reachable from the identity")]
    Unreachable,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}
