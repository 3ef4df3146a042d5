use thiserror::Error;

use crate::classify::Property;

/// Errors reported by the arithmetic, group, and verification layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    ZeroInput,
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{q} is not a unit modulo {m}")]
    NotCoprime { q: u64, m: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("group order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("malformed group text: {0}")]
    Parse(String),

    #[error("{n} is a {property} number; no counterexample exists")]
    PredicateHolds { n: u64, property: Property },
    #[error("malformed witness recipe: {0}")]
    Recipe(String),
    #[error("construction invariant violated: {0}")]
    Construction(String),
    #[error("verification failed at n = {n}, {property} ({recipe}): {detail}")]
    VerificationFailed { n: u64, property: Property, recipe: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
