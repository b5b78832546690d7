use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("set is not a subgroup of the group")]
    NotASubgroup,
    #[error("Frattini rank requested for a group that is not a p-group")]
    FrattiniRankOnNonPGroup,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is not fixed under conjugation by the subgroup")]
    NotQFixed,
    #[error("map is not an algebra automorphism")]
    NotAnAutomorphism,
    #[error("acting group order {order} is divisible by p = {p}")]
    OrderDivisibleByP { order: usize, p: u32 },
    #[error("invalid Lie structure constants at basis triple ({0}, {1}, {2})")]
    InvalidStructure(usize, usize, usize),
    #[error("dimension {0} too large for this operation")]
    DimensionTooLarge(usize),
    #[error("(p - 1) / e is not an integer for p = {p}, e = {e}")]
    NonIntegerDimension { p: u32, e: u32 },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("no strategy available: {0}")]
    StrategyUnavailable(String),
    #[error("alternating-sum table is incomplete: {0}")]
    IncompleteTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unsupported prime {0}")]
    UnsupportedPrime(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
