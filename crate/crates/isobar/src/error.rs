use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the whole crate. Every operation is exact, so these are
/// all contract violations, never numerical failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("the empty monomial has no lattice predecessors")]
    EmptyExponent,
    #[error("evaluation point has {got} coordinates but t{needed} occurs")]
    MissingCoordinate { needed: usize, got: usize },
    #[error("weight vector has {len} entries but omega_{index} is required")]
    MissingWeight { index: usize, len: usize },
    #[error("sequence shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("constant term is zero: no level-product inverse")]
    NotInvertible,
    #[error("invalid hook: need 0 <= r <= n-1, got n={n}, r={r}")]
    InvalidHook { n: usize, r: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("character tables are supported up to n={bound}, got n={n}")]
    TableBound { n: usize, bound: usize },
    #[error("transition matrix is singular")]
    SingularMatrix,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} exceeds the factorization ceiling")]
    FactorizationCeiling(u64),
}
