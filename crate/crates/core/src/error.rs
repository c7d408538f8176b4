use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid one-box shift: {0}")]
    InvalidShift(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {n} exceeds the limit {limit} (use --force or set SPECHT_MAX_N)")]
    DegreeTooLarge { n: usize, limit: usize },

    #[error("scalar domains differ: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("vector is not in the Specht module S^{0}")]
    NotInSpecht(String),

    #[error("theorem hypothesis requires characteristic ≠ 2")]
    CharacteristicTwo,

    #[error("residue condition fails: {0}")]
    ResidueCondition(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    CheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}
