use thiserror::Error;

use crate::flag_model::LieType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("empty block list")]
    Empty,
    #[error("block at position {position} must be positive")]
    ZeroBlock { position: usize },
    #[error("a proper flag needs at least two blocks, got {m}")]
    TooFewBlocks { m: usize },
    #[error("at least one block must be infinite")]
    NoInfiniteBlock,
    #[error("blocks at positions {position} and {mirror} differ; self-dual flags are palindromic")]
    NotPalindromic { position: usize, mirror: usize },
    #[error("even-length self-dual flag needs an infinite Lagrangian middle")]
    LagrangianNotInfinite,
    #[error("block pattern is incompatible with the truncation parity of type {lie_type}")]
    ParityMismatch { lie_type: LieType },
    #[error("invalid block at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("missing `TYPE:` prefix in `{0}`")]
    MissingType(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TruncationError {
    #[error("total {total} is too small; need at least {minimum}")]
    TotalTooSmall { total: usize, minimum: usize },
    #[error("total {total} has the wrong parity for type {lie_type}")]
    ParityMismatch { total: usize, lie_type: LieType },
    #[error("explicit assignment rejected: {0}")]
    BadAssignment(String),
    #[error("cannot absorb {delta} new directions: {reason}")]
    CannotAbsorb { delta: usize, reason: String },
    #[error("invalid shape: {0}")]
    BadShape(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("no flags given")]
    NoFlags,
    #[error("mixed types: expected {expected}, found {found}")]
    MixedTypes { expected: LieType, found: LieType },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarginError {
    #[error("margins must be nonempty")]
    Empty,
    #[error("margin entries must be positive")]
    NonPositive,
    #[error("row total {rows} differs from column total {cols}")]
    TotalsDiffer { rows: u64, cols: u64 },
    #[error("designated block {index} out of range for {len} row parts")]
    BadIndex { index: usize, len: usize },
    #[error("growth sequences are defined for type A only")]
    NotTypeA,
    #[error(transparent)]
    Truncation(#[from] TruncationError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported prime {0}; use 2, 3 or 5")]
    UnsupportedPrime(u32),
    #[error("enumeration needs {needed} points, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("ambient dimension {0} is outside the supported range 1..=8")]
    Dimension(usize),
    #[error("shapes disagree: {0}")]
    ShapeMismatch(String),
    #[error("generator fails to preserve the form")]
    NotAnIsometry,
    #[error(transparent)]
    Truncation(#[from] TruncationError),
}

/// Any error surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Truncation(#[from] TruncationError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Margin(#[from] MarginError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
