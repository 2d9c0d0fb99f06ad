use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part at index {index} is not positive")]
    NonPositivePart { index: usize },
    #[error("parts are not weakly decreasing at index {index}")]
    PartsNotDecreasing { index: usize },
    #[error("parts are not distinct at index {index}")]
    NotStrict { index: usize },
    #[error("malformed shifted diagram columns: {0}")]
    MalformedColumns(String),

    #[error("entry at index {index} is not positive")]
    NonPositiveEntry { index: usize },
    #[error("entries past the staircase are not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("alternating sum is {0}, expected 0")]
    NonzeroAlternatingSum(i64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid sequence for phi: {0}")]
    InvalidSequence(String),
    #[error("partition does not belong to any P(a,b) for a = {a}")]
    NotInPab { a: u64 },
    #[error("pair (t, delta) is not in the image of iota: {0}")]
    NotInImage(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("board filling failed: {0}")]
    BoardFilling(String),

    #[error("series constant term {0} is not a unit")]
    NonUnitConstantTerm(i64),
    #[error("series truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
