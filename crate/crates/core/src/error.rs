use thiserror::Error;

use crate::combinatorics::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("partition {0} has an odd part")]
    OddPart(Partition),
    #[error("invalid parity: {0}")]
    InvalidParity(String),
    #[error("degree mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variant mismatch")]
    VariantMismatch,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("repeated index {0}")]
    RepeatedIndex(usize),
    #[error("class of modified type {partition} does not fit in degree {n}")]
    DoesNotFit { partition: Partition, n: usize },
    #[error("need at least {needed} interpolation points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("repeated abscissa {0}")]
    DuplicateAbscissa(i64),
    #[error("coefficients are not integral in the binomial basis")]
    NonIntegral,
    #[error("data inconsistent with fitted polynomial at x = {at}")]
    Inconsistent { at: i64 },
    #[error("fitted degree {found} exceeds bound {bound}")]
    DegreeExceeded { found: usize, bound: usize },
    #[error("truncation order too short: need {needed}, have {available}")]
    InsufficientOrder { needed: i64, available: i64 },
    #[error("coefficient index must be nonzero")]
    ZeroIndex,
    #[error("series has zero constant term")]
    NotInvertible,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,
    #[error("element is not in the span of class sums: {0}")]
    NotCentral(String),
    #[error("lift comparison is not a signed power of two")]
    InconsistentLift,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("stability violated for {partition}: {first} at n = {n}, {second} at n = {}", n + 1)]
    StabilityViolation {
        partition: Partition,
        n: usize,
        first: i64,
        second: i64,
    },
    #[error("class {0} is not split in this degree")]
    NotSplit(Partition),
}
