use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the combinatorial core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("window has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("window entries {first} and {second} agree modulo {n}")]
    DistinctResidueViolation { n: usize, first: i64, second: i64 },
    #[error("window sums to {got}, expected {expected}")]
    SumViolation { expected: i64, got: i64 },
    #[error("window entry {0} is out of the supported range")]
    EntryOutOfRange(i64),
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("simple reflection index {index} out of range for n = {n}")]
    BadGenerator { n: usize, index: usize },
    #[error("gcd({n}, {m}) != 1")]
    NotCoprime { n: usize, m: usize },
    #[error("permutation {0} is not {1}-stable")]
    NotStable(String, usize),
    #[error("permutation {0} is not {1}-restricted")]
    NotRestricted(String, usize),
    #[error("{0:?} is not a parking function for slope {1}/{2}")]
    NotParkingFunction(Vec<usize>, usize, usize),
    #[error("labeled diagram violates the row-label monotonicity rule at row {0}")]
    LabelMonotonicityViolation(usize),
    #[error("invalid labeled diagram: {0}")]
    InvalidDiagram(&'static str),
    #[error("{needed} objects requested but the cap is {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("invalid invariant subset: {0}")]
    InvalidSubset(&'static str),
    #[error("slope {m} is not of the form {k}*{n} +/- 1")]
    BadSlope { n: usize, k: usize, m: usize },
    #[error("not a permutation of 1..{0}")]
    NotFinitePermutation(usize),
    #[error("sequence has no preimage under the finite PS map")]
    NoPreimage,
    #[error("U table did not become periodic within the label cap")]
    NotPeriodic,
    #[error("verification failed: {0}")]
    VerificationFailed(&'static str),
    #[error("weight does not evaluate to integers at t = q^(m/n)")]
    NonIntegralEvaluation,
    #[error("weight does not normalize to integer tableau positions")]
    NonIntegralPosition,
    #[error("alcove lies outside the dilated fundamental alcove")]
    OutsideRegion,
    #[error("weight tableau is not standard")]
    NotStandard,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
