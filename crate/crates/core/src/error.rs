use thiserror::Error;

/// Errors produced by ring, ideal, and decomposition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}` in ground set")]
    DuplicateLabel(String),

    #[error("label `{0}` is not in the ground set")]
    UnknownLabel(String),

    #[error("operands belong to different ground sets")]
    GroundMismatch,

    #[error("operation is undefined on the zero ring (empty ground set)")]
    ZeroRing,

    #[error("the unit ideal is not proper")]
    ImproperIdeal,

    #[error("exhaustive search bound exceeded: size {size} > bound {bound}")]
    OracleBoundExceeded { size: usize, bound: usize },

    #[error("decomposition has not been verified against its target")]
    UnverifiedDecomposition,

    #[error("ideal is not prime")]
    NotPrime,

    #[error("prime ideal does not contain the intersection of the factors")]
    HypothesisFailed,

    #[error("function table has length {got}, ground set has size {want}")]
    LengthMismatch { got: usize, want: usize },

    #[error("element {0:#b} is not an atom")]
    NotAnAtom(u64),

    #[error("argument {0} is out of range")]
    OutOfRange(u64),

    #[error("dimension {0} exceeds the supported maximum of 64")]
    DimensionTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
