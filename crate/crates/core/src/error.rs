use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernel.
///
/// Every operation is total on valid inputs; these variants cover precondition
/// violations and the documented desk-scale size caps. There is no silent
/// wraparound anywhere: arithmetic that would overflow reports `Overflow`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("operation requires a proper ideal (the unit ideal was given)")]
    UnitIdeal,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a square-free ideal")]
    NotSquareFree,

    #[error("field characteristic {0} is neither 0 nor prime")]
    CompositeCharacteristic(u64),

    #[error("input exceeds the supported size cap: {0}")]
    SizeCap(String),

    #[error("exponent arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("relation is not a partial order: {0}")]
    InvalidPoset(String),

    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
