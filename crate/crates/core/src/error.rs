use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot evaluate a polynomial with negative exponents at zero")]
    ZeroEvaluation,

    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("total degree {degree} exceeds the guard of {guard}")]
    DegreeGuard { degree: u64, guard: u64 },

    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("exponent function `{0}` violates its invariants: {1}")]
    AlphaInvariant(String, String),

    #[error("unknown alpha `{0}`")]
    UnknownAlpha(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown compute target `{0}`")]
    UnknownTarget(String),

    #[error("bad arity for `{target}`: expected {expected} argument(s), got {got}")]
    BadArity {
        target: String,
        expected: usize,
        got: usize,
    },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("sweep of {count} instances exceeds the guard of {guard} (raise QCONG_GUARD)")]
    GuardExceeded { count: u128, guard: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
