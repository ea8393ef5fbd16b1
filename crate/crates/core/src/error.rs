use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands use different variable tables: {left:?} vs {right:?}")]
    VarTableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}` in variable table")]
    DuplicateVariable(String),

    #[error("exponent {exponent} of `{var}` is not a multiple of {n}")]
    WNotEliminable { var: String, exponent: u32, n: u32 },

    #[error("polynomial is not symmetric in {0:?}")]
    NotSymmetric(Vec<String>),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("block shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("cross-check failed: {0}")]
    CrossCheckFailure(String),

    #[error("request exceeds size limit: {0}")]
    SizeLimit(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("cannot factor zero")]
    ZeroInput,

    #[error("polynomial is not primitive (content {0})")]
    NonPrimitive(String),

    #[error("leading coefficient of magnitude {0} is below the degeneracy threshold")]
    DegenerateLeadingCoefficient(String),

    #[error("invalid argument: {0}")]
    Usage(String),
}
