use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix size {size} exceeds the determinant bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("division is not exact")]
    InexactDivision,
    #[error("all inputs are zero")]
    AllZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("form is not homogeneous")]
    Inhomogeneous,
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (< {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid linear system: {0}")]
    InvalidSystem(String),
    #[error("no generic stratum member with these parameters: {0}")]
    NoGenericStratum(String),
    #[error("system has base points (base divisor of degree {0})")]
    BasePoints(usize),
    #[error("system has no syzygy of degree {0}")]
    NoSyzygy(usize),
    #[error("sampling failed after {0} attempts")]
    RetryBudget(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degenerate Poncelet determinant (identically zero)")]
    DegenerateDeterminant,
    #[error("base divisor does not split into rational linear factors")]
    IrrationalBaseDivisor,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
