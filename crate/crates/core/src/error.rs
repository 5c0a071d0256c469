use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by callers that need to map failures onto
/// exit codes or retry policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input rejected: malformed, out of domain, or violating a constraint.
    Validation,
    /// A resource guard refused to start a computation that would be too large.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("invalid two-row shape ({top}, {bottom}): second row longer than first")]
    InvalidShape { top: usize, bottom: usize },

    #[error("shape ({top}, {bottom}) is not rectangular")]
    NotRectangular { top: usize, bottom: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("not a Dyck path: {0}")]
    NotDyck(String),

    #[error("invalid block string: {0}")]
    InvalidBlockString(String),

    #[error("spin configuration length {0} is not a positive multiple of 4")]
    BadConfigLength(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("q-number [{d}] is singular at x = {x}")]
    SingularQNumber { d: i32, x: f64 },

    #[error("strand count {strands} does not match shape size {cells}")]
    StrandMismatch { strands: usize, cells: usize },

    #[error("Jones constraint a^2 + b^2 + x a b = 0 violated, residual {residual:e}")]
    JonesConstraint { residual: f64 },

    #[error("no unimodular Jones parameters exist for x = {0}")]
    NoUnimodularSolution(f64),

    #[error("invalid chain parameters: {0}")]
    InvalidParams(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid bandwidth {bandwidth} for dimension {n} (need 0 < b < n/2)")]
    InvalidBandwidth { n: usize, bandwidth: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Resource(_) => ErrorKind::Resource,
            _ => ErrorKind::Validation,
        }
    }
}
