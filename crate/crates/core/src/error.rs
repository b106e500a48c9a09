use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid signature: index {index} exceeds dimension {n}")]
    InvalidSignature { index: usize, n: usize },
    #[error("invalid or repeated negative slot {slot} for dimension {n}")]
    InvalidSlot { slot: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AmbientError {
    #[error("flat ambient space has no membership constraint")]
    NoMembershipConstraint,
    #[error("inconsistent ambient descriptor: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failure to parse an expression. Offsets are byte offsets into the source.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("function `{name}` at offset {offset} takes {expected} argument(s), found {found}")]
    Arity {
        name: String,
        offset: usize,
        expected: usize,
        found: usize,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownIdentifier { offset, .. }
            | ParseError::Arity { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("domain error in `{node}` at y = {y}")]
    Domain { node: String, y: f64 },
    #[error("non-finite result in `{node}` at y = {y}")]
    NonFinite { node: String, y: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("quadrature did not converge on [{a}, {b}] (error estimate {estimate:e})")]
    NonConvergence { a: f64, b: f64, estimate: f64 },
    #[error("integrand failed: {0}")]
    Integrand(#[from] EvalError),
}

/// Failure to evaluate an immersion at a point.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ImmersionError {
    #[error("evaluation failed at ({x}, {y}): {reason}")]
    Evaluation { x: f64, y: f64, reason: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FdError {
    #[error("invalid finite-difference scheme: {0}")]
    InvalidScheme(String),
    #[error(transparent)]
    Immersion(#[from] ImmersionError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate frame at ({x}, {y}): {product} = {value:e} off its pseudo-orthonormal value")]
    FrameDegenerate {
        x: f64,
        y: f64,
        product: &'static str,
        value: f64,
    },
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error(transparent)]
    Fd(#[from] FdError),
}

impl From<ImmersionError> for GeometryError {
    fn from(e: ImmersionError) -> Self {
        GeometryError::Fd(FdError::Immersion(e))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("{0}")]
    Parameter(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}
