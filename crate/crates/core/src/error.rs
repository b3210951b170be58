use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DmodError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("admissibility violated for ({a}, {b}): leading monomial {lm} of the relation is not below {a}*{b}")]
    Admissibility { a: String, b: String, lm: String },
    #[error("nondegeneracy condition fails for ({0}, {1}, {2})")]
    Nondegeneracy(String, String, String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("ordering is not a well-ordering (some variable is not larger than 1)")]
    NotGlobal,
    #[error("the remaining variables do not span a subalgebra: relation of ({0}, {1}) uses an eliminated variable")]
    NotSubalgebra(String, String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("element is not in the ideal")]
    NotInIdeal,
    #[error("zero input")]
    ZeroInput,
    #[error("constant polynomial where a non-constant one is required")]
    ConstantInput,
    #[error("intersection with the polynomial subring is zero")]
    ZeroIntersection,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("computation failed: {0}")]
    Computation(String),
}

impl DmodError {
    /// Short stable identifier used by the command-line tool.
    pub fn reason(&self) -> &'static str {
        match self {
            DmodError::LengthMismatch { .. } => "length-mismatch",
            DmodError::Admissibility { .. } => "admissibility",
            DmodError::Nondegeneracy(..) => "nondegeneracy",
            DmodError::AlgebraMismatch => "algebra-mismatch",
            DmodError::NotGlobal => "not-global",
            DmodError::NotSubalgebra(..) => "not-subalgebra",
            DmodError::CapExceeded(_) => "cap-exceeded",
            DmodError::NotInIdeal => "not-in-ideal",
            DmodError::ZeroInput => "zero-input",
            DmodError::ConstantInput => "constant-input",
            DmodError::ZeroIntersection => "zero-intersection",
            DmodError::Unsupported(_) => "unsupported",
            DmodError::InvalidInput(_) => "invalid-input",
            DmodError::Parse { .. } => "parse",
            DmodError::Computation(_) => "computation",
        }
    }
}

pub type Result<T> = std::result::Result<T, DmodError>;
