use thiserror::Error;

/// Every failure the library reports.
///
/// Input problems (parse errors, malformed files, unsupported fields) are
/// kept apart from mathematical failures so front ends can map them to
/// different exit statuses; see [`Error::is_input_error`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bottom subspace is not contained in top subspace")]
    Containment,
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("size error: {0}")]
    Size(String),
    #[error("invalid action: {0}")]
    ActionInvalid(String),
    #[error("not a graded ideal: {0}")]
    NotAnIdeal(String),
    #[error("incompatible actions: {0}")]
    IncompatibleActions(String),
    #[error("bracket not well defined: {0}")]
    BracketNotWellDefined(String),
    #[error("algebra is not perfect: {0}")]
    NotPerfect(String),
    #[error("crossed modules do not share a base: {0}")]
    CrossedModuleMismatch(String),
    #[error("inconsistent complex: {0}")]
    ComplexInconsistent(String),
    #[error("presented algebra has class above {bound}")]
    ClassExceeded { bound: usize },
    #[error("field not supported: {0}")]
    FieldUnsupported(String),
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeOverflow { degree: usize, limit: usize },
    #[error("algebra is not unital: {0}")]
    NotUnital(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// True for malformed or unsupported input, false for mathematical failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Input(_)
                | Error::Field(_)
                | Error::FieldUnsupported(_)
                | Error::AmbientMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
