use thiserror::Error;

use crate::scalars::{ParameterName, Polynomial};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes at the given assignment")]
    EvalSingular,
    #[error("parameter `{0}` has no value in the assignment")]
    UnboundParameter(ParameterName),
    #[error("assumption polynomial is identically zero")]
    ZeroAssumption,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("pivot {0} is not certified nonzero by the assumptions")]
    PivotAmbiguous(Polynomial),
    #[error("bilinear form is degenerate (determinant vanishes identically)")]
    DegenerateForm,
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("binding error: {0}")]
    Binding(String),
    #[error("every sample hit an assumption zero or a pole")]
    ExhaustedSamples,
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unknown name `{name}`")]
    UnknownName {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("{line}:{col}: duplicate name `{name}`")]
    DuplicateName {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    /// Source position for document diagnostics, when the error carries one.
    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            Error::Syntax { line, col, .. }
            | Error::UnknownName { line, col, .. }
            | Error::DuplicateName { line, col, .. } => Some((*line, *col)),
            _ => None,
        }
    }
}
