use thiserror::Error;

/// Failure modes shared by every module. The variant name doubles as the
/// machine-readable tag printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("StrandMismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("UnsupportedParameters: {0}")]
    UnsupportedParameters(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("NotDisjoint: arcs {0} and {1}")]
    NotDisjoint(usize, usize),
    #[error("EndsCollide: arcs {0} and {1}")]
    EndsCollide(usize, usize),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("BackendDisagreement: {0}")]
    BackendDisagreement(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// The bare tag, e.g. `StrandMismatch`.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::StrandMismatch { .. } => "StrandMismatch",
            Error::UnsupportedParameters(_) => "UnsupportedParameters",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotDisjoint(..) => "NotDisjoint",
            Error::EndsCollide(..) => "EndsCollide",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::BackendDisagreement(_) => "BackendDisagreement",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_strands(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::StrandMismatch { left, right })
    }
}
