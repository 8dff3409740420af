//! Exit-code contract: 0 success, 1 a verified identity failed (or the
//! library detected an internal inconsistency), 2 usage or domain error,
//! 3 state budget exhausted.

use weave_core::bracket::BracketError;
use weave_core::weaving::ReportError;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn inconsistency(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<BracketError> for CliError {
    fn from(e: BracketError) -> Self {
        match e {
            BracketError::TooLarge { .. } => Self::budget(e.to_string()),
            BracketError::OddExponent { .. } => Self::inconsistency(e.to_string()),
        }
    }
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Bracket(b) => b.into(),
            // A V(ω) outside the ±i^a(i√3)^k alphabet or a non-integer
            // |V(−1)| would contradict the proved value patterns.
            ReportError::Cyclo(c) => Self::inconsistency(c.to_string()),
            other => Self::usage(other.to_string()),
        }
    }
}

impl From<weave_core::weaving::DomainError> for CliError {
    fn from(e: weave_core::weaving::DomainError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<weave_core::braid::BraidError> for CliError {
    fn from(e: weave_core::braid::BraidError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<weave_core::cyclo::CycloError> for CliError {
    fn from(e: weave_core::cyclo::CycloError) -> Self {
        Self::inconsistency(e.to_string())
    }
}
