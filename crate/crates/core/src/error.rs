use thiserror::Error;

/// Errors produced by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates the domain of the requested quantity. `requirement`
    /// names the violated condition, e.g. `"s > m+2 = 5"`.
    #[error("{context} requires {requirement} (got {got})")]
    Domain {
        context: &'static str,
        requirement: String,
        got: String,
    },

    /// No closed form is known for this case; callers have to
    /// opt into a numerical method explicitly.
    #[error("no closed form is available for {what}")]
    NoClosedForm { what: String },

    /// Summation needed more terms than the configured budget.
    #[error("term budget of {budget} exhausted (about {needed} terms needed); try the transformed method")]
    TermBudgetExceeded { budget: u64, needed: u64 },

    /// An iterative routine did not reach its target.
    #[error("{routine} did not converge")]
    NoConvergence { routine: &'static str },

    /// The result left the binary64 range.
    #[error("{what} overflowed binary64")]
    Overflow { what: &'static str },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(context: &'static str, requirement: impl Into<String>, got: impl Into<String>) -> Error {
    Error::Domain {
        context,
        requirement: requirement.into(),
        got: got.into(),
    }
}
