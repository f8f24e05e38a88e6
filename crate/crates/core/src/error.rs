use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the domain where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The rule is valid but does not apply to these parameters; callers are
    /// expected to fall back to another rule.
    #[error("rule not applicable: {0}")]
    Inapplicable(String),

    /// An exact search would exceed its configured budget. Never returned in
    /// place of a wrong answer.
    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("invalid family parameters: {0}")]
    Construction(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("report parse error: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inapplicable(msg: impl Into<String>) -> Self {
        Error::Inapplicable(msg.into())
    }
}
