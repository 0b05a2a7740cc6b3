use thiserror::Error;

/// Errors raised by ranking construction, evaluation and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violates an operation's domain (precondition, shape, id).
    #[error("domain error: {0}")]
    Domain(String),
    /// An input exceeds a brute-force or arithmetic cap.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Text or document input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// A JSON error, positioned as `line L, column C: message`.
    pub(crate) fn json(e: serde_json::Error) -> Self {
        let text = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = text.strip_suffix(&suffix).unwrap_or(&text);
        Error::Parse(format!(
            "line {}, column {}: {message}",
            e.line(),
            e.column()
        ))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
