/// Failures surfaced by the harness: parse errors with a location, envelope
/// violations, and wrapped core/serialization/IO errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Exhaustive mode was requested beyond the documented per-theorem
    /// envelope; the space is still reachable with `--sample`.
    #[error("envelope exceeded without sample mode")]
    EnvelopeExceeded,

    /// Even sampling has a ceiling (ambient sizes where the per-family
    /// checks stay tractable).
    #[error("n={n} exceeds the {what} sampling envelope (max {max})")]
    SampleEnvelope {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// Malformed family data; `location` points into the JSON structure
    /// (e.g. `members[3][1]`).
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] rainbow_core::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
