use thiserror::Error;

/// Errors produced by graph construction, solvers and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A produced set or design failed its own check.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// An instance exceeded a configured budget.
    #[error("{resource} exceeds the {budget} ({requested} > {limit})")]
    ResourceLimit {
        resource: String,
        budget: &'static str,
        requested: u64,
        limit: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
