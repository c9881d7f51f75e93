use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("query set is empty")]
    EmptyQuerySet,
    #[error("invalid segment: {0}")]
    InvalidSegment(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("path too short: {0}")]
    PathTooShort(String),
    #[error("invalid s: {0}")]
    InvalidS(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A witness failed re-validation or a proven structural fact did not
    /// hold. Always indicates a bug in this crate, never a user error.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
