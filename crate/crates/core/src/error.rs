use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Family parameters violate a construction constraint.
    #[error("invalid algebra: {0}")]
    InvalidFamily(String),

    #[error("unrecognized algebra name {name:?}; expected one of: {grammar}")]
    Parse { name: String, grammar: &'static str },

    /// Argument outside the domain of an operation (dimension mismatch,
    /// vector that is not a root, isotropic reflection).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    Resource { cap: usize },

    #[error("u = {u} is not a principal boundary level: {reason}")]
    RejectedLevel { u: u64, reason: String },

    #[error("u = {u} is a subprincipal level; classification covers principal levels only")]
    SubprincipalLevel { u: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A checked structural invariant failed. Indicates a broken realization
    /// or an arithmetic bug, never bad user input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
