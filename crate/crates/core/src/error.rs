use thiserror::Error;

/// Errors raised by the library.
///
/// `Rejected*` variants describe bad input. `*Fault` variants mean an internal
/// consistency check failed; they indicate a bug rather than a user mistake.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidRootSystem {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("node {node} is not cominuscule for {system} (cominuscule nodes: {allowed:?})")]
    NotCominuscule {
        system: String,
        node: usize,
        allowed: Vec<usize>,
    },

    #[error("not an inversion set: {0}")]
    NotInversionSet(String),

    #[error("the extremal class ({0}) carries no (a, J) invariant")]
    ExtremalClass(&'static str),

    #[error("no Schubert class of this space has ideal {0}")]
    UnknownClass(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid (a, J) for {space}: {reason}")]
    InvalidAJ { space: String, reason: String },

    #[error("{0} has no partition model")]
    Unsupported(String),

    #[error("class is Schur rigid; no flexibility certificate exists")]
    RigidClass,

    #[error("proof check `{check}` failed: {detail}")]
    ProofCheckFault { check: String, detail: String },

    #[error("Poincaré duality fault: {0}")]
    DualityFault(String),

    #[error("internal invariant violated: {0}")]
    InvariantFault(String),

    #[error("golden fixture `{name}` is malformed: {reason}")]
    Fixture { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
