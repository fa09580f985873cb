use thiserror::Error;

use crate::hyp::HypRef;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library. Variants are grouped by how the CLI maps
/// them to exit codes: input problems, resource limits, and mathematical
/// falsifications (precondition or consistency failures on an instance).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error at {position}: {message}")]
    Input { position: String, message: String },

    #[error("unknown wall id `{0}`")]
    UnknownWall(String),

    #[error("hyperplane {hyp} is outside the ambient bounds ({bound})")]
    OutOfBounds { hyp: HypRef, bound: String },

    #[error("resource limit exceeded: {what} (limit {limit}, needed {needed})")]
    Resource { what: String, limit: u64, needed: u64 },

    #[error("rule inconsistency: walls {} / {} / {} cannot be realized together", .triple[0], .triple[1], .triple[2])]
    Realization { triple: [HypRef; 3] },

    #[error("precondition failed: {message}")]
    Precondition { message: String, witness: Vec<HypRef> },

    #[error("internal consistency check failed: {message}")]
    Consistency { message: String, witness: Vec<HypRef> },

    #[error("directed cycle in prec graph: {0:?}")]
    Cycle(Vec<usize>),

    #[error("prec could not be decided for components {0} and {1}")]
    Undecided(usize, usize),
}

impl Error {
    pub fn input(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            position: position.into(),
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>, witness: Vec<HypRef>) -> Self {
        Error::Precondition {
            message: message.into(),
            witness,
        }
    }

    pub fn consistency(message: impl Into<String>, witness: Vec<HypRef>) -> Self {
        Error::Consistency {
            message: message.into(),
            witness,
        }
    }

    /// Hyperplanes attached to the error, if any.
    pub fn witness(&self) -> &[HypRef] {
        match self {
            Error::Precondition { witness, .. } | Error::Consistency { witness, .. } => witness,
            Error::Realization { triple } => triple,
            _ => &[],
        }
    }
}
