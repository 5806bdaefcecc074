use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed input: out-of-range index, empty set where one is required, bad parameter.
    #[error("invalid input: {0}")]
    Input(String),

    /// An exhaustive computation would exceed its configured limit.
    #[error("resource limit exceeded: {what} needs {required}, limit is {limit}")]
    Resource {
        what: String,
        required: u128,
        limit: u128,
    },

    /// No element of `set` satisfies the accountability inequality, so no greedy
    /// order exists for it.
    #[error("objective is not accountable on {set}")]
    AccountabilityViolation { set: Subset },

    /// Optimum densities increased from `k` to `k + 1` on an objective flagged accountable.
    #[error("optimum density increases from cardinality {k} to {}", k + 1)]
    DensityIncrease { k: usize },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(what: impl Into<String>, required: u128, limit: u128) -> Self {
        Error::Resource {
            what: what.into(),
            required,
            limit,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
