//! Error type for the homotopy layer.

use poset_core::PosetError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Poset(#[from] PosetError),

    #[error("maps are not pointwise comparable in the required direction")]
    NotComparable,

    #[error("chain must be nonempty and consecutive steps comparable; broken at step {index}")]
    InvalidChain { index: usize },

    #[error("constructed witness failed verification: {context}")]
    WitnessFailure { context: String },
}
