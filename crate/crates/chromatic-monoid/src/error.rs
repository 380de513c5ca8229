//! Error type for the monoid layer.

use poset_core::PosetError;
use poset_homotopy::HomotopyError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChromaticError {
    #[error("level count {n_star} exceeds the cap of {cap}")]
    NStarTooLarge { n_star: u8, cap: u8 },

    #[error("level {level} out of range for n* = {n_star}")]
    LevelOutOfRange { level: u8, n_star: u8 },

    #[error("family is not upward closed: contains {member} but not {above}")]
    NotUpwardClosed { member: String, above: String },

    #[error("operands mix different level counts: {left} vs {right}")]
    MixedLevels { left: u8, right: u8 },

    #[error("full enumeration is capped at n* = {cap}, got {n_star}")]
    EnumerationCap { n_star: u8, cap: u8 },

    #[error("map index {index} out of range, expected 0..={max}")]
    MapIndexOutOfRange { index: u8, max: u8 },

    #[error("{set} is not a member of the product family")]
    NotInProduct { set: String },

    #[error("closure exceeded the budget of {budget} elements")]
    ClosureBudget { budget: u64 },

    #[error(transparent)]
    Poset(#[from] PosetError),

    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
}
