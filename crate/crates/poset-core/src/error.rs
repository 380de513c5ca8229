//! Error type shared by the poset kernel.

use thiserror::Error;

/// Everything that can go wrong while building or transforming posets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    /// The generating relation is not antisymmetric; the witness lists the
    /// labels of a directed cycle in the input pairs.
    #[error("relation has a cycle: {}", cycle.join(" -> "))]
    Cycle { cycle: Vec<String> },

    #[error("element index {index} out of range for poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate index {index} in element subset")]
    DuplicateIndex { index: usize },

    #[error(
        "assignment is not monotone: {dom_from} <= {dom_to} in the domain \
         but {cod_from} is not <= {cod_to} in the codomain"
    )]
    NotMonotone {
        dom_from: String,
        dom_to: String,
        cod_from: String,
        cod_to: String,
    },

    #[error("assignment length {got} does not match domain size {expected}")]
    AssignmentLength { got: usize, expected: usize },

    #[error("mismatched carriers: {context}")]
    CarrierMismatch { context: &'static str },

    #[error("subset lattice on {requested} generators exceeds the cap of {cap}")]
    SubsetLatticeCap { requested: usize, cap: usize },

    #[error("enumeration needs {needed} candidates, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("poset with {size} elements exceeds the materialization cap of {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("a chain must have at least one member")]
    EmptyChain,

    #[error("elements {a} and {b} are incomparable, so the set is not a chain")]
    NotAChain { a: String, b: String },
}
