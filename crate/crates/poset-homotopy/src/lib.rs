//! Strong homotopy theory of finite posets.
//!
//! Two monotone maps with the same carriers are strongly homotopic when they
//! sit in the same connected component of the mapping poset, i.e. are joined
//! by a zig-zag of pointwise comparabilities. This crate decides that
//! relation, removes beat points to compute cores, certifies strong
//! contractibility two independent ways, recognises adjoint pairs, checks
//! homotopy cofinality/finality through comma posets, and compares
//! barycentric subdivisions with their parents.

mod chain;
mod cofinality;
mod contract;
mod error;
mod maps;
mod subdivide;

pub use chain::HomotopyChain;
pub use cofinality::{is_homotopy_cofinal, is_homotopy_final, CofinalityReport, CommaEvidence, Verdict};
pub use contract::{
    beat_points, contractibility_oracle, core, core_reduction, is_strongly_contractible,
    CoreReduction,
};
pub use error::HomotopyError;
pub use maps::{find_adjoints, strong_homotopic, AdjointPair};
pub use subdivide::{subdivision_homotopy_chain, subdivision_map};
