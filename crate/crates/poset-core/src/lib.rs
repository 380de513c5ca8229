//! Finite-poset kernel.
//!
//! Everything downstream stands on the [`Poset`] type defined here: a finite
//! carrier with a reflexive, transitive, antisymmetric relation stored as one
//! packed bit row per element. On top of it live the standard constructions
//! (dual, binary product, subset lattice, induced subposets, comma posets,
//! barycentric subdivision) and the algebra of [`MonotoneMap`]s, including
//! enumeration of the full mapping poset between two carriers.
//!
//! Labels are display-only: two posets compare equal exactly when their
//! relations agree element-for-element, whatever the labels say.

mod bits;
mod error;
mod io;
mod map;
mod poset;
mod sample;
mod subdivision;

pub use error::PosetError;
pub use io::PosetJson;
pub use map::{induced, mapping_poset, monotone_assignments, MappingPoset, MonotoneMap};
pub use poset::{product_index, split_product_index, Poset, MAX_POSET_SIZE, SUBSET_LATTICE_CAP};
pub use sample::{enumerate_posets, random_poset};
pub use subdivision::{Chain, Subdivision, DEFAULT_CHAIN_CAP};

/// Default ceiling on enumeration work (candidate assignments, chains) for
/// operations that can blow up combinatorially.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
