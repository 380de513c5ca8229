//! The monoid of upward-closed families of level sets.
//!
//! Fix `n*` levels `N = {0, ..., n*-1}`. A [`LevelSet`] is a subset of `N`;
//! an [`UpSet`] is an upward-closed family of level sets. Upward-closed
//! families form a commutative-looking but genuinely noncommutative monoid
//! under the graded product [`star`], which joins a member of the left
//! factor to a member of the right factor whenever the first sits entirely
//! at or below the second. The monoid is ordered by reverse inclusion of
//! families, with the full family as identity and least element.
//!
//! Beyond the algebra, the crate exposes the geometry used to reason about
//! the product: the sieve of splittable pairs [`m_poset`], the restricted
//! pair poset [`ostar_poset`] with its union projection, the interpolating
//! self-maps [`alpha_map`]/[`beta_map`], cofinality checks for the
//! projection, and closed-form contraction witnesses for its comma posets.

mod catalogue;
mod closure;
mod enumerate;
mod error;
mod geometry;
mod level;
mod thread;
mod upset;

pub use catalogue::catalogue3;
pub use closure::{is_thread_realizable, submonoid_closure, ClosureResult, DEFAULT_CLOSURE_BUDGET};
pub use enumerate::{enumerate_q, q_poset, QPoset, Q_ENUMERATION_CAP};
pub use error::ChromaticError;
pub use geometry::{
    alpha_map, beta_map, check_sigma_cofinal, check_sigma_final, level_poset, m_poset,
    ostar_poset, sg_cofinal_witness, sg_final_witness, MPoset, OStarPoset, SgCofinalWitness,
    SgFinalWitness,
};
pub use level::{angle, LevelSet, N_STAR_CAP};
pub use thread::{thread_set, thread_set_by_star, ThreadList};
pub use upset::{kappa, star, star_u_rule, u_of, v_of, UpSet};
