//! Upward-closed families and the graded product.

use std::fmt;

use crate::error::ChromaticError;
use crate::level::{angle_masks, check_n_star, LevelSet};

/// An upward-closed family of level sets over a fixed `n*`. The family is a
/// word of bits indexed by subset mask: bit `A` set means `A` belongs.
///
/// The natural order is *reverse* inclusion of families: the full family
/// (generated by the empty set) is least, the empty family greatest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UpSet {
    n_star: u8,
    family: u64,
}

impl UpSet {
    /// Validates upward closure: every member keeps membership when any
    /// missing level is added.
    pub fn new(n_star: u8, family: u64) -> Result<UpSet, ChromaticError> {
        check_n_star(n_star)?;
        let subsets = 1u32 << n_star;
        if n_star < 6 && family >> subsets != 0 {
            // some member uses a level outside the range; name its top level
            let bad_subset = 63 - family.leading_zeros();
            let level = 31 - bad_subset.leading_zeros();
            return Err(ChromaticError::LevelOutOfRange {
                level: level as u8,
                n_star,
            });
        }
        for a in 0..subsets {
            if family >> a & 1 == 0 {
                continue;
            }
            for l in 0..n_star {
                let above = a | (1 << l);
                if family >> above & 1 == 0 {
                    return Err(ChromaticError::NotUpwardClosed {
                        member: LevelSet::new(n_star, a).unwrap().render(),
                        above: LevelSet::new(n_star, above).unwrap().render(),
                    });
                }
            }
        }
        Ok(UpSet { n_star, family })
    }

    pub(crate) fn new_unchecked(n_star: u8, family: u64) -> UpSet {
        debug_assert!(UpSet::new(n_star, family).is_ok());
        UpSet { n_star, family }
    }

    /// The full family: every level set belongs. This is the monoid
    /// identity and the least element.
    pub fn full(n_star: u8) -> Result<UpSet, ChromaticError> {
        check_n_star(n_star)?;
        let subsets = 1u32 << n_star;
        let family = if subsets == 64 {
            u64::MAX
        } else {
            (1u64 << subsets) - 1
        };
        Ok(UpSet { n_star, family })
    }

    /// The empty family: nothing belongs. Greatest element, absorbing for
    /// the product.
    pub fn empty(n_star: u8) -> Result<UpSet, ChromaticError> {
        check_n_star(n_star)?;
        Ok(UpSet { n_star, family: 0 })
    }

    /// Smallest upward-closed family containing the given sets.
    pub fn generated_by(n_star: u8, members: &[LevelSet]) -> Result<UpSet, ChromaticError> {
        check_n_star(n_star)?;
        let mut out = UpSet { n_star, family: 0 };
        for m in members {
            if m.n_star() != n_star {
                return Err(ChromaticError::MixedLevels {
                    left: n_star,
                    right: m.n_star(),
                });
            }
            out = out.union(&u_of(m));
        }
        Ok(out)
    }

    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn family(&self) -> u64 {
        self.family
    }

    pub fn is_empty(&self) -> bool {
        self.family == 0
    }

    pub fn len(&self) -> u32 {
        self.family.count_ones()
    }

    pub fn contains(&self, a: &LevelSet) -> bool {
        assert_eq!(self.n_star, a.n_star(), "level counts differ");
        self.family >> a.mask() & 1 == 1
    }

    /// All members, ascending by mask.
    pub fn members(&self) -> Vec<LevelSet> {
        (0..1u32 << self.n_star)
            .filter(|&a| self.family >> a & 1 == 1)
            .map(|a| LevelSet::new(self.n_star, a).unwrap())
            .collect()
    }

    /// The antichain of minimal members, sorted by size then mask. The
    /// family is exactly the union of their upward cones.
    pub fn minimal_members(&self) -> Vec<LevelSet> {
        let mut mins: Vec<LevelSet> = self
            .members()
            .into_iter()
            .filter(|a| {
                a.levels().iter().all(|&l| {
                    let below = a.mask() & !(1 << l);
                    self.family >> below & 1 == 0
                })
            })
            .collect();
        mins.sort_by_key(|a| (a.len(), a.mask()));
        mins
    }

    /// Union of families (join in the inclusion order, meet in the monoid
    /// order).
    pub fn union(&self, other: &UpSet) -> UpSet {
        assert_eq!(self.n_star, other.n_star, "level counts differ");
        UpSet {
            n_star: self.n_star,
            family: self.family | other.family,
        }
    }

    /// The monoid order: reverse inclusion. `self <= other` iff `self`
    /// contains every member of `other`.
    pub fn le(&self, other: &UpSet) -> bool {
        assert_eq!(self.n_star, other.n_star, "level counts differ");
        other.family & !self.family == 0
    }

    /// Canonical text form: the minimal members between angle brackets,
    /// e.g. `⟨{0},{3},{1,2}⟩`; `⟨⟩` for the empty family and `⟨{}⟩` for the
    /// full one.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .minimal_members()
            .iter()
            .map(|a| a.render())
            .collect();
        format!("⟨{}⟩", parts.join(","))
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `u(A)`: all supersets of `A`.
pub fn u_of(a: &LevelSet) -> UpSet {
    let n = a.n_star();
    let mut family = 0u64;
    for b in 0..1u32 << n {
        if b & a.mask() == a.mask() {
            family |= 1 << b;
        }
    }
    UpSet::new_unchecked(n, family)
}

/// `v(A)`: all sets meeting `A`.
pub fn v_of(a: &LevelSet) -> UpSet {
    let n = a.n_star();
    let mut family = 0u64;
    for b in 0..1u32 << n {
        if b & a.mask() != 0 {
            family |= 1 << b;
        }
    }
    UpSet::new_unchecked(n, family)
}

/// The graded product: `U * V = { A ∪ B : A ∈ U, B ∈ V, A ∠ B }`.
///
/// Associative, with the full family as two-sided identity; monotone in
/// both arguments and distributive over unions of families.
pub fn star(u: &UpSet, v: &UpSet) -> UpSet {
    assert_eq!(u.n_star, v.n_star, "level counts differ");
    let mut family = 0u64;
    let mut uf = u.family;
    while uf != 0 {
        let a = uf.trailing_zeros();
        uf &= uf - 1;
        let mut vf = v.family;
        while vf != 0 {
            let b = vf.trailing_zeros();
            vf &= vf - 1;
            if angle_masks(a, b) {
                family |= 1 << (a | b);
            }
        }
    }
    // the product of upward-closed families is upward closed
    UpSet::new_unchecked(u.n_star, family)
}

/// Closed form for products of principal cones:
/// `u(A) * u(B) = u(A ∪ B)` when `A ∠ B`, and the empty family otherwise.
pub fn star_u_rule(a: &LevelSet, b: &LevelSet) -> UpSet {
    assert_eq!(a.n_star(), b.n_star(), "level counts differ");
    if crate::level::angle(a, b) {
        u_of(&a.union(b))
    } else {
        UpSet::new_unchecked(a.n_star(), 0)
    }
}

/// The support: levels whose singleton belongs to the family. Turns the
/// product into intersection: `kappa(U * V) = kappa(U) ∩ kappa(V)`.
pub fn kappa(u: &UpSet) -> LevelSet {
    let mut mask = 0u32;
    for l in 0..u.n_star {
        if u.family >> (1u32 << l) & 1 == 1 {
            mask |= 1 << l;
        }
    }
    LevelSet::new(u.n_star, mask).unwrap()
}
