//! Threads: nondecreasing selections through a list of level sets.

use std::fmt;

use crate::error::ChromaticError;
use crate::level::{check_n_star, LevelSet};
use crate::upset::{star, v_of, UpSet};

/// An ordered list of level sets over one `n*`. A *thread* picks one level
/// from each entry, never decreasing along the list; its value is the set of
/// picked levels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThreadList {
    n_star: u8,
    entries: Vec<LevelSet>,
}

impl ThreadList {
    pub fn new(n_star: u8, entries: Vec<LevelSet>) -> Result<ThreadList, ChromaticError> {
        check_n_star(n_star)?;
        for e in &entries {
            if e.n_star() != n_star {
                return Err(ChromaticError::MixedLevels {
                    left: n_star,
                    right: e.n_star(),
                });
            }
        }
        Ok(ThreadList { n_star, entries })
    }

    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn entries(&self) -> &[LevelSet] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `"T({0},{1,2})"`; the empty list renders as `"T()"`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.render()).collect();
        format!("T({})", parts.join(","))
    }
}

impl fmt::Display for ThreadList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The upward closure of all thread values, computed by dynamic programming
/// over (entry index, last picked level): each state carries the family of
/// level sets collectable so far.
///
/// The empty list has exactly the empty thread, so it yields the full
/// family; a list with an unreachable entry (nothing at or above the
/// previous pick) yields the empty family.
pub fn thread_set(t: &ThreadList) -> UpSet {
    let n = t.n_star;
    // families[last] = set of achievable pick-unions whose maximum pick was
    // `last` (entry i processed so far); families are bitmasks over subsets
    let mut families = vec![0u64; n as usize + 1];
    families[0] = 1; // the empty union, nothing picked yet (last = level 0 floor)

    for entry in &t.entries {
        let mut next = vec![0u64; n as usize + 1];
        for last in 0..=n as usize {
            let fam = families[last];
            if fam == 0 {
                continue;
            }
            for pick in last as u8..n {
                if !entry.contains(pick) {
                    continue;
                }
                // add `pick` to every collected union
                let mut f = fam;
                let mut shifted = 0u64;
                while f != 0 {
                    let m = f.trailing_zeros();
                    f &= f - 1;
                    shifted |= 1 << (m | 1 << pick);
                }
                next[pick as usize] |= shifted;
            }
        }
        families = next;
    }

    let mut union = 0u64;
    for fam in families {
        union |= fam;
    }
    // upward closure of the collected thread values
    let mut family = union;
    for l in 0..n {
        let mut f = family;
        let mut grown = 0u64;
        while f != 0 {
            let m = f.trailing_zeros();
            f &= f - 1;
            grown |= 1 << (m | 1 << l);
        }
        family |= grown;
    }
    UpSet::new(n, family).expect("upward closure is closed")
}

/// The same family as an iterated product of the `v`-cones of the entries.
/// Kept separate from [`thread_set`] so the two routes can check each other.
pub fn thread_set_by_star(t: &ThreadList) -> UpSet {
    let mut acc = UpSet::full(t.n_star).expect("n* was validated on construction");
    for e in &t.entries {
        acc = star(&acc, &v_of(e));
    }
    acc
}
