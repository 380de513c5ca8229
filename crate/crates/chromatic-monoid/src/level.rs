//! Level sets: subsets of the fixed level range.

use std::fmt;

use crate::error::ChromaticError;

/// Hard cap on the number of levels. Families of level sets are stored as
/// one bit per subset, so `n* = 6` (64 subsets) exactly fills a word.
pub const N_STAR_CAP: u8 = 6;

/// A subset of the levels `{0, ..., n*-1}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LevelSet {
    n_star: u8,
    mask: u32,
}

impl LevelSet {
    pub fn new(n_star: u8, mask: u32) -> Result<LevelSet, ChromaticError> {
        check_n_star(n_star)?;
        if mask >= 1 << n_star {
            let level = 31 - mask.leading_zeros();
            return Err(ChromaticError::LevelOutOfRange {
                level: level as u8,
                n_star,
            });
        }
        Ok(LevelSet { n_star, mask })
    }

    pub fn empty(n_star: u8) -> Result<LevelSet, ChromaticError> {
        LevelSet::new(n_star, 0)
    }

    /// All of `{0, ..., n*-1}`.
    pub fn all(n_star: u8) -> Result<LevelSet, ChromaticError> {
        check_n_star(n_star)?;
        Ok(LevelSet {
            n_star,
            mask: full_mask(n_star),
        })
    }

    pub fn from_levels(n_star: u8, levels: &[u8]) -> Result<LevelSet, ChromaticError> {
        check_n_star(n_star)?;
        let mut mask = 0u32;
        for &l in levels {
            if l >= n_star {
                return Err(ChromaticError::LevelOutOfRange { level: l, n_star });
            }
            mask |= 1 << l;
        }
        Ok(LevelSet { n_star, mask })
    }

    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn levels(&self) -> Vec<u8> {
        (0..self.n_star).filter(|&l| self.contains(l)).collect()
    }

    pub fn contains(&self, level: u8) -> bool {
        level < self.n_star && self.mask >> level & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn min_level(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.mask.trailing_zeros() as u8)
    }

    pub fn max_level(&self) -> Option<u8> {
        (!self.is_empty()).then(|| (31 - self.mask.leading_zeros()) as u8)
    }

    pub fn union(&self, other: &LevelSet) -> LevelSet {
        assert_eq!(self.n_star, other.n_star, "level sets mix level counts");
        LevelSet {
            n_star: self.n_star,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &LevelSet) -> LevelSet {
        assert_eq!(self.n_star, other.n_star, "level sets mix level counts");
        LevelSet {
            n_star: self.n_star,
            mask: self.mask & other.mask,
        }
    }

    pub fn complement(&self) -> LevelSet {
        LevelSet {
            n_star: self.n_star,
            mask: full_mask(self.n_star) & !self.mask,
        }
    }

    pub fn is_subset(&self, other: &LevelSet) -> bool {
        assert_eq!(self.n_star, other.n_star, "level sets mix level counts");
        self.mask & !other.mask == 0
    }

    /// Levels at or below `bound`; `bound = -1` gives the empty set.
    pub fn levels_le(&self, bound: i32) -> LevelSet {
        let keep = if bound < 0 {
            0
        } else {
            ((1u64 << (bound + 1)) - 1) as u32
        };
        LevelSet {
            n_star: self.n_star,
            mask: self.mask & keep,
        }
    }

    /// Levels at or above `bound`; `bound = n*` gives the empty set.
    pub fn levels_ge(&self, bound: i32) -> LevelSet {
        let drop = if bound <= 0 {
            0
        } else {
            ((1u64 << bound) - 1) as u32
        };
        LevelSet {
            n_star: self.n_star,
            mask: self.mask & !drop,
        }
    }

    /// `"{0,2,3}"`; the empty set renders as `"{}"`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.levels().iter().map(|l| l.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for LevelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub(crate) fn check_n_star(n_star: u8) -> Result<(), ChromaticError> {
    if n_star > N_STAR_CAP {
        return Err(ChromaticError::NStarTooLarge {
            n_star,
            cap: N_STAR_CAP,
        });
    }
    Ok(())
}

pub(crate) fn full_mask(n_star: u8) -> u32 {
    ((1u64 << n_star) - 1) as u32
}

/// The splitting relation on masks: every level of `a` lies at or below
/// every level of `b`; vacuously true when either side is empty.
#[inline]
pub(crate) fn angle_masks(a: u32, b: u32) -> bool {
    if a == 0 || b == 0 {
        return true;
    }
    let max_a = 31 - a.leading_zeros();
    b & ((1 << max_a) - 1) == 0
}

/// `A ∠ B`: `max(A) <= min(B)`, vacuous when either side is empty.
pub fn angle(a: &LevelSet, b: &LevelSet) -> bool {
    assert_eq!(a.n_star, b.n_star, "level sets mix level counts");
    angle_masks(a.mask, b.mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_rendering() {
        let a = LevelSet::from_levels(4, &[0, 2, 3]).unwrap();
        assert_eq!(a.mask(), 0b1101);
        assert_eq!(a.render(), "{0,2,3}");
        assert_eq!(LevelSet::empty(4).unwrap().render(), "{}");
        assert!(matches!(
            LevelSet::from_levels(3, &[3]),
            Err(ChromaticError::LevelOutOfRange { level: 3, .. })
        ));
        assert!(matches!(
            LevelSet::new(7, 0),
            Err(ChromaticError::NStarTooLarge { .. })
        ));
    }

    #[test]
    fn angle_cases() {
        let n = 4;
        let low = LevelSet::from_levels(n, &[0, 1]).unwrap();
        let high = LevelSet::from_levels(n, &[2, 3]).unwrap();
        let touch = LevelSet::from_levels(n, &[1, 3]).unwrap();
        let empty = LevelSet::empty(n).unwrap();
        assert!(angle(&low, &high));
        assert!(!angle(&high, &low));
        assert!(angle(&low, &touch)); // max {0,1} = 1 <= min {1,3} = 1
        assert!(!angle(&touch, &low));
        assert!(angle(&empty, &low));
        assert!(angle(&low, &empty));
        assert!(angle(&empty, &empty));
        // shared top level: {1} against {1} is fine
        let one = LevelSet::from_levels(n, &[1]).unwrap();
        assert!(angle(&one, &one));
    }

    #[test]
    fn bounds_and_cuts() {
        let a = LevelSet::from_levels(5, &[1, 3, 4]).unwrap();
        assert_eq!(a.min_level(), Some(1));
        assert_eq!(a.max_level(), Some(4));
        assert_eq!(a.levels_le(3).levels(), vec![1, 3]);
        assert_eq!(a.levels_le(-1).levels(), Vec::<u8>::new());
        assert_eq!(a.levels_ge(3).levels(), vec![3, 4]);
        assert_eq!(a.levels_ge(5).levels(), Vec::<u8>::new());
        assert_eq!(a.levels_ge(0), a);
        assert_eq!(a.complement().levels(), vec![0, 2]);
    }
}
