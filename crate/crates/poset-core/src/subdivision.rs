//! Chains and barycentric subdivision.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::BitRow;
use crate::error::PosetError;
use crate::map::MonotoneMap;
use crate::poset::Poset;

/// Default cap on the number of chains a subdivision may enumerate; chains
/// grow exponentially with height, so the cap keeps pathological inputs from
/// hanging the process.
pub const DEFAULT_CHAIN_CAP: u64 = 1_000_000;

/// A nonempty chain in a parent poset: pairwise-comparable elements, stored
/// ascending in the parent order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    parent: Arc<Poset>,
    members: Vec<usize>,
}

impl Chain {
    pub fn new(parent: Arc<Poset>, members: &[usize]) -> Result<Chain, PosetError> {
        if members.is_empty() {
            return Err(PosetError::EmptyChain);
        }
        let n = parent.size();
        let mut seen = vec![false; n];
        for &m in members {
            if m >= n {
                return Err(PosetError::IndexOutOfRange { index: m, size: n });
            }
            if seen[m] {
                return Err(PosetError::DuplicateIndex { index: m });
            }
            seen[m] = true;
        }
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k + 1..] {
                if !parent.comparable(a, b) {
                    return Err(PosetError::NotAChain {
                        a: parent.label(a).to_string(),
                        b: parent.label(b).to_string(),
                    });
                }
            }
        }
        let mut members = members.to_vec();
        // the relation restricted to a chain is total, so this sort is sound
        members.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if parent.leq(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(Chain { parent, members })
    }

    pub fn parent(&self) -> &Arc<Poset> {
        &self.parent
    }

    /// Members ascending in the parent order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Dimension: one less than the number of members.
    pub fn dim(&self) -> usize {
        self.members.len() - 1
    }

    /// Greatest member.
    pub fn max(&self) -> usize {
        *self.members.last().unwrap()
    }

    /// Least member.
    pub fn min(&self) -> usize {
        self.members[0]
    }
}

/// Barycentric subdivision `s(P)`: the poset of nonempty chains of the
/// parent ordered by inclusion, with the `max` projection back to the
/// parent.
pub struct Subdivision {
    parent: Arc<Poset>,
    pub poset: Arc<Poset>,
    chains: Vec<Chain>,
    /// Projection `s(P) -> P` sending a chain to its greatest member.
    pub max_map: MonotoneMap,
    index: HashMap<Vec<usize>, usize>,
}

impl Subdivision {
    pub fn new(parent: &Arc<Poset>) -> Result<Subdivision, PosetError> {
        Subdivision::with_cap(parent, DEFAULT_CHAIN_CAP)
    }

    pub fn with_cap(parent: &Arc<Poset>, cap: u64) -> Result<Subdivision, PosetError> {
        let n = parent.size();
        // comparability rows for fast "extends this chain" tests
        let comp: Vec<BitRow> = (0..n)
            .map(|i| {
                let mut row = BitRow::new(n);
                for j in 0..n {
                    if parent.comparable(i, j) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();

        // Depth-first enumeration by index-sorted member lists; the output
        // order (lexicographic in those lists) is the canonical element
        // order of s(P).
        let mut keys: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(Vec<usize>, BitRow)> = (0..n)
            .rev()
            .map(|i| (vec![i], comp[i].clone()))
            .collect();
        while let Some((members, common)) = stack.pop() {
            if keys.len() as u64 >= cap {
                return Err(PosetError::BudgetExceeded {
                    needed: keys.len() as u128 + 1,
                    budget: cap,
                });
            }
            keys.push(members.clone());
            let last = *members.last().unwrap();
            // push extensions in reverse so the stack pops them ascending
            let exts: Vec<usize> = common.ones().filter(|&q| q > last).collect();
            for &q in exts.iter().rev() {
                let mut next_members = members.clone();
                next_members.push(q);
                let mut next_common = common.clone();
                next_common.and_assign(&comp[q]);
                stack.push((next_members, next_common));
            }
        }

        let chains: Vec<Chain> = keys
            .iter()
            .map(|k| Chain::new(parent.clone(), k).expect("enumerated sets are chains"))
            .collect();
        let index: HashMap<Vec<usize>, usize> =
            keys.iter().cloned().zip(0..).collect();

        // inclusion order via member bitmasks over the parent
        let m = chains.len();
        if m > crate::poset::MAX_POSET_SIZE {
            return Err(PosetError::TooLarge {
                size: m,
                cap: crate::poset::MAX_POSET_SIZE,
            });
        }
        let masks: Vec<BitRow> = chains
            .iter()
            .map(|c| {
                let mut row = BitRow::new(n);
                for &p in c.members() {
                    row.set(p);
                }
                row
            })
            .collect();
        let labels = chains
            .iter()
            .map(|c| {
                c.members()
                    .iter()
                    .map(|&p| parent.label(p).to_string())
                    .collect::<Vec<_>>()
                    .join("<")
            })
            .collect();
        let up = (0..m)
            .map(|i| {
                let mut row = BitRow::new(m);
                for j in 0..m {
                    if masks[i].is_subset(&masks[j]) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        let poset = Arc::new(Poset::from_rows(labels, up));
        let max_map = MonotoneMap::new_unchecked(
            poset.clone(),
            parent.clone(),
            chains.iter().map(|c| c.max()).collect(),
        );
        Ok(Subdivision {
            parent: parent.clone(),
            poset,
            chains,
            max_map,
            index,
        })
    }

    pub fn parent(&self) -> &Arc<Poset> {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn chain(&self, i: usize) -> &Chain {
        &self.chains[i]
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// Looks up a chain by its member set (any order).
    pub fn index_of(&self, members: &[usize]) -> Option<usize> {
        let mut key = members.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }

    /// The `d`-skeleton: the induced subposet of chains of dimension at most
    /// `d` (a sieve in `s(P)`), its embedding, and the indices in `s(P)` of
    /// the chains of dimension exactly `d` (an antichain).
    pub fn skeleton(&self, d: usize) -> (Arc<Poset>, MonotoneMap, Vec<usize>) {
        let below: Vec<usize> = (0..self.len())
            .filter(|&i| self.chains[i].dim() <= d)
            .collect();
        let exactly: Vec<usize> = (0..self.len())
            .filter(|&i| self.chains[i].dim() == d)
            .collect();
        let (sub, emb) =
            crate::map::induced(&self.poset, &below).expect("skeleton indices are valid");
        (sub, emb, exactly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sorting_and_validation() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let c = Chain::new(b2.clone(), &[3, 0, 1]).unwrap();
        assert_eq!(c.members(), &[0, 1, 3]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.max(), 3);
        assert_eq!(c.min(), 0);
        assert!(matches!(
            Chain::new(b2.clone(), &[1, 2]),
            Err(PosetError::NotAChain { .. })
        ));
        assert!(matches!(Chain::new(b2, &[]), Err(PosetError::EmptyChain)));
    }

    #[test]
    fn subdivision_of_the_square() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let s = Subdivision::new(&b2).unwrap();
        // 4 singletons + 5 two-element chains + 2 three-element chains
        assert_eq!(s.len(), 11);
        let dims: Vec<usize> = (0..s.len()).map(|i| s.chain(i).dim()).collect();
        assert_eq!(dims.iter().filter(|&&d| d == 0).count(), 4);
        assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 5);
        assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 2);
        assert!(s.poset.check_axioms().is_ok());
    }

    #[test]
    fn max_map_is_monotone_and_surjective_on_square() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let s = Subdivision::new(&b2).unwrap();
        let mut hit = vec![false; 4];
        for i in 0..s.len() {
            hit[s.max_map.apply(i)] = true;
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn skeletons_are_sieves_and_levels_are_antichains() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let s = Subdivision::new(&b2).unwrap();
        let (sk1, emb, level1) = s.skeleton(1);
        assert_eq!(sk1.size(), 9);
        assert_eq!(level1.len(), 5);
        let image: Vec<usize> = emb.assignment().to_vec();
        assert!(s.poset.is_sieve(&image));
        // chains of one fixed dimension never nest
        for &a in &level1 {
            for &b in &level1 {
                if a != b {
                    assert!(!s.poset.comparable(a, b));
                }
            }
        }
    }

    #[test]
    fn index_lookup_ignores_member_order() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let s = Subdivision::new(&b2).unwrap();
        let i = s.index_of(&[3, 0]).unwrap();
        assert_eq!(s.chain(i).members(), &[0, 3]);
        assert!(s.index_of(&[1, 2]).is_none());
    }

    #[test]
    fn chain_cap_is_enforced() {
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        assert!(matches!(
            Subdivision::with_cap(&b2, 5),
            Err(PosetError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn empty_poset_has_empty_subdivision() {
        let empty = Arc::new(Poset::build(vec![], &[]).unwrap());
        let s = Subdivision::new(&empty).unwrap();
        assert_eq!(s.len(), 0);
    }
}
