//! Beat points, cores, and two independent contractibility checks.

use std::collections::HashMap;
use std::sync::Arc;

use poset_core::{induced, monotone_assignments, MonotoneMap, Poset};

use crate::error::HomotopyError;

/// Elements whose strict down-set has a maximum or whose strict up-set has a
/// minimum. Removing such a point is a strong deformation retraction.
pub fn beat_points(p: &Poset) -> Vec<usize> {
    (0..p.size()).filter(|&i| dominator(p, i).is_some()).collect()
}

/// The element a beat point retracts onto, when one exists: first the
/// maximum of the strict down-set, then the minimum of the strict up-set.
fn dominator(p: &Poset, i: usize) -> Option<usize> {
    let down = p.strict_down_set(i);
    if let Some(m) = p.maximum_of(&down) {
        return Some(m);
    }
    let up = p.strict_up_set(i);
    p.minimum_of(&up)
}

/// Result of iterated beat-point removal: the core, the surviving original
/// indices, and both halves of the deformation retraction, which compose to
/// maps strongly homotopic to the identities.
pub struct CoreReduction {
    pub core: Arc<Poset>,
    /// Original indices that survive, in their original order.
    pub kept: Vec<usize>,
    /// Embedding of the core back into the original carrier.
    pub inclusion: MonotoneMap,
    /// Retraction of the original carrier onto the core.
    pub retraction: MonotoneMap,
    /// Each removal step as `(removed, dominator)` in original indices.
    pub removals: Vec<(usize, usize)>,
}

/// Removes beat points (lowest original index first) until none remain.
pub fn core_reduction(p: &Arc<Poset>) -> CoreReduction {
    let n = p.size();
    let mut kept: Vec<usize> = (0..n).collect();
    let mut current = p.clone();
    let mut removals: Vec<(usize, usize)> = Vec::new();

    loop {
        let beats = beat_points(&current);
        let Some(&local) = beats.first() else { break };
        let target_local = dominator(&current, local).expect("beat points have dominators");
        removals.push((kept[local], kept[target_local]));
        let rest: Vec<usize> = (0..current.size()).filter(|&i| i != local).collect();
        kept.remove(local);
        let (next, _) = induced(&current, &rest).expect("removal indices are valid");
        current = next;
    }

    // resolve each removed element through later removals onto a survivor
    let mut redirect: HashMap<usize, usize> = removals.iter().copied().collect();
    let resolve = |mut v: usize, redirect: &HashMap<usize, usize>| {
        while let Some(&next) = redirect.get(&v) {
            v = next;
        }
        v
    };
    // compress so every entry points directly at a survivor
    let keys: Vec<usize> = redirect.keys().copied().collect();
    for k in keys {
        let v = resolve(k, &redirect);
        redirect.insert(k, v);
    }

    let core_index: HashMap<usize, usize> =
        kept.iter().copied().enumerate().map(|(c, orig)| (orig, c)).collect();
    let retraction_assignment: Vec<usize> = (0..n)
        .map(|i| core_index[&resolve(i, &redirect)])
        .collect();

    let inclusion = MonotoneMap::new(current.clone(), p.clone(), kept.clone())
        .expect("core inclusion is monotone");
    let retraction = MonotoneMap::new(p.clone(), current.clone(), retraction_assignment)
        .expect("iterated beat-point retraction is monotone");
    CoreReduction {
        core: current,
        kept,
        inclusion,
        retraction,
        removals,
    }
}

/// The core alone.
pub fn core(p: &Arc<Poset>) -> Arc<Poset> {
    core_reduction(p).core
}

/// A poset is strongly contractible exactly when its core is a point.
pub fn is_strongly_contractible(p: &Arc<Poset>) -> bool {
    !p.is_empty() && core_reduction(p).core.size() == 1
}

/// Independent contractibility check, bypassing beat points entirely: the
/// identity is strongly homotopic to a constant iff it reaches one through
/// single-point comparability moves among monotone self-maps. Connectivity
/// is tracked with union-find over all self-assignments.
///
/// Negative answers under a blown budget surface as errors, never as
/// `false`.
pub fn contractibility_oracle(p: &Arc<Poset>, budget: u64) -> Result<bool, HomotopyError> {
    if p.is_empty() {
        return Ok(false);
    }
    let maps = monotone_assignments(p, p, budget)?;
    let index: HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(k, a)| (a.as_slice(), k)).collect();

    let mut uf = UnionFind::new(maps.len());
    let n = p.size();
    for (k, a) in maps.iter().enumerate() {
        // single-point moves: bump one value to a strictly larger image;
        // downward moves are the same edges from the other end
        for pos in 0..n {
            for v in p.strict_up_set(a[pos]) {
                let mut b = a.clone();
                b[pos] = v;
                if let Some(&j) = index.get(b.as_slice()) {
                    uf.union(k, j);
                }
            }
        }
    }

    let identity: Vec<usize> = (0..n).collect();
    let id_class = uf.find(index[identity.as_slice()]);
    Ok((0..n).any(|c| {
        let constant = vec![c; n];
        uf.find(index[constant.as_slice()]) == id_class
    }))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poset_core::DEFAULT_BUDGET;

    fn arc(p: Poset) -> Arc<Poset> {
        Arc::new(p)
    }

    #[test]
    fn lattice_collapses_to_a_point() {
        let b3 = arc(Poset::subset_lattice(3).unwrap());
        let r = core_reduction(&b3);
        assert_eq!(r.core.size(), 1);
        assert!(is_strongly_contractible(&b3));
        assert_eq!(r.removals.len(), 7);
    }

    #[test]
    fn antichain_has_no_beat_points() {
        let a3 = arc(Poset::antichain(3));
        assert!(beat_points(&a3).is_empty());
        assert_eq!(core(&a3).size(), 3);
        assert!(!is_strongly_contractible(&a3));
    }

    #[test]
    fn zigzag_fence_is_its_own_core() {
        // 0 < 1 > 2 < 3: connected but not contractible, no beat points...
        // except the endpoints ARE beat points here: strict up-set of 0 is
        // {1}, which has a minimum. The fence collapses stepwise to a point.
        let fence = arc(Poset::build(
            (0..4).map(|i| i.to_string()).collect(),
            &[(0, 1), (2, 1), (2, 3)],
        )
        .unwrap());
        assert!(is_strongly_contractible(&fence));

        // the 4-crown (two bottoms, two tops, fully crossed minus a perfect
        // matching) has no beat points and is the classic non-example
        let crown = arc(Poset::build(
            (0..4).map(|i| i.to_string()).collect(),
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap());
        assert!(beat_points(&crown).is_empty());
        assert!(!is_strongly_contractible(&crown));
    }

    #[test]
    fn retraction_composes_to_identity_on_the_core() {
        let b2 = arc(Poset::subset_lattice(2).unwrap());
        let r = core_reduction(&b2);
        let round = r.retraction.compose(&r.inclusion).unwrap();
        assert_eq!(round, MonotoneMap::identity(r.core.clone()));
    }

    #[test]
    fn oracle_agrees_with_core_on_small_examples() {
        let cases = [
            (Poset::subset_lattice(2).unwrap(), true),
            (Poset::antichain(2), false),
            (Poset::total_order(4), true),
            (
                Poset::build(
                    (0..4).map(|i| i.to_string()).collect(),
                    &[(0, 2), (0, 3), (1, 2), (1, 3)],
                )
                .unwrap(),
                false,
            ),
        ];
        for (p, expected) in cases {
            let p = arc(p);
            assert_eq!(is_strongly_contractible(&p), expected);
            assert_eq!(contractibility_oracle(&p, DEFAULT_BUDGET).unwrap(), expected);
        }
    }

    #[test]
    fn oracle_reports_blown_budget_as_error() {
        let b3 = arc(Poset::subset_lattice(3).unwrap());
        assert!(matches!(
            contractibility_oracle(&b3, 100),
            Err(HomotopyError::Poset(_))
        ));
    }

    #[test]
    fn empty_poset_is_not_contractible() {
        let e = arc(Poset::build(vec![], &[]).unwrap());
        assert!(!is_strongly_contractible(&e));
        assert_eq!(contractibility_oracle(&e, DEFAULT_BUDGET).unwrap(), false);
    }
}
