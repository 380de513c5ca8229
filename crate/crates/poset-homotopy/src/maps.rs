//! Deciding strong homotopy and recognising adjoint pairs.

use std::collections::HashMap;
use std::collections::VecDeque;

use poset_core::{MonotoneMap, PosetError};

use crate::chain::HomotopyChain;
use crate::error::HomotopyError;

/// Decides whether `f` and `g` (same carriers) are strongly homotopic and,
/// if so, returns a zig-zag witness.
///
/// Search runs over single-point moves: change one image to a comparable
/// value and keep monotonicity. Any two pointwise-comparable maps are joined
/// by such moves, so components here coincide with components of the full
/// mapping poset — without materializing it. The budget bounds the
/// reachable-space size `|cod|^|dom|`; exceeding it is an error, never a
/// silent "no".
pub fn strong_homotopic(
    f: &MonotoneMap,
    g: &MonotoneMap,
    budget: u64,
) -> Result<Option<HomotopyChain>, HomotopyError> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(HomotopyError::Poset(PosetError::CarrierMismatch {
            context: "strong homotopy needs identical carriers",
        }));
    }
    let dom = f.dom().clone();
    let cod = f.cod().clone();
    let space = (cod.size() as u128).saturating_pow(dom.size() as u32);
    if space > budget as u128 {
        return Err(HomotopyError::Poset(PosetError::BudgetExceeded {
            needed: space,
            budget,
        }));
    }

    let start = f.assignment().to_vec();
    let goal = g.assignment().to_vec();
    if start == goal {
        return Ok(Some(HomotopyChain::trivial(f.clone())));
    }

    let n = dom.size();
    let mut parent: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    parent.insert(start.clone(), start.clone());
    let mut queue = VecDeque::from([start.clone()]);

    while let Some(a) = queue.pop_front() {
        for pos in 0..n {
            for v in 0..cod.size() {
                if v == a[pos] || !cod.comparable(v, a[pos]) {
                    continue;
                }
                // incremental monotonicity: only constraints through `pos`
                let ok = (0..n).all(|q| {
                    (q == pos)
                        || (!dom.leq(q, pos) || cod.leq(a[q], v))
                            && (!dom.leq(pos, q) || cod.leq(v, a[q]))
                });
                if !ok {
                    continue;
                }
                let mut b = a.clone();
                b[pos] = v;
                if parent.contains_key(&b) {
                    continue;
                }
                parent.insert(b.clone(), a.clone());
                if b == goal {
                    // reconstruct the move sequence
                    let mut path = vec![b.clone()];
                    let mut cur = b;
                    while cur != start {
                        cur = parent[&cur].clone();
                        path.push(cur.clone());
                    }
                    path.reverse();
                    let steps = path
                        .into_iter()
                        .map(|a| {
                            MonotoneMap::new(dom.clone(), cod.clone(), a)
                                .expect("search visits only monotone assignments")
                        })
                        .collect();
                    return Ok(Some(HomotopyChain::new(steps)?));
                }
                queue.push_back(b);
            }
        }
    }
    Ok(None)
}

/// The adjoints of a map, where they exist.
///
/// `right` is the map `g` with `f(p) <= q  iff  p <= g(q)`; it exists exactly
/// when every slice `{p : f(p) <= q}` has a maximum. `left` is dual. Either
/// adjunction forces `g` monotone and makes `f` a strong homotopy
/// equivalence.
#[derive(Clone, Debug)]
pub struct AdjointPair {
    pub left: Option<MonotoneMap>,
    pub right: Option<MonotoneMap>,
}

pub fn find_adjoints(f: &MonotoneMap) -> AdjointPair {
    let dom = f.dom();
    let cod = f.cod();

    let right = (0..cod.size())
        .map(|q| {
            let slice: Vec<usize> = (0..dom.size())
                .filter(|&p| cod.leq(f.apply(p), q))
                .collect();
            dom.maximum_of(&slice)
        })
        .collect::<Option<Vec<usize>>>()
        .map(|assignment| {
            MonotoneMap::new(cod.clone(), dom.clone(), assignment)
                .expect("right adjoints are monotone by construction")
        });

    let left = (0..cod.size())
        .map(|q| {
            let slice: Vec<usize> = (0..dom.size())
                .filter(|&p| cod.leq(q, f.apply(p)))
                .collect();
            dom.minimum_of(&slice)
        })
        .collect::<Option<Vec<usize>>>()
        .map(|assignment| {
            MonotoneMap::new(cod.clone(), dom.clone(), assignment)
                .expect("left adjoints are monotone by construction")
        });

    AdjointPair { left, right }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poset_core::{Poset, DEFAULT_BUDGET};
    use std::sync::Arc;

    #[test]
    fn constants_on_a_chain_connect_through_identity() {
        let c2 = Arc::new(Poset::total_order(2));
        let c0 = MonotoneMap::constant(c2.clone(), c2.clone(), 0).unwrap();
        let c1 = MonotoneMap::constant(c2.clone(), c2.clone(), 1).unwrap();
        let chain = strong_homotopic(&c0, &c1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(chain.first(), &c0);
        assert_eq!(chain.last(), &c1);
        // the path must pass through the identity (0,1): it is the only
        // other monotone self-map
        assert!(chain
            .steps()
            .iter()
            .any(|s| s.assignment() == [0, 1]));
    }

    #[test]
    fn antichain_constants_are_not_homotopic() {
        let a2 = Arc::new(Poset::antichain(2));
        let c0 = MonotoneMap::constant(a2.clone(), a2.clone(), 0).unwrap();
        let c1 = MonotoneMap::constant(a2.clone(), a2.clone(), 1).unwrap();
        assert!(strong_homotopic(&c0, &c1, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn budget_violations_are_errors() {
        let b3 = Arc::new(Poset::subset_lattice(3).unwrap());
        let id = MonotoneMap::identity(b3.clone());
        let c = MonotoneMap::constant(b3.clone(), b3.clone(), 0).unwrap();
        assert!(matches!(
            strong_homotopic(&id, &c, 10),
            Err(HomotopyError::Poset(PosetError::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let c2 = Arc::new(Poset::total_order(2));
        let c3 = Arc::new(Poset::total_order(3));
        let f = MonotoneMap::identity(c2.clone());
        let g = MonotoneMap::identity(c3.clone());
        assert!(strong_homotopic(&f, &g, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn lattice_inclusion_of_top_has_left_adjoint() {
        // point -> B2 at the top: left adjoint collapses everything up
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let pt = Arc::new(Poset::total_order(1));
        let top = MonotoneMap::new(pt.clone(), b2.clone(), vec![3]).unwrap();
        let adj = find_adjoints(&top);
        // f(p) <= q iff p <= g(q) wants g(q) = point for q = top only;
        // slices for lower q are empty, so no right adjoint
        assert!(adj.right.is_none());
        // left: {p : q <= f(p)} = {pt} for every q, minimum pt
        let left = adj.left.unwrap();
        assert_eq!(left.assignment(), &[0, 0, 0, 0]);
    }

    #[test]
    fn meet_with_fixed_element_is_right_adjoint_of_inclusion() {
        // the inclusion {A : A <= {0}} -> B2 has right adjoint A |-> A /\ {0}
        let b2 = Arc::new(Poset::subset_lattice(2).unwrap());
        let (down, inc) = MonotoneMap::identity(b2.clone()).comma_over(1).unwrap();
        assert_eq!(down.size(), 2);
        let adj = find_adjoints(&inc);
        let right = adj.right.unwrap();
        // {} /\ {0} = {}, {0} /\ {0} = {0}, {1} /\ {0} = {}, {0,1} /\ {0} = {0}
        assert_eq!(right.assignment(), &[0, 1, 0, 1]);
        // adjunction biconditional, checked exhaustively
        for p in 0..down.size() {
            for q in 0..b2.size() {
                assert_eq!(
                    b2.leq(inc.apply(p), q),
                    down.leq(p, right.apply(q)),
                );
            }
        }
    }
}
