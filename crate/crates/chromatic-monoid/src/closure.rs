//! Submonoid closures, Cayley tables, and thread realizability.

use std::collections::HashMap;

use crate::error::ChromaticError;
use crate::level::{check_n_star, LevelSet};
use crate::thread::ThreadList;
use crate::upset::{star, v_of, UpSet};

/// Ceiling on closure size before enumeration aborts.
pub const DEFAULT_CLOSURE_BUDGET: u64 = 1_000_000;

/// The submonoid generated by a list of families, with full multiplication
/// data.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub n_star: u8,
    pub generators: Vec<UpSet>,
    /// Every element of the closure in discovery order; the identity (the
    /// full family) is always element 0.
    pub elements: Vec<UpSet>,
    /// `cayley[e][g]` = index of `elements[e] * generators[g]`.
    pub cayley: Vec<Vec<usize>>,
    /// For each element, the shortest (then lexicographically least) word
    /// in generator indices that produces it. The identity gets the empty
    /// word.
    pub witnesses: Vec<Vec<usize>>,
}

impl ClosureResult {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of a family in the closure, if it lies there.
    pub fn index_of(&self, u: &UpSet) -> Option<usize> {
        self.elements.iter().position(|e| e == u)
    }

    /// Re-evaluates a witness word back to its element.
    pub fn evaluate(&self, word: &[usize]) -> UpSet {
        let mut acc = UpSet::full(self.n_star).expect("validated on construction");
        for &g in word {
            acc = star(&acc, &self.generators[g]);
        }
        acc
    }
}

/// Breadth-first closure of the generators under right multiplication,
/// starting from the identity. Breadth-first order plus ascending generator
/// index makes every recorded witness shortest-then-lex.
pub fn submonoid_closure(
    n_star: u8,
    generators: &[UpSet],
    budget: u64,
) -> Result<ClosureResult, ChromaticError> {
    check_n_star(n_star)?;
    for g in generators {
        if g.n_star() != n_star {
            return Err(ChromaticError::MixedLevels {
                left: n_star,
                right: g.n_star(),
            });
        }
    }

    let identity = UpSet::full(n_star).expect("n* already validated");
    let mut elements = vec![identity];
    let mut witnesses: Vec<Vec<usize>> = vec![vec![]];
    let mut index: HashMap<UpSet, usize> = HashMap::from([(identity, 0)]);
    let mut cayley: Vec<Vec<usize>> = Vec::new();

    let mut next = 0usize;
    while next < elements.len() {
        let element = elements[next];
        let mut row = Vec::with_capacity(generators.len());
        for (g, generator) in generators.iter().enumerate() {
            let product = star(&element, generator);
            let target = match index.get(&product) {
                Some(&t) => t,
                None => {
                    if elements.len() as u64 >= budget {
                        return Err(ChromaticError::ClosureBudget { budget });
                    }
                    let t = elements.len();
                    elements.push(product);
                    index.insert(product, t);
                    let mut word = witnesses[next].clone();
                    word.push(g);
                    witnesses.push(word);
                    t
                }
            };
            row.push(target);
        }
        cayley.push(row);
        next += 1;
    }

    Ok(ClosureResult {
        n_star,
        generators: generators.to_vec(),
        elements,
        cayley,
        witnesses,
    })
}

/// Decides whether a family is an iterated product of `v`-cones and, if so,
/// returns a witness list whose thread set reproduces it.
///
/// Realizable families are exactly the closure of all `v(A)` (the empty `A`
/// included, giving the empty family), so membership is a closure lookup.
pub fn is_thread_realizable(u: &UpSet) -> Result<Option<ThreadList>, ChromaticError> {
    let n = u.n_star();
    let generators: Vec<UpSet> = (0..1u32 << n)
        .map(|mask| v_of(&LevelSet::new(n, mask).expect("mask in range")))
        .collect();
    let closure = submonoid_closure(n, &generators, DEFAULT_CLOSURE_BUDGET)?;
    Ok(closure.index_of(u).map(|i| {
        let entries: Vec<LevelSet> = closure.witnesses[i]
            .iter()
            .map(|&g| LevelSet::new(n, g as u32).expect("generator indices are masks"))
            .collect();
        ThreadList::new(n, entries).expect("entries share n*")
    }))
}
