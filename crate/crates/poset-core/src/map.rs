//! Monotone maps and the mapping poset.

use std::sync::Arc;

use crate::bits::BitRow;
use crate::error::PosetError;
use crate::poset::Poset;

/// A monotone map between two shared poset carriers. Construction checks
/// monotonicity, so every value of this type is a genuine map of posets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneMap {
    dom: Arc<Poset>,
    cod: Arc<Poset>,
    assignment: Vec<usize>,
}

impl MonotoneMap {
    /// Checks length, range and monotonicity, then wraps the assignment.
    pub fn new(
        dom: Arc<Poset>,
        cod: Arc<Poset>,
        assignment: Vec<usize>,
    ) -> Result<MonotoneMap, PosetError> {
        if assignment.len() != dom.size() {
            return Err(PosetError::AssignmentLength {
                got: assignment.len(),
                expected: dom.size(),
            });
        }
        for &v in &assignment {
            if v >= cod.size() {
                return Err(PosetError::IndexOutOfRange {
                    index: v,
                    size: cod.size(),
                });
            }
        }
        for i in 0..dom.size() {
            for j in 0..dom.size() {
                if dom.leq(i, j) && !cod.leq(assignment[i], assignment[j]) {
                    return Err(PosetError::NotMonotone {
                        dom_from: dom.label(i).to_string(),
                        dom_to: dom.label(j).to_string(),
                        cod_from: cod.label(assignment[i]).to_string(),
                        cod_to: cod.label(assignment[j]).to_string(),
                    });
                }
            }
        }
        Ok(MonotoneMap {
            dom,
            cod,
            assignment,
        })
    }

    /// Wraps an assignment that is monotone by construction. Validated only
    /// in debug builds.
    pub(crate) fn new_unchecked(
        dom: Arc<Poset>,
        cod: Arc<Poset>,
        assignment: Vec<usize>,
    ) -> MonotoneMap {
        debug_assert!(
            MonotoneMap::new(dom.clone(), cod.clone(), assignment.clone()).is_ok(),
            "internal map construction produced a non-monotone assignment"
        );
        MonotoneMap {
            dom,
            cod,
            assignment,
        }
    }

    pub fn identity(p: Arc<Poset>) -> MonotoneMap {
        let assignment = (0..p.size()).collect();
        MonotoneMap {
            dom: p.clone(),
            cod: p,
            assignment,
        }
    }

    /// The map sending everything to `value`.
    pub fn constant(
        dom: Arc<Poset>,
        cod: Arc<Poset>,
        value: usize,
    ) -> Result<MonotoneMap, PosetError> {
        if value >= cod.size() {
            return Err(PosetError::IndexOutOfRange {
                index: value,
                size: cod.size(),
            });
        }
        let assignment = vec![value; dom.size()];
        Ok(MonotoneMap {
            dom,
            cod,
            assignment,
        })
    }

    pub fn dom(&self) -> &Arc<Poset> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Poset> {
        &self.cod
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// `self ∘ inner`: apply `inner` first. Requires `inner.cod == self.dom`.
    pub fn compose(&self, inner: &MonotoneMap) -> Result<MonotoneMap, PosetError> {
        if inner.cod.as_ref() != self.dom.as_ref() {
            return Err(PosetError::CarrierMismatch {
                context: "compose: inner codomain differs from outer domain",
            });
        }
        let assignment = inner
            .assignment
            .iter()
            .map(|&i| self.assignment[i])
            .collect();
        Ok(MonotoneMap {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            assignment,
        })
    }

    /// Pointwise order on maps sharing both carriers: `self(p) <= other(p)`
    /// for every `p`.
    pub fn pointwise_leq(&self, other: &MonotoneMap) -> Result<bool, PosetError> {
        self.require_same_carriers(other)?;
        Ok(self
            .assignment
            .iter()
            .zip(&other.assignment)
            .all(|(&a, &b)| self.cod.leq(a, b)))
    }

    /// Comparable in either direction under the pointwise order.
    pub fn pointwise_comparable(&self, other: &MonotoneMap) -> Result<bool, PosetError> {
        Ok(self.pointwise_leq(other)? || other.pointwise_leq(self)?)
    }

    fn require_same_carriers(&self, other: &MonotoneMap) -> Result<(), PosetError> {
        if self.dom.as_ref() != other.dom.as_ref() || self.cod.as_ref() != other.cod.as_ref() {
            return Err(PosetError::CarrierMismatch {
                context: "pointwise comparison needs identical carriers",
            });
        }
        Ok(())
    }

    /// Whether the map reflects as well as preserves order:
    /// `i <= j` in the domain exactly when image points compare.
    pub fn is_embedding(&self) -> bool {
        let n = self.dom.size();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.dom.leq(i, j) == self.cod.leq(self.assignment[i], self.assignment[j])
            })
        })
    }

    /// The same assignment viewed between the opposite posets.
    pub fn dualize(&self) -> MonotoneMap {
        MonotoneMap {
            dom: Arc::new(self.dom.dual()),
            cod: Arc::new(self.cod.dual()),
            assignment: self.assignment.clone(),
        }
    }

    /// Comma poset `f/q`: the induced subposet of the domain on
    /// `{ p : f(p) <= q }`, with its inclusion into the domain.
    pub fn comma_over(&self, q: usize) -> Result<(Arc<Poset>, MonotoneMap), PosetError> {
        if q >= self.cod.size() {
            return Err(PosetError::IndexOutOfRange {
                index: q,
                size: self.cod.size(),
            });
        }
        let subset: Vec<usize> = (0..self.dom.size())
            .filter(|&p| self.cod.leq(self.assignment[p], q))
            .collect();
        induced(&self.dom, &subset)
    }

    /// Comma poset `q/f`: the induced subposet on `{ p : q <= f(p) }`.
    pub fn comma_under(&self, q: usize) -> Result<(Arc<Poset>, MonotoneMap), PosetError> {
        if q >= self.cod.size() {
            return Err(PosetError::IndexOutOfRange {
                index: q,
                size: self.cod.size(),
            });
        }
        let subset: Vec<usize> = (0..self.dom.size())
            .filter(|&p| self.cod.leq(q, self.assignment[p]))
            .collect();
        induced(&self.dom, &subset)
    }
}

/// Induced subposet on `subset` (distinct valid indices, kept in the given
/// order), together with its embedding into the parent.
pub fn induced(
    parent: &Arc<Poset>,
    subset: &[usize],
) -> Result<(Arc<Poset>, MonotoneMap), PosetError> {
    let n = parent.size();
    let mut seen = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(PosetError::IndexOutOfRange { index: i, size: n });
        }
        if seen[i] {
            return Err(PosetError::DuplicateIndex { index: i });
        }
        seen[i] = true;
    }
    let labels = subset.iter().map(|&i| parent.label(i).to_string()).collect();
    let sub = Arc::new(Poset::from_leq(labels, |a, b| {
        parent.leq(subset[a], subset[b])
    }));
    let embedding = MonotoneMap::new_unchecked(sub.clone(), parent.clone(), subset.to_vec());
    Ok((sub, embedding))
}

/// All monotone assignments `dom -> cod` in lexicographic order.
///
/// The budget bounds the search space `|cod|^|dom|` up front; enumeration
/// itself prunes on partial assignments and is far cheaper in practice.
pub fn monotone_assignments(
    dom: &Poset,
    cod: &Poset,
    budget: u64,
) -> Result<Vec<Vec<usize>>, PosetError> {
    let needed = (cod.size() as u128).saturating_pow(dom.size() as u32);
    if needed > budget as u128 {
        return Err(PosetError::BudgetExceeded { needed, budget });
    }
    if dom.size() == 0 {
        return Ok(vec![vec![]]);
    }
    if cod.size() == 0 {
        return Ok(vec![]);
    }

    // Enumerate positions in a linear-extension order so that partial
    // assignments fail early; sort the results back to plain lex order.
    let order = dom.linear_extension();
    let mut out = Vec::new();
    let mut current = vec![usize::MAX; dom.size()];
    fill(dom, cod, &order, 0, &mut current, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn fill(
    dom: &Poset,
    cod: &Poset,
    order: &[usize],
    depth: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(current.clone());
        return;
    }
    let p = order[depth];
    'candidate: for v in 0..cod.size() {
        for &q in &order[..depth] {
            if dom.leq(q, p) && !cod.leq(current[q], v) {
                continue 'candidate;
            }
            if dom.leq(p, q) && !cod.leq(v, current[q]) {
                continue 'candidate;
            }
        }
        current[p] = v;
        fill(dom, cod, order, depth + 1, current, out);
    }
    current[p] = usize::MAX;
}

/// The poset of all monotone maps `dom -> cod` under the pointwise order,
/// with decode/index round trips to [`MonotoneMap`].
#[derive(Debug)]
pub struct MappingPoset {
    dom: Arc<Poset>,
    cod: Arc<Poset>,
    pub poset: Arc<Poset>,
    assignments: Vec<Vec<usize>>,
}

impl MappingPoset {
    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn decode(&self, index: usize) -> MonotoneMap {
        MonotoneMap::new_unchecked(
            self.dom.clone(),
            self.cod.clone(),
            self.assignments[index].clone(),
        )
    }

    /// Index of a map with the same carriers, if present.
    pub fn index_of(&self, f: &MonotoneMap) -> Option<usize> {
        if f.dom().as_ref() != self.dom.as_ref() || f.cod().as_ref() != self.cod.as_ref() {
            return None;
        }
        self.assignments
            .binary_search_by(|a| a.as_slice().cmp(f.assignment()))
            .ok()
    }

    pub fn assignments(&self) -> &[Vec<usize>] {
        &self.assignments
    }
}

/// Materializes the mapping poset `cod^dom`. Fails fast if the search space
/// exceeds `budget` or the result would be too large to store densely.
pub fn mapping_poset(
    dom: &Arc<Poset>,
    cod: &Arc<Poset>,
    budget: u64,
) -> Result<MappingPoset, PosetError> {
    let assignments = monotone_assignments(dom, cod, budget)?;
    let m = assignments.len();
    if m > crate::poset::MAX_POSET_SIZE {
        return Err(PosetError::TooLarge {
            size: m,
            cap: crate::poset::MAX_POSET_SIZE,
        });
    }
    let labels = assignments
        .iter()
        .map(|a| {
            let imgs: Vec<&str> = a.iter().map(|&v| cod.label(v)).collect();
            format!("[{}]", imgs.join(","))
        })
        .collect();
    let up = (0..m)
        .map(|i| {
            let mut row = BitRow::new(m);
            for j in 0..m {
                let leq = assignments[i]
                    .iter()
                    .zip(&assignments[j])
                    .all(|(&a, &b)| cod.leq(a, b));
                if leq {
                    row.set(j);
                }
            }
            row
        })
        .collect();
    let poset = Arc::new(Poset::from_rows(labels, up));
    Ok(MappingPoset {
        dom: dom.clone(),
        cod: cod.clone(),
        poset,
        assignments,
    })
}
