//! The finite-poset carrier and its standard constructions.

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::bits::BitRow;
use crate::error::PosetError;

/// Hard cap on carrier size. The relation is stored densely (one bit row per
/// element), so memory grows quadratically; 32768 elements is a 128 MiB
/// matrix and well past anything the desk-scale pipelines need.
pub const MAX_POSET_SIZE: usize = 32_768;

/// Cap on `subset_lattice` generators; the lattice has `2^r` elements.
pub const SUBSET_LATTICE_CAP: usize = 6;

/// A finite poset: labelled elements `0..size` and a reflexive, transitive,
/// antisymmetric relation, one packed bit row per element.
///
/// Labels are for display only. Equality and hashing look at the relation
/// alone, so two carriers with the same `leq` matrix are interchangeable no
/// matter how their elements are named.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[i]` holds the set `{ j : i <= j }`.
    up: Vec<BitRow>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for Poset {}

impl Hash for Poset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.up.hash(state);
    }
}

impl Poset {
    /// Builds a poset from an arbitrary generating relation: the pairs are
    /// closed under reflexivity and transitivity, and the result is rejected
    /// with a witness cycle if the closure is not antisymmetric.
    pub fn build(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let n = labels.len();
        if n > MAX_POSET_SIZE {
            return Err(PosetError::TooLarge {
                size: n,
                cap: MAX_POSET_SIZE,
            });
        }
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(PosetError::IndexOutOfRange { index, size: n });
                }
            }
        }

        let mut up: Vec<BitRow> = (0..n)
            .map(|i| {
                let mut row = BitRow::new(n);
                row.set(i);
                row
            })
            .collect();
        for &(i, j) in pairs {
            up[i].set(j);
        }

        // Warshall closure over the packed rows.
        for k in 0..n {
            for i in 0..n {
                if i != k && up[i].get(k) {
                    let row = up[k].clone();
                    up[i].or_assign(&row);
                }
            }
        }

        // Antisymmetry. A violation means the generating pairs contain a
        // directed cycle; reconstruct one explicitly for the error message.
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].get(i) {
                    return Err(PosetError::Cycle {
                        cycle: witness_cycle(&labels, pairs, i, j),
                    });
                }
            }
        }

        Ok(Poset { labels, up })
    }

    /// Internal constructor for relations that are valid by construction.
    pub(crate) fn from_rows(labels: Vec<String>, up: Vec<BitRow>) -> Poset {
        let p = Poset { labels, up };
        debug_assert!(p.check_axioms().is_ok());
        p
    }

    /// Builds from a closed relation given as a predicate. The caller must
    /// supply a genuine partial order; this is checked in debug builds.
    pub(crate) fn from_leq<F: Fn(usize, usize) -> bool>(labels: Vec<String>, leq: F) -> Poset {
        let n = labels.len();
        let up = (0..n)
            .map(|i| {
                let mut row = BitRow::new(n);
                for j in 0..n {
                    if leq(i, j) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        Poset::from_rows(labels, up)
    }

    /// The total order `0 < 1 < ... < k-1` on `k` elements.
    pub fn total_order(k: usize) -> Poset {
        Poset::from_leq((0..k).map(|i| i.to_string()).collect(), |i, j| i <= j)
    }

    /// `k` pairwise-incomparable elements.
    pub fn antichain(k: usize) -> Poset {
        Poset::from_leq((0..k).map(|i| i.to_string()).collect(), |i, j| i == j)
    }

    /// Verifies reflexivity, transitivity and antisymmetry; used to guard
    /// internal constructors in debug builds and exposed for tests.
    pub fn check_axioms(&self) -> Result<(), PosetError> {
        let n = self.size();
        for i in 0..n {
            if !self.up[i].get(i) {
                return Err(PosetError::CarrierMismatch {
                    context: "relation is not reflexive",
                });
            }
            for j in self.up[i].ones() {
                if j != i && self.up[j].get(i) {
                    return Err(PosetError::Cycle {
                        cycle: vec![self.labels[i].clone(), self.labels[j].clone()],
                    });
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Err(PosetError::CarrierMismatch {
                        context: "relation is not transitive",
                    });
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].get(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{ j : i <= j }`, ascending.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        self.up[i].ones().collect()
    }

    /// `{ j : j <= i }`, ascending.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.size()).filter(|&j| self.leq(j, i)).collect()
    }

    pub fn strict_up_set(&self, i: usize) -> Vec<usize> {
        self.up[i].ones().filter(|&j| j != i).collect()
    }

    pub fn strict_down_set(&self, i: usize) -> Vec<usize> {
        (0..self.size()).filter(|&j| self.lt(j, i)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| (0..self.size()).all(|j| !self.lt(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.up[i].count() == 1)
            .collect()
    }

    /// The bottom element, if the poset has one.
    pub fn least(&self) -> Option<usize> {
        (0..self.size()).find(|&i| self.up[i].count() == self.size())
    }

    /// The top element, if the poset has one.
    pub fn greatest(&self) -> Option<usize> {
        (0..self.size()).find(|&i| (0..self.size()).all(|j| self.leq(j, i)))
    }

    /// Greatest element of `members` under the poset order, if one exists
    /// within the set (an upper bound that is itself a member).
    pub fn maximum_of(&self, members: &[usize]) -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&x| self.leq(x, m)))
    }

    /// Least element of `members` under the poset order, if one exists
    /// within the set.
    pub fn minimum_of(&self, members: &[usize]) -> Option<usize> {
        members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&x| self.leq(m, x)))
    }

    /// Whether `members` are pairwise comparable.
    pub fn is_chain(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(k, &a)| members[k + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    /// The opposite poset: same carrier, relation reversed.
    pub fn dual(&self) -> Poset {
        let n = self.size();
        let up = (0..n)
            .map(|i| {
                let mut row = BitRow::new(n);
                for j in 0..n {
                    if self.leq(j, i) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        Poset::from_rows(self.labels.clone(), up)
    }

    /// Binary product with the componentwise order. Element `(i, j)` sits at
    /// index `i * other.size() + j`; see [`product_index`].
    pub fn product(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n = self.size() * other.size();
        if n > MAX_POSET_SIZE {
            return Err(PosetError::TooLarge {
                size: n,
                cap: MAX_POSET_SIZE,
            });
        }
        let mut labels = Vec::with_capacity(n);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        let q = other.size();
        let up = (0..n)
            .map(|k| {
                let (i, j) = split_product_index(q, k);
                let mut row = BitRow::new(n);
                for i2 in self.up[i].ones() {
                    for j2 in other.up[j].ones() {
                        row.set(product_index(q, i2, j2));
                    }
                }
                row
            })
            .collect();
        Ok(Poset::from_rows(labels, up))
    }

    /// The lattice of subsets of `{0, ..., r-1}` ordered by inclusion.
    /// Element index equals the subset's bitmask.
    pub fn subset_lattice(r: usize) -> Result<Poset, PosetError> {
        if r > SUBSET_LATTICE_CAP {
            return Err(PosetError::SubsetLatticeCap {
                requested: r,
                cap: SUBSET_LATTICE_CAP,
            });
        }
        let n = 1usize << r;
        let labels = (0..n).map(|mask| set_label(mask as u32)).collect();
        Ok(Poset::from_leq(labels, |a, b| a & !b == 0))
    }

    /// Whether `subset` (distinct valid indices) is down-closed.
    pub fn is_sieve(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.size()];
        for &i in subset {
            member[i] = true;
        }
        subset
            .iter()
            .all(|&i| (0..self.size()).all(|j| !self.leq(j, i) || member[j]))
    }

    /// Whether `subset` (distinct valid indices) is up-closed.
    pub fn is_cosieve(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.size()];
        for &i in subset {
            member[i] = true;
        }
        subset
            .iter()
            .all(|&i| self.up[i].ones().all(|j| member[j]))
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between. This
    /// is the transitive reduction; `build` on these pairs restores `self`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in self.up[i].ones() {
                if i == j {
                    continue;
                }
                let direct = !(0..n).any(|k| k != i && k != j && self.lt(i, k) && self.lt(k, j));
                if direct {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Connected components of the comparability graph, each sorted
    /// ascending, listed by least member.
    pub fn pi0(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut class = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(i) = queue.pop_front() {
                class.push(i);
                for j in 0..n {
                    if !seen[j] && self.comparable(i, j) {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Height of each element: the length of the longest chain below it.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.size()];
        for &i in &self.linear_extension() {
            h[i] = (0..self.size())
                .filter(|&j| self.lt(j, i))
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// A linear extension: repeatedly remove the lowest-index minimal
    /// element. Deterministic, used wherever a compatible enumeration order
    /// is needed.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut remaining = vec![true; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .find(|&i| {
                    remaining[i] && (0..n).all(|j| !remaining[j] || !self.lt(j, i))
                })
                .expect("a finite poset always has a minimal element");
            remaining[next] = false;
            order.push(next);
        }
        order
    }
}

/// Index of the pair `(i, j)` inside `p.product(q)`.
pub fn product_index(q_size: usize, i: usize, j: usize) -> usize {
    i * q_size + j
}

/// Inverse of [`product_index`].
pub fn split_product_index(q_size: usize, k: usize) -> (usize, usize) {
    (k / q_size, k % q_size)
}

/// `"{0,2,3}"`-style rendering of a bitmask subset; `{}` when empty.
pub(crate) fn set_label(mask: u32) -> String {
    let mut parts = Vec::new();
    for b in 0..32 {
        if mask >> b & 1 == 1 {
            parts.push(b.to_string());
        }
    }
    format!("{{{}}}", parts.join(","))
}

/// Reconstructs an explicit directed cycle through `i` and `j` in the
/// generating pairs, as a label path `i -> ... -> j -> ... -> i`.
fn witness_cycle(labels: &[String], pairs: &[(usize, usize)], i: usize, j: usize) -> Vec<String> {
    let n = labels.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        if a != b {
            adj[a].push(b);
        }
    }
    let path = |from: usize, to: usize| -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([from]);
        let mut seen = vec![false; n];
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut p = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    p.push(cur);
                }
                p.reverse();
                return Some(p);
            }
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    };
    match (path(i, j), path(j, i)) {
        (Some(forward), Some(back)) => {
            let mut cycle: Vec<usize> = forward;
            cycle.extend(back.into_iter().skip(1));
            cycle.pop(); // drop the repeat of the start
            cycle.into_iter().map(|v| labels[v].clone()).collect()
        }
        _ => vec![labels[i].clone(), labels[j].clone()],
    }
}
