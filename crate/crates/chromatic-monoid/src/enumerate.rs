//! Exhaustive enumeration of all upward-closed families at a given height,
//! and the poset they form under reverse inclusion.

use std::sync::Arc;

use poset_core::Poset;

use crate::error::ChromaticError;
use crate::upset::UpSet;

/// Largest height enumerated; the count grows like a Dedekind number, so
/// one more step would already be out of desk range.
pub const Q_ENUMERATION_CAP: u8 = 5;

/// Materializing the full poset is quadratic in an already fast-growing
/// count, so it stops one step earlier than plain enumeration.
const Q_POSET_CAP: u8 = 4;

/// Every upward-closed family over `n_star` levels, ascending by family
/// bitmask.
///
/// The recursion splits members by their top level: a family over `n`
/// levels is `low ∪ {A ∪ {n-1} : A ∈ high}` for a unique pair of families
/// `low ⊆ high` over `n-1` levels, and the bitmask is `low` in the low
/// half-word with `high` in the high half-word.
pub fn enumerate_q(n_star: u8) -> Result<Vec<UpSet>, ChromaticError> {
    if n_star > Q_ENUMERATION_CAP {
        return Err(ChromaticError::EnumerationCap {
            n_star,
            cap: Q_ENUMERATION_CAP,
        });
    }
    let mut families: Vec<u64> = vec![0b0, 0b1];
    for n in 1..=n_star {
        let half = 1u32 << (n - 1);
        let mut next = Vec::with_capacity(families.len() * 2);
        for &high in &families {
            for &low in &families {
                if low & !high == 0 {
                    next.push(low | high << half);
                }
            }
        }
        families = next;
    }
    Ok(families
        .into_iter()
        .map(|family| UpSet::new_unchecked(n_star, family))
        .collect())
}

/// The poset of all upward-closed families at one height, ordered by
/// reverse inclusion: the full family is least, the empty family greatest.
#[derive(Clone, Debug)]
pub struct QPoset {
    n_star: u8,
    poset: Arc<Poset>,
    elements: Vec<UpSet>,
}

impl QPoset {
    pub fn n_star(&self) -> u8 {
        self.n_star
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// Elements in the same ascending-bitmask order as [`enumerate_q`];
    /// positions match poset indices.
    pub fn elements(&self) -> &[UpSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, index: usize) -> &UpSet {
        &self.elements[index]
    }

    pub fn index_of(&self, u: &UpSet) -> Option<usize> {
        if u.n_star() != self.n_star {
            return None;
        }
        self.elements
            .binary_search_by_key(&u.family(), |e| e.family())
            .ok()
    }
}

/// Builds the reverse-inclusion poset on all upward-closed families.
pub fn q_poset(n_star: u8) -> Result<QPoset, ChromaticError> {
    if n_star > Q_POSET_CAP {
        return Err(ChromaticError::EnumerationCap {
            n_star,
            cap: Q_POSET_CAP,
        });
    }
    let elements = enumerate_q(n_star)?;
    let labels: Vec<String> = elements.iter().map(|u| u.render()).collect();
    let mut pairs = Vec::new();
    for (i, u) in elements.iter().enumerate() {
        for (j, v) in elements.iter().enumerate() {
            if i != j && u.le(v) {
                pairs.push((i, j));
            }
        }
    }
    let poset = Arc::new(Poset::build(labels, &pairs)?);
    Ok(QPoset {
        n_star,
        poset,
        elements,
    })
}
