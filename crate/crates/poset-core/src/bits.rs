//! Packed bit rows backing the order relation.

/// Fixed-length bit vector; one row of the `leq` matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn or_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn and_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// `self ⊆ other` as sets of indices.
    pub fn is_subset(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_crosses_word_boundaries() {
        let mut row = BitRow::new(130);
        for i in [0, 63, 64, 127, 129] {
            row.set(i);
        }
        assert_eq!(row.ones().collect::<Vec<_>>(), vec![0, 63, 64, 127, 129]);
        assert_eq!(row.count(), 5);
    }

    #[test]
    fn subset_test_spans_words() {
        let mut a = BitRow::new(70);
        let mut b = BitRow::new(70);
        a.set(3);
        a.set(65);
        b.set(3);
        b.set(65);
        b.set(10);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
    }
}
