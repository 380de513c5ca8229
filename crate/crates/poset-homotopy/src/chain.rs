//! Zig-zag witnesses for strong homotopy.

use poset_core::MonotoneMap;

use crate::error::HomotopyError;

/// A homotopy between its first and last step: a nonempty sequence of
/// monotone maps sharing both carriers in which consecutive maps are
/// pointwise comparable (in either direction). A single step witnesses the
/// trivial homotopy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomotopyChain {
    steps: Vec<MonotoneMap>,
}

impl HomotopyChain {
    pub fn new(steps: Vec<MonotoneMap>) -> Result<HomotopyChain, HomotopyError> {
        if steps.is_empty() {
            return Err(HomotopyError::InvalidChain { index: 0 });
        }
        for (k, pair) in steps.windows(2).enumerate() {
            let comparable = pair[0]
                .pointwise_comparable(&pair[1])
                .map_err(|_| HomotopyError::InvalidChain { index: k + 1 })?;
            if !comparable {
                return Err(HomotopyError::InvalidChain { index: k + 1 });
            }
        }
        Ok(HomotopyChain { steps })
    }

    /// The identity homotopy on a single map.
    pub fn trivial(f: MonotoneMap) -> HomotopyChain {
        HomotopyChain { steps: vec![f] }
    }

    /// Builds a chain while collapsing consecutive duplicate steps.
    pub fn new_deduped(steps: Vec<MonotoneMap>) -> Result<HomotopyChain, HomotopyError> {
        let mut deduped: Vec<MonotoneMap> = Vec::with_capacity(steps.len());
        for s in steps {
            if deduped.last() != Some(&s) {
                deduped.push(s);
            }
        }
        HomotopyChain::new(deduped)
    }

    pub fn first(&self) -> &MonotoneMap {
        self.steps.first().unwrap()
    }

    pub fn last(&self) -> &MonotoneMap {
        self.steps.last().unwrap()
    }

    pub fn steps(&self) -> &[MonotoneMap] {
        &self.steps
    }

    /// Number of comparability moves (steps minus one).
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    /// True when the chain is a single map.
    pub fn is_empty(&self) -> bool {
        self.steps.len() == 1
    }

    /// The same witness read backwards.
    pub fn reversed(&self) -> HomotopyChain {
        let mut steps = self.steps.clone();
        steps.reverse();
        HomotopyChain { steps }
    }

    /// Concatenation; requires `self.last() == other.first()`.
    pub fn concat(&self, other: &HomotopyChain) -> Result<HomotopyChain, HomotopyError> {
        if self.last() != other.first() {
            return Err(HomotopyError::InvalidChain { index: self.steps.len() });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().skip(1).cloned());
        Ok(HomotopyChain { steps })
    }
}
