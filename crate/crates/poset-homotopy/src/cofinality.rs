//! Homotopy cofinality and finality via comma posets.

use poset_core::MonotoneMap;
use serde_json::{json, Value};

use crate::contract::{core_reduction, CoreReduction};

/// Outcome of a cofinality check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Every slice `f/p` is strongly contractible.
    Cofinal,
    /// Every slice `p/f` is strongly contractible.
    Final,
    /// Some slice fails.
    Neither,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Cofinal => "cofinal",
            Verdict::Final => "final",
            Verdict::Neither => "neither",
        }
    }
}

/// Per-element evidence: the comma poset over (or under) that element, its
/// core, and whether it collapsed to a point.
pub struct CommaEvidence {
    /// Element of the codomain the slice was taken at.
    pub element: usize,
    pub reduction: CoreReduction,
    /// Inclusion of the comma poset into the domain of the checked map.
    pub inclusion: MonotoneMap,
    pub comma_size: usize,
    pub contractible: bool,
}

/// Full result of a cofinality or finality check, with one evidence row per
/// codomain element.
pub struct CofinalityReport {
    pub map: MonotoneMap,
    pub verdict: Verdict,
    pub evidence: Vec<CommaEvidence>,
}

impl CofinalityReport {
    pub fn holds(&self) -> bool {
        self.verdict != Verdict::Neither
    }

    /// Stable JSON rendering of the verdict and per-element evidence.
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "evidence": self
                .evidence
                .iter()
                .map(|e| {
                    json!({
                        "element": self.map.cod().label(e.element),
                        "comma_size": e.comma_size,
                        "contractible": e.contractible,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Checks whether `f` is homotopy cofinal: `f/p` strongly contractible for
/// every `p` in the codomain.
pub fn is_homotopy_cofinal(f: &MonotoneMap) -> CofinalityReport {
    check(f, true)
}

/// Checks whether `f` is homotopy final: `p/f` strongly contractible for
/// every `p` in the codomain.
pub fn is_homotopy_final(f: &MonotoneMap) -> CofinalityReport {
    check(f, false)
}

fn check(f: &MonotoneMap, over: bool) -> CofinalityReport {
    let mut evidence = Vec::with_capacity(f.cod().size());
    let mut all = true;
    for p in 0..f.cod().size() {
        let (comma, inclusion) = if over {
            f.comma_over(p).expect("codomain indices are valid")
        } else {
            f.comma_under(p).expect("codomain indices are valid")
        };
        let reduction = core_reduction(&comma);
        let contractible = !comma.is_empty() && reduction.core.size() == 1;
        all &= contractible;
        evidence.push(CommaEvidence {
            element: p,
            comma_size: comma.size(),
            reduction,
            inclusion,
            contractible,
        });
    }
    let verdict = match (all, over) {
        (true, true) => Verdict::Cofinal,
        (true, false) => Verdict::Final,
        (false, _) => Verdict::Neither,
    };
    CofinalityReport {
        map: f.clone(),
        verdict,
        evidence,
    }
}
