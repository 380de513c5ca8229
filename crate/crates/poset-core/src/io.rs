//! JSON and Graphviz interchange for posets.

use serde::{Deserialize, Serialize};

use crate::error::PosetError;
use crate::poset::Poset;

/// Wire format: labels plus generating pairs. Serialization emits covering
/// pairs (the transitive reduction); deserialization accepts any generating
/// relation and closes it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub pairs: Vec<(usize, usize)>,
}

impl Poset {
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            labels: self.labels().to_vec(),
            pairs: self.covers(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Poset, PosetError> {
        Poset::build(json.labels.clone(), &json.pairs)
    }

    /// Hasse diagram in DOT: covering edges drawn bottom-up, elements ranked
    /// by longest-chain height so levels line up.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        let heights = self.heights();
        let max_h = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=max_h {
            let level: Vec<String> = (0..self.size())
                .filter(|&i| heights[i] == h)
                .map(|i| format!("n{i};"))
                .collect();
            if !level.is_empty() {
                out.push_str(&format!("  {{ rank=same; {} }}\n", level.join(" ")));
            }
        }
        for i in 0..self.size() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(self.label(i))));
        }
        for (i, j) in self.covers() {
            out.push_str(&format!("  n{i} -> n{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
