use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A vertex coloring with dense color ids `0..count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// Relabels arbitrary color keys densely in order of first appearance.
    pub fn from_keys<K: PartialEq + Clone>(keys: &[K]) -> Self {
        let mut seen: Vec<K> = Vec::new();
        let colors = keys
            .iter()
            .map(|k| match seen.iter().position(|s| s == k) {
                Some(i) => i,
                None => {
                    seen.push(k.clone());
                    seen.len() - 1
                }
            })
            .collect();
        Coloring {
            colors,
            count: seen.len(),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.is_proper_coloring(&self.colors)
    }

    /// Vertices of each color class, by color id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}
