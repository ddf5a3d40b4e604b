//! Branch-set witnesses for graph minors.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Disjoint vertex subsets of a host graph, one per vertex of `target`.
/// Contracting each set yields a graph containing `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
    pub target: Graph,
}

/// Why a witness was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    /// Number of branch sets differs from the target's vertex count.
    Arity { expected: usize, found: usize },
    Empty(usize),
    /// A branch set names a vertex outside the host.
    OutOfRange { set: usize, vertex: usize },
    Overlap { vertex: usize },
    Disconnected(usize),
    MissingEdge(usize, usize),
}

impl MinorWitness {
    pub fn new(branch_sets: Vec<Vec<usize>>, target: Graph) -> Self {
        MinorWitness {
            branch_sets,
            target,
        }
    }

    /// Verifies disjointness, connectivity of every branch set, and that every
    /// target edge is realized by some host edge. Runs in `O(|V| + |E|)` on
    /// the host plus the target edge count.
    pub fn check(&self, host: &Graph) -> Result<(), WitnessViolation> {
        let target = &self.target;
        if target.n() != self.branch_sets.len() {
            return Err(WitnessViolation::Arity {
                expected: target.n(),
                found: self.branch_sets.len(),
            });
        }
        let mut owner = vec![usize::MAX; host.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(WitnessViolation::Empty(i));
            }
            for &v in set {
                if v >= host.n() {
                    return Err(WitnessViolation::OutOfRange { set: i, vertex: v });
                }
                if owner[v] != usize::MAX {
                    return Err(WitnessViolation::Overlap { vertex: v });
                }
                owner[v] = i;
            }
        }
        let mut seen = vec![false; host.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            let mut stack = vec![set[0]];
            seen[set[0]] = true;
            let mut reached = 1;
            while let Some(u) = stack.pop() {
                for &w in host.neighbors(u) {
                    if owner[w] == i && !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
            if reached != set.len() {
                return Err(WitnessViolation::Disconnected(i));
            }
        }
        let mut realized = std::collections::HashSet::new();
        for &(u, v) in host.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                realized.insert((a.min(b), a.max(b)));
            }
        }
        for &(a, b) in target.edges() {
            if !realized.contains(&(a, b)) {
                return Err(WitnessViolation::MissingEdge(a, b));
            }
        }
        Ok(())
    }

    pub fn verify(&self, host: &Graph) -> bool {
        self.check(host).is_ok()
    }
}

/// Convenience form of [`MinorWitness::check`].
pub fn verify_minor_witness(host: &Graph, witness: &MinorWitness) -> bool {
    witness.verify(host)
}
