use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

use super::chromatic::chromatic_number;
use super::density::density_bandwidth_bound;

/// A bijection `V → {1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    /// `position[v]` is the 1-based position of vertex `v`.
    pub position: Vec<usize>,
}

impl Ordering {
    /// Builds the ordering that lists `layout[0]` first, `layout[1]` second, …
    pub fn from_layout(layout: &[usize]) -> Self {
        let mut position = vec![0; layout.len()];
        for (i, &v) in layout.iter().enumerate() {
            position[v] = i + 1;
        }
        Ordering { position }
    }

    /// Vertices in order of position.
    pub fn layout(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.position.len()];
        for (v, &p) in self.position.iter().enumerate() {
            if (1..=out.len()).contains(&p) {
                out[p - 1] = v;
            }
        }
        out
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.position.len()];
        self.position.iter().all(|&p| {
            (1..=seen.len()).contains(&p) && !std::mem::replace(&mut seen[p - 1], true)
        })
    }

    /// Largest position gap across an edge.
    pub fn bandwidth_of(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .map(|&(u, v)| self.position[u].abs_diff(self.position[v]))
            .max()
            .unwrap_or(0)
    }
}

/// Exact bandwidth with an optimal ordering.
///
/// Components are solved independently and laid out one after another in
/// order of their smallest vertex; edgeless components contribute nothing to
/// the maximum. Within a component the layout is the lexicographically
/// smallest optimal vertex sequence.
pub fn bandwidth(g: &Graph) -> Result<(usize, Ordering)> {
    g.require_edge()?;
    let mut layout = Vec::with_capacity(g.n());
    let mut best = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            layout.push(comp[0]);
            continue;
        }
        let sub = g.induced(&comp);
        let (bw, local) = component_bandwidth(&sub)?;
        best = best.max(bw);
        layout.extend(local.into_iter().map(|i| comp[i]));
    }
    Ok((best, Ordering::from_layout(&layout)))
}

fn component_bandwidth(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let lower = [
        g.max_degree().div_ceil(2),
        chromatic_number(g)?.0 - 1,
        density_bandwidth_bound(g),
    ]
    .into_iter()
    .max()
    .unwrap_or(1);
    let (upper, _) = cuthill_mckee(g);
    let dist = all_pairs(g);
    for k in lower..=upper {
        if let Some(layout) = Decision::new(g, k, &dist).solve() {
            return Ok((k, layout));
        }
    }
    unreachable!("Cuthill–McKee width {upper} is feasible")
}

/// Best bandwidth over breadth-first layouts from every start vertex.
pub fn cuthill_mckee(g: &Graph) -> (usize, Vec<usize>) {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in 0..g.n() {
        let mut seen = vec![false; g.n()];
        let mut layout = Vec::with_capacity(g.n());
        for start in std::iter::once(s).chain(0..g.n()) {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut head = layout.len();
            layout.push(start);
            while head < layout.len() {
                let u = layout[head];
                head += 1;
                let mut next: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
                next.sort_by_key(|&w| g.degree(w));
                for w in next {
                    seen[w] = true;
                    layout.push(w);
                }
            }
        }
        let width = Ordering::from_layout(&layout).bandwidth_of(g);
        if best.as_ref().is_none_or(|(b, _)| width < *b) {
            best = Some((width, layout));
        }
    }
    best.unwrap_or((0, Vec::new()))
}

/// Minimum bandwidth over all `n!` orderings; intended for `n ≤ 8`.
pub fn bandwidth_exhaustive(g: &Graph) -> usize {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut perm, 0, &mut |layout| {
        best = best.min(Ordering::from_layout(layout).bandwidth_of(g));
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            g.distances_from(s)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX / 4))
                .collect()
        })
        .collect()
}

/// Memo entries kept per decision problem before the cache stops growing.
const MEMO_CAP: usize = 4_000_000;

/// Is there a layout of width at most `k`? Vertices are placed left to
/// right; every unplaced vertex `w` has the deadline
/// `min over placed u of pos(u) + k·dist(u, w)`, and the sorted deadlines
/// must leave room for all remaining vertices.
struct Decision<'a> {
    g: &'a Graph,
    k: usize,
    dist: &'a [Vec<usize>],
    pos: Vec<usize>,
    layout: Vec<usize>,
    placed: Vec<u64>,
    failed: HashSet<(Vec<u64>, Vec<(usize, usize)>)>,
}

impl<'a> Decision<'a> {
    fn new(g: &'a Graph, k: usize, dist: &'a [Vec<usize>]) -> Self {
        Decision {
            g,
            k,
            dist,
            pos: vec![usize::MAX; g.n()],
            layout: Vec::with_capacity(g.n()),
            placed: vec![0; g.n().div_ceil(64)],
            failed: HashSet::new(),
        }
    }

    fn solve(mut self) -> Option<Vec<usize>> {
        self.extend().then_some(self.layout)
    }

    fn is_placed(&self, v: usize) -> bool {
        self.placed[v / 64] >> (v % 64) & 1 == 1
    }

    fn toggle(&mut self, v: usize) {
        self.placed[v / 64] ^= 1 << (v % 64);
    }

    /// Placed vertices that still have unplaced neighbors, with their
    /// distance back from the next free position.
    fn frontier_key(&self) -> (Vec<u64>, Vec<(usize, usize)>) {
        let p = self.layout.len();
        let active = self
            .layout
            .iter()
            .rev()
            .take(self.k)
            .filter(|&&u| self.g.neighbors(u).iter().any(|&w| !self.is_placed(w)))
            .map(|&u| (u, p - self.pos[u]))
            .collect();
        (self.placed.clone(), active)
    }

    /// Deadlines of unplaced vertices, or `None` if they cannot all fit.
    fn deadlines(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.g.n();
        let p = self.layout.len();
        let mut out: Vec<(usize, usize)> = (0..n)
            .filter(|&w| !self.is_placed(w))
            .map(|w| {
                let d = self
                    .layout
                    .iter()
                    .map(|&u| self.pos[u].saturating_add(self.k.saturating_mul(self.dist[u][w])))
                    .min()
                    .unwrap_or(n - 1)
                    .min(n - 1);
                (d, w)
            })
            .collect();
        out.sort_unstable();
        for (i, &(d, _)) in out.iter().enumerate() {
            if d < p + i {
                return None;
            }
        }
        Some(out)
    }

    fn extend(&mut self) -> bool {
        let n = self.g.n();
        let p = self.layout.len();
        if p == n {
            return true;
        }
        let Some(deadlines) = self.deadlines() else {
            return false;
        };
        let key = self.frontier_key();
        if self.failed.contains(&key) {
            return false;
        }
        let candidates: Vec<usize> = match deadlines.first() {
            Some(&(d, w)) if d == p => vec![w],
            _ => (0..n).filter(|&w| !self.is_placed(w)).collect(),
        };
        for w in candidates {
            self.pos[w] = p;
            self.layout.push(w);
            self.toggle(w);
            if self.extend() {
                return true;
            }
            self.toggle(w);
            self.layout.pop();
            self.pos[w] = usize::MAX;
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        false
    }
}
