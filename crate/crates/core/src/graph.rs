//! Simple undirected graphs with dense vertex ids and the named families used
//! throughout the crate.
//!
//! Every generator documents its labeling so that representations and minor
//! witnesses built against it are reproducible.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored once, with the smaller endpoint first, sorted
/// lexicographically. Adjacency lists are sorted as well.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Serialized form of a [`Graph`].
#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList { n: g.n, edges: g.edges }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(e: EdgeList) -> Result<Self> {
        Graph::new(e.n, e.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating repeated pairs in
    /// either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Fails with [`Error::Edgeless`] when the graph has no edge.
    pub fn require_edge(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::Edgeless)
        } else {
            Ok(())
        }
    }

    /// Iterates over all unordered vertex pairs `(u, v)` with `u < v`.
    pub fn vertex_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }

    /// Maximum vertex degree.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Eccentricity of `v` within its component.
    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances_from(v).into_iter().flatten().max().unwrap_or(0)
    }

    /// Radius of a connected graph.
    pub fn radius(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0))
    }

    /// The subgraph induced by `vertices`, relabeled densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Spanning subgraph keeping only the edges for which `keep` holds.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Graph::new(self.n, edges).expect("subgraph of a valid graph")
    }

    /// Clique number by branch-and-bound with a greedy-coloring bound.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        let candidates: Vec<usize> = {
            // high degree first tends to find large cliques early
            let mut c: Vec<usize> = (0..self.n).collect();
            c.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
            c
        };
        self.expand_clique(0, candidates, &mut best);
        best
    }

    fn expand_clique(&self, size: usize, candidates: Vec<usize>, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let (order, bounds) = self.greedy_color_bounds(&candidates);
        for idx in (0..order.len()).rev() {
            if size + bounds[idx] <= *best {
                return;
            }
            let v = order[idx];
            let next: Vec<usize> = order[..idx]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            self.expand_clique(size + 1, next, best);
        }
    }

    /// Orders `candidates` by greedy color class; `bounds[i]` is the number of
    /// colors used among `order[..=i]`, an upper bound on any clique there.
    fn greedy_color_bounds(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&w| !self.has_edge(v, w)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (k, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                bounds.push(k + 1);
            }
        }
        (order, bounds)
    }

    /// Checks that `color` is a proper coloring of this graph.
    pub fn is_proper_coloring<C: PartialEq>(&self, color: &[C]) -> bool {
        color.len() == self.n && self.edges.iter().all(|&(u, v)| color[u] != color[v])
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    min_size("complete", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,n}`: center `0`, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    min_size("star", n, 1)?;
    Graph::new(n + 1, (1..=n).map(|v| (0, v)))
}

/// Cycle `C_n` with edges `i — i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    min_size("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `P_n` on `n` vertices `0 — 1 — … — n-1`.
pub fn path(n: usize) -> Result<Graph> {
    min_size("path", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Wheel on a ring of `n` vertices `0..n` with the hub last (vertex `n`).
pub fn wheel(n: usize) -> Result<Graph> {
    min_size("wheel", n, 3)?;
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n));
    Graph::new(n + 1, ring.chain(spokes))
}

/// Cartesian product; vertex `(g, h)` is labeled `g * |H| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::new();
    for a in 0..g.n() {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..nh {
            edges.push((a * nh + x, b * nh + x));
        }
    }
    Graph::new(g.n() * nh, edges).expect("product of valid graphs")
}

/// Grid `P_m □ P_n`; vertex `(i, j)` is labeled `i * n + j`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    Ok(cartesian_product(&path(m)?, &path(n)?))
}

/// The Moser spindle: two rhombi of unit equilateral triangles sharing the
/// apex `0`. Rhombus one is `0,1,2,3` with far tip `3`; rhombus two is
/// `0,4,5,6` with far tip `6`; the tips are joined by the edge `3 — 6`.
pub fn moser_spindle() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (0, 5),
        (4, 5),
        (4, 6),
        (5, 6),
        (3, 6),
    ];
    Graph::new(7, edges).expect("static edge list")
}

/// Full cubic tree with `k` layers in breadth-first labeling: root `0`,
/// layer one `1, 2, 3`, and every later vertex has two children.
pub fn full_cubic_tree(k: usize) -> Result<Graph> {
    min_size("full_cubic_tree", k, 1)?;
    let total = 3 * (1usize << k) - 2;
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    let mut next = 4;
    let mut layer: Vec<usize> = vec![1, 2, 3];
    for _ in 1..k {
        let mut new_layer = Vec::with_capacity(layer.len() * 2);
        for &p in &layer {
            for _ in 0..2 {
                edges.push((p, next));
                new_layer.push(next);
                next += 1;
            }
        }
        layer = new_layer;
    }
    debug_assert_eq!(next, total);
    Graph::new(total, edges)
}

fn min_size(family: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::TooSmall { family, value, min })
    } else {
        Ok(())
    }
}
