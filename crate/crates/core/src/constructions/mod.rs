//! Graphs of maximum degree 3 that have a `K_n` minor and a lattice
//! representation with resolution ratio √2.
//!
//! The pipeline: expand every vertex of `K_n` into a cycle to get a cubic
//! graph, draw it with axis-parallel routes on a coarse lattice, rewrite each
//! crossing into a diagonal cross, and put a vertex on every lattice point of
//! every route. Edges then have length 1 or √2 and distinct vertices sit at
//! distinct lattice points. A `K_5` minor makes the graph nonplanar, so no
//! representation has resolution ratio below √2 and the bound is tight.

mod drawing;

pub use drawing::{lattice_points, rectilinear_layout, rotate_crossings, Crossing, Point, RectilinearDrawing};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{eval_ratios, verify_noncrossing, RatioReport, Representation};
use crate::graph::{complete, Graph};
use crate::minor::MinorWitness;

/// Replaces each vertex `v` of `K_n` by a cycle on `n − 1` vertices, one per
/// neighbor, and joins the slot of `u` at `v` to the slot of `v` at `u`.
///
/// Vertex `(v, i)` gets id `v·(n−1) + i`; slot `i` of `v` faces neighbor `i`
/// if `i < v` and `i + 1` otherwise. The witness's branch sets are the cycles.
pub fn cubic_expansion(n: usize) -> Result<(Graph, MinorWitness)> {
    if n < 5 {
        return Err(Error::TooSmall { family: "cubic expansion", value: n, min: 5 });
    }
    let k = n - 1;
    let id = |v: usize, u: usize| v * k + if u < v { u } else { u - 1 };
    let mut edges = Vec::with_capacity(n * k * 3 / 2);
    for v in 0..n {
        for i in 0..k {
            edges.push((v * k + i, v * k + (i + 1) % k));
        }
        for u in v + 1..n {
            edges.push((id(v, u), id(u, v)));
        }
    }
    let g = Graph::new(n * k, edges)?;
    let sets = (0..n).map(|v| (v * k..(v + 1) * k).collect()).collect();
    Ok((g, MinorWitness::new(sets, complete(n)?)))
}

/// Places a vertex on every lattice point of every route of a rotated
/// drawing of `host`.
///
/// The original vertices keep their ids; subdivision vertices follow, route
/// by route. Every subdivision vertex joins the branch set of its route's
/// first endpoint, so branch sets stay connected and each cross edge of the
/// witness survives as the route's final step.
pub fn subdivide_on_lattice(
    d: &RectilinearDrawing,
    host: &Graph,
    w: &MinorWitness,
) -> Result<(Graph, Representation, MinorWitness)> {
    if !d.rotated {
        return Err(Error::Construction("subdivision expects a rotated drawing".into()));
    }
    if d.edges != host.edges() || d.vertex_points.len() != host.n() {
        return Err(Error::Construction("drawing does not match the graph".into()));
    }
    let mut owner = vec![usize::MAX; host.n()];
    for (i, set) in w.branch_sets.iter().enumerate() {
        for &v in set {
            owner[v] = i;
        }
    }
    let mut points: Vec<Point> = d.vertex_points.clone();
    let mut at: HashMap<Point, usize> = points.iter().enumerate().map(|(v, &p)| (p, v)).collect();
    let mut sets = w.branch_sets.clone();
    let mut edges = Vec::new();
    for (route, &(u, v)) in d.routes.iter().zip(&d.edges) {
        let path = lattice_points(route);
        let mut prev = u;
        for &p in &path[1..path.len() - 1] {
            let id = points.len();
            if let Some(other) = at.insert(p, id) {
                return Err(Error::Construction(format!(
                    "lattice point {p:?} claimed by vertices {other} and {id}"
                )));
            }
            points.push(p);
            if owner[u] != usize::MAX {
                sets[owner[u]].push(id);
            }
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, v));
    }
    let g = Graph::new(points.len(), edges)?;
    let rep = Representation::plane(points.iter().map(|p| [p[0] as f64, p[1] as f64]).collect());
    Ok((g, rep, MinorWitness::new(sets, w.target.clone())))
}

/// Suppresses the subdivision vertices `original..n` (each of degree 2),
/// replacing every path through them by one edge between original vertices.
pub fn contract_subdivisions(g: &Graph, original: usize) -> Result<Graph> {
    if (original..g.n()).any(|v| g.degree(v) != 2) {
        return Err(Error::Construction("subdivision vertex without degree 2".into()));
    }
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        // walk from each original endpoint into the subdivided path
        for (start, mut cur) in [(a, b), (b, a)] {
            if start >= original {
                continue;
            }
            let mut prev = start;
            while cur >= original {
                let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).expect("degree 2");
                prev = cur;
                cur = next;
            }
            if start < cur {
                edges.push((start, cur));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(original, edges)
}

/// Options for [`minor_rich_graph`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionConfig {
    /// Also check that suppressing subdivision vertices recovers the cubic
    /// expansion edge for edge.
    pub check_contraction: bool,
    /// Also run the straight-line crossing test on the output.
    pub check_noncrossing: bool,
}

impl Default for ConstructionConfig {
    fn default() -> Self {
        ConstructionConfig { check_contraction: true, check_noncrossing: true }
    }
}

/// The pipeline's output with its certificates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorRichGraph {
    pub n: usize,
    pub graph: Graph,
    pub representation: Representation,
    pub witness: MinorWitness,
    pub report: RatioReport,
    /// The rotated drawing the graph was read off.
    pub drawing: RectilinearDrawing,
    /// Straight-line drawing of `graph` by `representation` is crossing-free;
    /// `None` if not checked.
    pub noncrossing: Option<bool>,
    /// Smallest squared distance between two vertices, exact.
    pub min_pair_sq: i64,
    /// Largest squared edge length, exact.
    pub max_edge_sq: i64,
}

/// A max-degree-3 graph with a `K_n` minor and a lattice representation of
/// resolution ratio at most √2.
pub fn minor_rich_graph(n: usize, cfg: &ConstructionConfig) -> Result<MinorRichGraph> {
    let (cubic, witness) = cubic_expansion(n)?;
    let coarse = rectilinear_layout(&cubic)?;
    let drawing = rotate_crossings(&coarse)?;
    let (graph, representation, witness) = subdivide_on_lattice(&drawing, &cubic, &witness)?;
    if let Err(v) = witness.check(&graph) {
        return Err(Error::Construction(format!("lifted witness invalid: {v:?}")));
    }
    if cfg.check_contraction && contract_subdivisions(&graph, cubic.n())? != cubic {
        return Err(Error::Construction("contraction does not recover the cubic graph".into()));
    }
    let pts: Vec<Point> = representation.points.iter().map(|p| [p[0] as i64, p[1] as i64]).collect();
    let sq = |u: usize, v: usize| (pts[u][0] - pts[v][0]).pow(2) + (pts[u][1] - pts[v][1]).pow(2);
    let max_edge_sq = graph.edges().iter().map(|&(u, v)| sq(u, v)).max().unwrap_or(0);
    let min_pair_sq = min_lattice_gap_sq(&pts);
    let report = eval_ratios(&graph, &representation)?;
    let noncrossing = if cfg.check_noncrossing {
        Some(verify_noncrossing(&graph, &representation)?)
    } else {
        None
    };
    Ok(MinorRichGraph {
        n,
        graph,
        representation,
        witness,
        report,
        drawing,
        noncrossing,
        min_pair_sq,
        max_edge_sq,
    })
}

/// Smallest squared distance among distinct-or-not lattice points: 0 when
/// two coincide, otherwise found among near neighbors in a hash grid.
fn min_lattice_gap_sq(pts: &[Point]) -> i64 {
    let mut at: HashMap<Point, usize> = HashMap::with_capacity(pts.len());
    for (v, &p) in pts.iter().enumerate() {
        if at.insert(p, v).is_some() {
            return 0;
        }
    }
    // distinct lattice points are at squared distance ≥ 1; look for a
    // unit neighbor, then a diagonal one, then fall back to a full scan
    let has = |d: [i64; 2]| pts.iter().any(|p| at.contains_key(&[p[0] + d[0], p[1] + d[1]]));
    if has([1, 0]) || has([0, 1]) {
        1
    } else if has([1, 1]) || has([1, -1]) {
        2
    } else {
        let mut best = i64::MAX;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                best = best.min((pts[i][0] - pts[j][0]).pow(2) + (pts[i][1] - pts[j][1]).pow(2));
            }
        }
        best
    }
}
