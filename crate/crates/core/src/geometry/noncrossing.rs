use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Representation;

/// Absolute guard for orientation tests on non-integral inputs, scaled by the
/// squared coordinate magnitude.
const EPS: f64 = 1e-12;

/// Exact integer arithmetic is used when every coordinate is an integer below
/// this magnitude.
const EXACT_LIMIT: f64 = (1u64 << 40) as f64;

/// Returns `true` iff the straight-line drawing of `g` given by `rep` has no
/// two edges with disjoint endpoints that meet.
///
/// Errors when the representation is vertex-degenerate or a vertex lies in the
/// open interior of an edge segment (reported distinctly from a crossing).
pub fn verify_noncrossing(g: &Graph, rep: &Representation) -> Result<bool> {
    rep.validate_for(g)?;
    let pts = &rep.points[..g.n()];
    let orient = Orient::new(pts);

    // sweep over x-extents so only overlapping boxes are compared
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| pts[a][0].total_cmp(&pts[b][0]).then(pts[a][1].total_cmp(&pts[b][1])));
    for w in order.windows(2) {
        if pts[w[0]] == pts[w[1]] {
            return Err(Error::CoincidentVertices(w[0].min(w[1]), w[0].max(w[1])));
        }
    }

    #[derive(Clone, Copy)]
    enum Item {
        Vertex(usize),
        Edge(usize, usize),
    }
    let span = |it: Item| match it {
        Item::Vertex(v) => (pts[v][0], pts[v][0]),
        Item::Edge(u, v) => (pts[u][0].min(pts[v][0]), pts[u][0].max(pts[v][0])),
    };
    let mut items: Vec<Item> = (0..g.n()).map(Item::Vertex).collect();
    items.extend(g.edges().iter().map(|&(u, v)| Item::Edge(u, v)));
    items.sort_by(|&a, &b| span(a).0.total_cmp(&span(b).0));

    let mut crossing = false;
    for i in 0..items.len() {
        let (_, hi) = span(items[i]);
        for &other in &items[i + 1..] {
            if span(other).0 > hi {
                break;
            }
            match (items[i], other) {
                (Item::Vertex(_), Item::Vertex(_)) => {}
                (Item::Vertex(x), Item::Edge(u, v)) | (Item::Edge(u, v), Item::Vertex(x)) => {
                    if x != u && x != v && orient.in_open_segment(x, u, v) {
                        return Err(Error::VertexOnEdge { vertex: x, u, v });
                    }
                }
                (Item::Edge(a, b), Item::Edge(c, d)) => {
                    if a != c && a != d && b != c && b != d && orient.segments_meet(a, b, c, d) {
                        crossing = true;
                    }
                }
            }
        }
    }
    Ok(!crossing)
}

/// Orientation predicate, exact on small integral inputs.
struct Orient<'a> {
    pts: &'a [[f64; 2]],
    exact: bool,
    eps: f64,
}

impl<'a> Orient<'a> {
    fn new(pts: &'a [[f64; 2]]) -> Self {
        let exact = pts
            .iter()
            .flatten()
            .all(|&c| c.fract() == 0.0 && c.abs() < EXACT_LIMIT);
        let scale = pts.iter().flatten().fold(1.0f64, |m, &c| m.max(c.abs()));
        Orient {
            pts,
            exact,
            eps: EPS * scale * scale,
        }
    }

    /// Sign of the cross product `(b - a) × (c - a)`.
    fn sign(&self, a: usize, b: usize, c: usize) -> i8 {
        let [ax, ay] = self.pts[a];
        let [bx, by] = self.pts[b];
        let [cx, cy] = self.pts[c];
        if self.exact {
            let (ax, ay, bx, by, cx, cy) = (
                ax as i128, ay as i128, bx as i128, by as i128, cx as i128, cy as i128,
            );
            let cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
            cross.signum() as i8
        } else {
            let cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
            if cross.abs() <= self.eps {
                0
            } else if cross > 0.0 {
                1
            } else {
                -1
            }
        }
    }

    /// `c` lies within the closed bounding box of `a`, `b` (used for collinear points).
    fn within_box(&self, a: usize, b: usize, c: usize) -> bool {
        let [ax, ay] = self.pts[a];
        let [bx, by] = self.pts[b];
        let [cx, cy] = self.pts[c];
        cx >= ax.min(bx) && cx <= ax.max(bx) && cy >= ay.min(by) && cy <= ay.max(by)
    }

    fn in_open_segment(&self, x: usize, u: usize, v: usize) -> bool {
        self.sign(u, v, x) == 0
            && self.within_box(u, v, x)
            && self.pts[x] != self.pts[u]
            && self.pts[x] != self.pts[v]
    }

    /// Closed segments `ab` and `cd` share a point.
    fn segments_meet(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let o1 = self.sign(a, b, c);
        let o2 = self.sign(a, b, d);
        let o3 = self.sign(c, d, a);
        let o4 = self.sign(c, d, b);
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return true;
        }
        (o1 == 0 && self.within_box(a, b, c))
            || (o2 == 0 && self.within_box(a, b, d))
            || (o3 == 0 && self.within_box(c, d, a))
            || (o4 == 0 && self.within_box(c, d, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, grid, path};

    fn lattice(m: usize, n: usize) -> Representation {
        Representation::plane(
            (0..m * n)
                .map(|v| [(v / n) as f64, (v % n) as f64])
                .collect(),
        )
    }

    #[test]
    fn square_k4_crosses() {
        let rep = Representation::plane(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert_eq!(verify_noncrossing(&complete(4).unwrap(), &rep), Ok(false));
    }

    #[test]
    fn grid_on_lattice_is_plane() {
        assert_eq!(verify_noncrossing(&grid(3, 3).unwrap(), &lattice(3, 3)), Ok(true));
    }

    #[test]
    fn convex_quadrilateral_cycle() {
        let rep = Representation::plane(vec![[0.0, 0.0], [2.0, 0.1], [1.7, 1.3], [-0.2, 0.9]]);
        assert_eq!(verify_noncrossing(&cycle(4).unwrap(), &rep), Ok(true));
    }

    #[test]
    fn vertex_on_edge_is_distinct_error() {
        let g = crate::graph::Graph::new(3, [(0, 2)]).unwrap();
        let rep = Representation::plane(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        assert_eq!(
            verify_noncrossing(&g, &rep),
            Err(Error::VertexOnEdge { vertex: 1, u: 0, v: 2 })
        );
        let rep = Representation::plane(vec![[0.0, 0.0], [0.0, 0.0], [2.0, 0.0]]);
        assert_eq!(verify_noncrossing(&path(3).unwrap(), &rep), Err(Error::CoincidentVertices(0, 1)));
    }

    #[test]
    fn disjoint_edges_crossing() {
        let g = crate::graph::Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let rep = Representation::plane(vec![[0.0, 0.0], [2.0, 0.0], [1.0, 1.0], [1.0, -1.0]]);
        assert_eq!(verify_noncrossing(&g, &rep), Ok(false));
    }

    #[test]
    fn float_inputs() {
        let rep = Representation::plane(vec![[0.1, 0.1], [1.1, 0.1], [1.1, 1.1], [0.1, 1.1]]);
        assert_eq!(verify_noncrossing(&complete(4).unwrap(), &rep), Ok(false));
        assert_eq!(verify_noncrossing(&cycle(4).unwrap(), &rep), Ok(true));
    }
}
