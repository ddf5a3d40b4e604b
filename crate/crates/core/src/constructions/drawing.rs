//! Polyline drawings on the integer lattice: a row-and-track router, a
//! segment-level validator, and the local rewrite that turns each crossing
//! into a diagonal cross.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Point = [i64; 2];

/// Two routes crossing at `point` (which may have half-integer coordinates
/// after rotation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub first: usize,
    pub second: usize,
    pub point: [f64; 2],
}

/// A drawing of a graph whose edges are polylines through lattice points.
///
/// `routes[i]` draws `edges[i]` and runs from the point of `edges[i].0` to
/// the point of `edges[i].1`. Before rotation every segment is axis-parallel
/// and every coordinate is a multiple of 4.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectilinearDrawing {
    pub vertex_points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    pub routes: Vec<Vec<Point>>,
    pub crossings: Vec<Crossing>,
    pub rotated: bool,
}

/// A maximal straight piece of one route.
#[derive(Debug, Clone, Copy)]
struct Segment {
    route: usize,
    index: usize,
    a: Point,
    b: Point,
}

impl Segment {
    fn x_range(&self) -> (i64, i64) {
        (self.a[0].min(self.b[0]), self.a[0].max(self.b[0]))
    }

    fn y_range(&self) -> (i64, i64) {
        (self.a[1].min(self.b[1]), self.a[1].max(self.b[1]))
    }

    fn contains(&self, p: Point) -> bool {
        orient(self.a, self.b, p) == 0 && in_box(self.a, self.b, p)
    }
}

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a[0] as i128, a[1] as i128);
    ((b[0] as i128 - ax) * (c[1] as i128 - ay) - (b[1] as i128 - ay) * (c[0] as i128 - ax)).signum()
}

fn in_box(a: Point, b: Point, p: Point) -> bool {
    a[0].min(b[0]) <= p[0] && p[0] <= a[0].max(b[0]) && a[1].min(b[1]) <= p[1] && p[1] <= a[1].max(b[1])
}

/// How two segments meet.
enum Meeting {
    Apart,
    /// A single common point that is an endpoint of both.
    Joint(Point),
    /// Interiors cross transversally at one point.
    Proper([f64; 2]),
    /// Anything else: overlap, or an endpoint touching the other interior.
    Touch,
}

fn meet(s: &Segment, t: &Segment) -> Meeting {
    let (o1, o2) = (orient(s.a, s.b, t.a), orient(s.a, s.b, t.b));
    let (o3, o4) = (orient(t.a, t.b, s.a), orient(t.a, t.b, s.b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let (p, r) = ([s.a[0] as f64, s.a[1] as f64], [(s.b[0] - s.a[0]) as f64, (s.b[1] - s.a[1]) as f64]);
        let q = [t.a[0] as f64, t.a[1] as f64];
        let w = [(t.b[0] - t.a[0]) as f64, (t.b[1] - t.a[1]) as f64];
        let denom = r[0] * w[1] - r[1] * w[0];
        let u = ((q[0] - p[0]) * w[1] - (q[1] - p[1]) * w[0]) / denom;
        return Meeting::Proper([p[0] + u * r[0], p[1] + u * r[1]]);
    }
    let touching: Vec<Point> = [(t.a, s), (t.b, s), (s.a, t), (s.b, t)]
        .into_iter()
        .filter(|(p, seg)| seg.contains(*p))
        .map(|(p, _)| p)
        .collect();
    if touching.is_empty() {
        return Meeting::Apart;
    }
    let p = touching[0];
    let shared_end = |seg: &Segment| seg.a == p || seg.b == p;
    if touching.iter().all(|&q| q == p) && shared_end(s) && shared_end(t) {
        Meeting::Joint(p)
    } else {
        Meeting::Touch
    }
}

/// Drops repeated and collinear interior points of a polyline.
fn simplify(route: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(route.len());
    for &p in route {
        if out.last() == Some(&p) {
            continue;
        }
        if out.len() >= 2 {
            let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
            let forward = (b[0] - a[0]) * (p[0] - b[0]) + (b[1] - a[1]) * (p[1] - b[1]) > 0;
            if orient(a, b, p) == 0 && forward {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// Every lattice point of a polyline, in order.
pub fn lattice_points(route: &[Point]) -> Vec<Point> {
    let mut out = vec![route[0]];
    for w in route.windows(2) {
        let (dx, dy) = (w[1][0] - w[0][0], w[1][1] - w[0][1]);
        let g = num_integer::gcd(dx.abs(), dy.abs()).max(1);
        for k in 1..=g {
            out.push([w[0][0] + dx / g * k, w[0][1] + dy / g * k]);
        }
    }
    out
}

fn invalid(msg: String) -> Error {
    Error::InvalidDrawing(msg)
}

impl RectilinearDrawing {
    /// Checks the drawing conditions and returns the proper crossings:
    ///
    /// * each route starts and ends at its edge's endpoints, and no two
    ///   vertices share a point;
    /// * before rotation, segments are axis-parallel and all coordinates are
    ///   multiples of 4;
    /// * no route passes through a vertex other than its own endpoints;
    /// * routes meet only at shared end vertices or at proper crossings,
    ///   and never share a segment or touch;
    /// * a route never meets itself away from consecutive joints.
    pub fn validate(&self) -> Result<Vec<Crossing>> {
        if self.routes.len() != self.edges.len() {
            return Err(invalid("one route per edge required".into()));
        }
        let mut at: HashMap<Point, usize> = HashMap::new();
        for (v, &p) in self.vertex_points.iter().enumerate() {
            if let Some(u) = at.insert(p, v) {
                return Err(invalid(format!("vertices {u} and {v} share point {p:?}")));
            }
        }
        let mut segments = Vec::new();
        for (i, (route, &(u, v))) in self.routes.iter().zip(&self.edges).enumerate() {
            if route.len() < 2
                || route.first() != Some(&self.vertex_points[u])
                || route.last() != Some(&self.vertex_points[v])
            {
                return Err(invalid(format!("route {i} does not join vertices {u} and {v}")));
            }
            let route = simplify(route);
            for (k, w) in route.windows(2).enumerate() {
                let axis = w[0][0] == w[1][0] || w[0][1] == w[1][1];
                if !self.rotated && (!axis || w.iter().flatten().any(|c| c % 4 != 0)) {
                    return Err(invalid(format!("route {i} has a segment {w:?} off the coarse lattice")));
                }
                segments.push(Segment { route: i, index: k, a: w[0], b: w[1] });
            }
        }
        for s in &segments {
            let (u, v) = self.edges[s.route];
            for (&p, &w) in &at {
                if s.contains(p) && w != u && w != v {
                    return Err(invalid(format!("vertex {w} lies on route {}", s.route)));
                }
                if s.contains(p) && p != s.a && p != s.b {
                    return Err(invalid(format!("route {} passes through its own end vertex {w}", s.route)));
                }
            }
        }
        let mut crossings = Vec::new();
        segments.sort_by_key(|s| s.x_range().0);
        for (i, s) in segments.iter().enumerate() {
            let (_, sx1) = s.x_range();
            let (sy0, sy1) = s.y_range();
            for t in &segments[i + 1..] {
                if t.x_range().0 > sx1 {
                    break;
                }
                let (ty0, ty1) = t.y_range();
                if ty0 > sy1 || sy0 > ty1 {
                    continue;
                }
                let (lo, hi) = if s.route < t.route || (s.route == t.route && s.index < t.index) { (s, t) } else { (t, s) };
                match meet(lo, hi) {
                    Meeting::Apart => {}
                    Meeting::Proper(point) if lo.route != hi.route => crossings.push(Crossing {
                        first: lo.route,
                        second: hi.route,
                        point,
                    }),
                    Meeting::Joint(p) if lo.route == hi.route && hi.index == lo.index + 1 && lo.b == p => {}
                    Meeting::Joint(p) if lo.route != hi.route && self.shared_end(lo.route, hi.route, p) => {}
                    _ => {
                        return Err(invalid(format!(
                            "routes {} and {} touch or overlap near {:?}",
                            lo.route, hi.route, lo.a
                        )))
                    }
                }
            }
        }
        crossings.sort_by(|a, b| {
            (a.first, a.second, a.point[0], a.point[1])
                .partial_cmp(&(b.first, b.second, b.point[0], b.point[1]))
                .expect("finite crossing points")
        });
        Ok(crossings)
    }

    fn shared_end(&self, r: usize, s: usize, p: Point) -> bool {
        let (a, b) = self.edges[r];
        let (c, d) = self.edges[s];
        [a, b]
            .into_iter()
            .any(|v| (v == c || v == d) && self.vertex_points[v] == p)
    }
}

/// Row-and-track layout of a graph with maximum degree 3.
///
/// Vertex `i` sits at `(3i, 0)` and owns the port columns `3i − 1`, `3i`
/// and `3i + 1`; side ports are reached by a unit stub along the row. Each
/// edge rises from its two ports to a private horizontal track, assigned
/// first-fit with shorter spans first so nested edges stay below the ones
/// enclosing them. Finally all coordinates are scaled by 4.
pub fn rectilinear_layout(g: &Graph) -> Result<RectilinearDrawing> {
    let delta = g.max_degree();
    if delta > 3 {
        return Err(Error::DegreeTooLarge(delta));
    }
    let x = |v: usize| 3 * v as i64;
    // port column of edge e at each of its endpoints
    let mut port: HashMap<(usize, usize), i64> = HashMap::new();
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let offsets: &[i64] = match nbrs.len() {
            1 => &[0],
            2 => &[-1, 1],
            _ => &[-1, 0, 1],
        };
        for (&w, &off) in nbrs.iter().zip(offsets) {
            port.insert((v, w), x(v) + off);
        }
    }
    let spans: Vec<(i64, i64)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (port[&(u, v)], port[&(v, u)]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| (spans[i].1 - spans[i].0, spans[i].0));
    let mut tracks: Vec<Vec<(i64, i64)>> = Vec::new();
    let mut height = vec![0i64; spans.len()];
    for i in order {
        let (a, b) = spans[i];
        let free = tracks
            .iter()
            .position(|t| t.iter().all(|&(c, d)| b < c || d < a));
        let t = free.unwrap_or_else(|| {
            tracks.push(Vec::new());
            tracks.len() - 1
        });
        tracks[t].push((a, b));
        height[i] = t as i64 + 1;
    }
    let routes: Vec<Vec<Point>> = g
        .edges()
        .iter()
        .zip(&height)
        .map(|(&(u, v), &h)| {
            let (pu, pv) = (port[&(u, v)], port[&(v, u)]);
            let route = vec![[x(u), 0], [pu, 0], [pu, h], [pv, h], [pv, 0], [x(v), 0]];
            simplify(&route).into_iter().map(|[a, b]| [4 * a, 4 * b]).collect()
        })
        .collect();
    let mut drawing = RectilinearDrawing {
        vertex_points: (0..g.n()).map(|v| [4 * x(v), 0]).collect(),
        edges: g.edges().to_vec(),
        routes,
        crossings: Vec::new(),
        rotated: false,
    };
    drawing.crossings = drawing.validate()?;
    Ok(drawing)
}

/// Rewrites every crossing at `P = (X, Y)` of a horizontal route `H` and a
/// vertical route `V`: `H` detours through `(X+1, Y+1)` instead of
/// `(X+1, Y)`, and `V` passes through the vacated `(X+1, Y)` instead of
/// `P`. The two routes then cross once, diagonally, at `(X+½, Y+½)`, every
/// step has length 1 or √2, and no route visits a crossing point.
pub fn rotate_crossings(d: &RectilinearDrawing) -> Result<RectilinearDrawing> {
    if d.rotated {
        return Err(invalid("drawing is already rotated".into()));
    }
    let crossings = d.validate()?;
    let mut paths: Vec<Vec<Point>> = d.routes.iter().map(|r| lattice_points(r)).collect();
    for c in &crossings {
        let p = [c.point[0] as i64, c.point[1] as i64];
        let horizontal = |r: usize| {
            let path = &paths[r];
            let k = path.iter().position(|&q| q == p).expect("crossing lies on route");
            path.get(k + 1).is_some_and(|q| q[1] == p[1]) && k > 0 && path[k - 1][1] == p[1]
        };
        let (h, v) = if horizontal(c.first) { (c.first, c.second) } else { (c.second, c.first) };
        let right = [p[0] + 1, p[1]];
        let k = paths[h].iter().position(|&q| q == right).ok_or_else(|| {
            invalid(format!("crossing of routes {} and {} too close to a bend", c.first, c.second))
        })?;
        paths[h][k] = [p[0] + 1, p[1] + 1];
        let k = paths[v].iter().position(|&q| q == p).expect("crossing lies on route");
        paths[v][k] = right;
    }
    let mut out = RectilinearDrawing {
        vertex_points: d.vertex_points.clone(),
        edges: d.edges.clone(),
        routes: paths.iter().map(|r| simplify(r)).collect(),
        crossings: Vec::new(),
        rotated: true,
    };
    out.crossings = out.validate()?;
    if out.crossings.len() != crossings.len() {
        return Err(invalid(format!(
            "rotation changed the crossing count from {} to {}",
            crossings.len(),
            out.crossings.len()
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    fn plus(h: (Point, Point), v: (Point, Point)) -> RectilinearDrawing {
        RectilinearDrawing {
            vertex_points: vec![h.0, h.1, v.0, v.1],
            edges: vec![(0, 1), (2, 3)],
            routes: vec![vec![h.0, h.1], vec![v.0, v.1]],
            crossings: Vec::new(),
            rotated: false,
        }
    }

    #[test]
    fn path_has_no_crossings() {
        let d = rectilinear_layout(&path(4).unwrap()).unwrap();
        assert!(d.crossings.is_empty());
        assert_eq!(rotate_crossings(&d).unwrap().routes.len(), 3);
    }

    #[test]
    fn k4_layout_is_valid() {
        let d = rectilinear_layout(&complete(4).unwrap()).unwrap();
        assert_eq!(d.validate().unwrap(), d.crossings);
        let r = rotate_crossings(&d).unwrap();
        assert_eq!(r.crossings.len(), d.crossings.len());
    }

    #[test]
    fn degree_four_rejected() {
        assert_eq!(rectilinear_layout(&complete(5).unwrap()), Err(Error::DegreeTooLarge(4)));
    }

    #[test]
    fn single_crossing_rotates_diagonally() {
        let d = plus(([0, 8], [16, 8]), ([8, 0], [8, 16]));
        let c = d.validate().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].point, [8.0, 8.0]);
        let r = rotate_crossings(&d).unwrap();
        assert_eq!(r.routes[0], vec![[0, 8], [8, 8], [9, 9], [10, 8], [16, 8]]);
        assert_eq!(r.routes[1], vec![[8, 0], [8, 7], [9, 8], [8, 9], [8, 16]]);
        assert_eq!(r.crossings[0].point, [8.5, 8.5]);
    }

    #[test]
    fn neighboring_crossings_rotate_independently() {
        let d = RectilinearDrawing {
            vertex_points: vec![[0, 8], [24, 8], [8, 0], [8, 16], [12, 0], [12, 16]],
            edges: vec![(0, 1), (2, 3), (4, 5)],
            routes: vec![vec![[0, 8], [24, 8]], vec![[8, 0], [8, 16]], vec![[12, 0], [12, 16]]],
            crossings: Vec::new(),
            rotated: false,
        };
        assert_eq!(d.validate().unwrap().len(), 2);
        assert_eq!(rotate_crossings(&d).unwrap().crossings.len(), 2);
    }

    #[test]
    fn overlap_and_touching_rejected() {
        let mut d = plus(([0, 0], [16, 0]), ([8, 0], [8, 16]));
        assert!(d.validate().is_err());
        d = plus(([0, 0], [16, 0]), ([4, 4], [20, 4]));
        d.routes[1] = vec![[4, 4], [4, 0], [12, 0], [12, 4], [20, 4]];
        assert!(d.validate().is_err());
    }

    #[test]
    fn off_lattice_rejected_before_rotation() {
        let d = plus(([0, 6], [16, 6]), ([8, 0], [8, 16]));
        assert!(d.validate().is_err());
    }

    #[test]
    fn lattice_points_expand_segments() {
        assert_eq!(lattice_points(&[[0, 0], [2, 0], [3, 1]]), vec![[0, 0], [1, 0], [2, 0], [3, 1]]);
    }
}
