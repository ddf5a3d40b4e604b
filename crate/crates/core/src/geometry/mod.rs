//! Concrete representations of graphs in the line or the plane and the three
//! distance ratios evaluated on them.
//!
//! For a representation `ρ` of `G` the crate tracks four extremes: the longest
//! and shortest edge, and the largest and smallest distance over all vertex
//! pairs. From those:
//!
//! * dilation ratio   = longest edge / shortest edge
//! * plane-width ratio = largest pair distance / shortest edge
//! * resolution ratio  = longest edge / smallest pair distance
//!
//! The first two need every edge to have positive length (NED); the third
//! needs the vertex map to be injective (NVD).

mod grid_coloring;
mod noncrossing;
mod packing;
mod svg;

pub use grid_coloring::{grid_coloring, GridColoring};
pub use noncrossing::verify_noncrossing;
pub use packing::{cubic_tree_re_lower_bound, packing_radius_bound, re_lower_bound};
pub use svg::to_svg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative tolerance for ratio comparisons.
pub const RATIO_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dim {
    Line,
    Plane,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::Line => 1,
            Dim::Plane => 2,
        }
    }
}

/// Placement of vertices `0..n` as points. Line representations keep `y = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Representation {
    pub dim: Dim,
    pub points: Vec<[f64; 2]>,
}

impl Representation {
    pub fn plane(points: Vec<[f64; 2]>) -> Self {
        Representation {
            dim: Dim::Plane,
            points,
        }
    }

    pub fn line(xs: impl IntoIterator<Item = f64>) -> Self {
        Representation {
            dim: Dim::Line,
            points: xs.into_iter().map(|x| [x, 0.0]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Line coordinates; only meaningful for [`Dim::Line`].
    pub fn xs(&self) -> Vec<f64> {
        self.points.iter().map(|p| p[0]).collect()
    }

    pub fn dist(&self, u: usize, v: usize) -> f64 {
        let [ax, ay] = self.points[u];
        let [bx, by] = self.points[v];
        (ax - bx).hypot(ay - by)
    }

    /// Checks that every vertex of `g` has a finite point.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if self.points.len() < g.n() {
            return Err(Error::MissingPoint(self.points.len()));
        }
        for (v, p) in self.points.iter().take(g.n()).enumerate() {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(Error::NonFinitePoint(v));
            }
        }
        Ok(())
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Representation {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|&[x, y]| [x * factor, y * factor])
                .collect(),
        }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        Representation {
            dim: self.dim,
            points: self.points.iter().map(|&[x, y]| [x + dx, y + dy]).collect(),
        }
    }

    /// Rotation by `angle` radians about the origin; promotes to the plane.
    pub fn rotated(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Representation {
            dim: Dim::Plane,
            points: self
                .points
                .iter()
                .map(|&[x, y]| [c * x - s * y, s * x + c * y])
                .collect(),
        }
    }

    /// Restriction to the listed vertices, relabeled in the given order.
    pub fn restricted(&self, vertices: &[usize]) -> Self {
        Representation {
            dim: self.dim,
            points: vertices.iter().map(|&v| self.points[v]).collect(),
        }
    }

    /// Pulls back along a vertex map `phi: V(G) -> V(H)`, where `self`
    /// represents `H`.
    pub fn compose(&self, phi: &[usize]) -> Self {
        self.restricted(phi)
    }
}

/// A vertex pair together with its distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extreme {
    pub u: usize,
    pub v: usize,
    pub dist: f64,
}

/// Extremal distances and the three ratios for one representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub max_edge: Extreme,
    pub min_edge: Extreme,
    pub max_pair: Extreme,
    pub min_pair: Extreme,
    pub dc_ratio: Option<f64>,
    pub pw_ratio: Option<f64>,
    pub re_ratio: Option<f64>,
    pub ned: bool,
    pub nvd: bool,
}

impl RatioReport {
    pub fn ratio(&self, target: crate::optimizer::Target) -> Option<f64> {
        use crate::optimizer::Target;
        match target {
            Target::Dc => self.dc_ratio,
            Target::Pw => self.pw_ratio,
            Target::Re => self.re_ratio,
        }
    }
}

/// Scans every edge and every vertex pair for the four extremes.
pub fn eval_ratios(g: &Graph, rep: &Representation) -> Result<RatioReport> {
    g.require_edge()?;
    rep.validate_for(g)?;
    let first = g.edges()[0];
    let d0 = rep.dist(first.0, first.1);
    let mut max_edge = Extreme { u: first.0, v: first.1, dist: d0 };
    let mut min_edge = max_edge;
    for &(u, v) in g.edges() {
        let d = rep.dist(u, v);
        if d > max_edge.dist {
            max_edge = Extreme { u, v, dist: d };
        }
        if d < min_edge.dist {
            min_edge = Extreme { u, v, dist: d };
        }
    }
    let mut max_pair = Extreme { u: 0, v: 1, dist: rep.dist(0, 1) };
    let mut min_pair = max_pair;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let d = rep.dist(u, v);
            if d > max_pair.dist {
                max_pair = Extreme { u, v, dist: d };
            }
            if d < min_pair.dist {
                min_pair = Extreme { u, v, dist: d };
            }
        }
    }
    let ned = min_edge.dist > 0.0;
    let nvd = min_pair.dist > 0.0;
    Ok(RatioReport {
        dc_ratio: ned.then(|| max_edge.dist / min_edge.dist),
        pw_ratio: ned.then(|| max_pair.dist / min_edge.dist),
        re_ratio: nvd.then(|| max_edge.dist / min_pair.dist),
        max_edge,
        min_edge,
        max_pair,
        min_pair,
        ned,
        nvd,
    })
}

/// True iff `ρ` is NED and all edge lengths agree up to relative `tol`.
pub fn check_unit_distance(g: &Graph, rep: &Representation, tol: f64) -> bool {
    match eval_ratios(g, rep) {
        Ok(r) => r.dc_ratio.is_some_and(|ratio| ratio <= 1.0 + tol),
        Err(_) => false,
    }
}

/// Unit-distance coordinates of the Moser spindle in the labeling of
/// [`crate::graph::moser_spindle`]: the second rhombus is the first rotated
/// about the apex by the angle that puts the two far tips at distance one.
pub fn moser_spindle_coordinates() -> Representation {
    let tip = 3f64.sqrt();
    let spread = 2.0 * (0.5 / tip).asin();
    let rhombus = |axis: f64| {
        let side = std::f64::consts::FRAC_PI_6;
        [
            [(axis - side).cos(), (axis - side).sin()],
            [(axis + side).cos(), (axis + side).sin()],
            [tip * axis.cos(), tip * axis.sin()],
        ]
    };
    let mut points = vec![[0.0, 0.0]];
    points.extend(rhombus(0.0));
    points.extend(rhombus(spread));
    Representation::plane(points)
}
