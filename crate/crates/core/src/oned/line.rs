//! The line versions of the three ratios and the constructions that move
//! between line representations and colorings.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::geometry::{eval_ratios, Dim, Representation};
use crate::graph::Graph;

use super::bandwidth::bandwidth;
use super::chromatic::chromatic_number;
use super::circular::{circular_chromatic, CircularColoring};
use super::rational::Rational;

/// Relative slack for the floating-point precondition checks.
const TOL: f64 = 1e-9;

/// An exact one-dimensional invariant together with a line representation
/// attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineBound<T> {
    pub value: T,
    pub witness: Representation,
}

/// Line dilation coefficient `χ_c − 1`; the witness places each vertex at its
/// circular-coloring value.
pub fn dc1(g: &Graph) -> Result<LineBound<Rational>> {
    let cc = circular_chromatic(g)?;
    Ok(LineBound {
        value: cc.value.minus_integer(1),
        witness: Representation::line(cc.coloring.f.iter().copied()),
    })
}

/// Line plane-width `χ − 1`; the witness puts color class `i` at `i`.
pub fn pw1(g: &Graph) -> Result<LineBound<usize>> {
    let (chi, coloring) = chromatic_number(g)?;
    Ok(LineBound {
        value: chi - 1,
        witness: Representation::line(coloring.colors.iter().map(|&c| c as f64)),
    })
}

/// Line resolution coefficient, equal to the bandwidth; the witness places
/// vertices at their positions in an optimal ordering.
pub fn re1(g: &Graph) -> Result<LineBound<usize>> {
    let (bw, ord) = bandwidth(g)?;
    Ok(LineBound {
        value: bw,
        witness: Representation::line(ord.position.iter().map(|&p| p as f64)),
    })
}

/// Rescales a NED line representation so the shortest edge has length 1 and
/// the leftmost point sits at `origin`.
pub fn normalize_line(g: &Graph, rep: &Representation, origin: f64) -> Result<Vec<f64>> {
    if rep.dim != Dim::Line {
        return Err(Error::Dimension {
            expected: 1,
            found: rep.dim.as_usize(),
        });
    }
    let report = eval_ratios(g, rep)?;
    if !report.ned {
        return Err(Error::DegenerateEdge(report.min_edge.u, report.min_edge.v));
    }
    let xs = &rep.xs()[..g.n()];
    let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let scale = report.min_edge.dist;
    Ok(xs.iter().map(|&x| (x - lo) / scale + origin).collect())
}

/// Wraps a line representation around a circle of circumference `c`:
/// `f(v) = x(v) − c·⌊x(v)/c⌋`, after normalizing to shortest edge 1 and
/// leftmost point 0. Requires every edge to be at most `c − 1` long.
pub fn wrap_circular(g: &Graph, rep: &Representation, c: f64) -> Result<CircularColoring> {
    let xs = normalize_line(g, rep, 0.0)?;
    for &(u, v) in g.edges() {
        let gap = (xs[u] - xs[v]).abs();
        if gap > (c - 1.0) * (1.0 + TOL) {
            return Err(Error::Precondition {
                u,
                v,
                reason: format!("edge length {gap} exceeds c - 1 = {}", c - 1.0),
            });
        }
    }
    let f: Vec<f64> = xs
        .iter()
        .map(|&x| {
            let y = x - c * (x / c).floor();
            // rounding can land exactly on c
            if y >= c {
                0.0
            } else {
                y
            }
        })
        .collect();
    Ok(CircularColoring { c, f })
}

/// Colors vertices by `⌊x(v)⌋` after normalizing to shortest edge 1 and
/// leftmost point 1. Uses at most `⌊pw_ratio⌋ + 1` colors; color ids are
/// `⌊x(v)⌋ − 1`.
pub fn floor_coloring(g: &Graph, rep: &Representation) -> Result<Coloring> {
    let xs = normalize_line(g, rep, 1.0)?;
    let colors: Vec<usize> = xs.iter().map(|&x| (x.floor() as usize).saturating_sub(1)).collect();
    let count = colors.iter().max().map_or(0, |&c| c + 1);
    let coloring = Coloring { colors, count };
    match g.edges().iter().find(|&&(u, v)| coloring.colors[u] == coloring.colors[v]) {
        Some(&(u, v)) => Err(Error::Precondition {
            u,
            v,
            reason: "endpoints share a unit cell".into(),
        }),
        None => Ok(coloring),
    }
}

/// Folds a line representation onto `{0, …, k−1}` with
/// `k = ⌈dc_ratio⌉ + 1` via `⌊x(v)⌋ mod k`, after normalizing to shortest
/// edge 1 and leftmost point 0. The result is NED with plane-width ratio at
/// most `⌈dc_ratio⌉`.
pub fn mod_rounding(g: &Graph, rep: &Representation) -> Result<Representation> {
    let xs = normalize_line(g, rep, 0.0)?;
    let dc = eval_ratios(g, rep)?
        .dc_ratio
        .expect("normalize_line rejects degenerate edges");
    let k = dc.ceil() as usize + 1;
    let folded: Vec<f64> = xs
        .iter()
        .map(|&x| ((x.floor() as usize) % k) as f64)
        .collect();
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| folded[u] == folded[v]) {
        return Err(Error::Precondition {
            u,
            v,
            reason: format!("endpoints fold onto the same point modulo {k}"),
        });
    }
    Ok(Representation::line(folded))
}
