use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{eval_ratios, Representation};

/// Coloring read off a square grid: each vertex gets the position `(i, j)`,
/// `1 ≤ i, j ≤ t`, of its half-open cell of side `1/√2` inside the repeating
/// block of `t × t` cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridColoring {
    pub t: usize,
    pub cells: Vec<(usize, usize)>,
}

impl GridColoring {
    pub fn to_coloring(&self) -> Coloring {
        Coloring::from_keys(&self.cells)
    }

    /// Number of distinct colors used; at most `t²`.
    pub fn count(&self) -> usize {
        self.to_coloring().count
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.is_proper_coloring(&self.cells)
    }
}

/// Colors `g` from a NED plane representation with at most
/// `(⌈√2 · dc⌉ + 1)²` colors, where `dc` is the representation's dilation
/// ratio.
///
/// Two vertices in one cell are closer than the shortest edge; two vertices in
/// equally placed cells of different blocks are farther apart than the
/// longest edge.
pub fn grid_coloring(g: &Graph, rep: &Representation) -> Result<GridColoring> {
    let report = eval_ratios(g, rep)?;
    let dc = report
        .dc_ratio
        .ok_or(Error::DegenerateEdge(report.min_edge.u, report.min_edge.v))?;
    // ceil with slack so that e.g. √2·√2 = 2.0000000000000004 counts as 2
    let t = ((2f64.sqrt() * dc) * (1.0 - 1e-12)).ceil() as usize + 1;
    let cell_scale = 2f64.sqrt() / report.min_edge.dist;
    let tt = t as i64;
    let cells = rep.points[..g.n()]
        .iter()
        .map(|&[x, y]| {
            let a = (x * cell_scale).floor() as i64;
            let b = (y * cell_scale).floor() as i64;
            (a.rem_euclid(tt) as usize + 1, b.rem_euclid(tt) as usize + 1)
        })
        .collect();
    Ok(GridColoring { t, cells })
}
