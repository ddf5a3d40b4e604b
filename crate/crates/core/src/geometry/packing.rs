use crate::error::Result;
use crate::graph::Graph;

/// Among `n` points with pairwise distances at least 1, some point lies at
/// distance at least `(√n − 1)/2` from any fixed one of them: the disks of
/// radius ½ around the points are disjoint and fit in a disk of radius
/// `R + ½` around the fixed point, so `n/4 ≤ (R + ½)²`.
pub fn packing_radius_bound(n: usize) -> f64 {
    ((n as f64).sqrt() - 1.0) / 2.0
}

/// Certified lower bound on the resolution coefficient of a connected graph:
/// in any representation with minimum pair distance 1, some vertex is at
/// distance `packing_radius_bound(|V|)` from a center vertex, and a shortest
/// path of at most `radius(G)` edges joins them, so one of those edges is at
/// least `packing_radius_bound(|V|) / radius(G)` long.
pub fn re_lower_bound(g: &Graph) -> Result<f64> {
    g.require_edge()?;
    let r = g.radius()?;
    Ok(packing_radius_bound(g.n()) / r as f64)
}

/// [`re_lower_bound`] for the full cubic tree with `k` layers, evaluated from
/// its size `3·2^k − 2` and radius `k` without building the tree.
pub fn cubic_tree_re_lower_bound(k: u32) -> f64 {
    let n = 3.0 * 2f64.powi(k as i32) - 2.0;
    (n.sqrt() - 1.0) / 2.0 / k as f64
}
