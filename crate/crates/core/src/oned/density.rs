use crate::graph::Graph;

use super::rational::Rational;

/// `max over v, r ≥ 1 of |N(v, r)| / (2r)`, where `N(v, r)` is the closed ball
/// of radius `r` around `v` (including `v`). Radii run up to the diameter of
/// `v`'s component; larger radii only shrink the ratio.
///
/// Returns `0/1` for an edgeless graph.
pub fn local_density(g: &Graph) -> Rational {
    ball_ratios(g, 0)
        .max()
        .unwrap_or(Rational::integer(0))
}

/// Bandwidth lower bound `max ⌈(|N(v, r)| − 1) / (2r)⌉`: the `|N(v, r)| − 1`
/// other vertices of a ball sit within `r·bw` positions on either side of `v`.
pub fn density_bandwidth_bound(g: &Graph) -> usize {
    ball_ratios(g, 1)
        .map(|r| r.ceil() as usize)
        .max()
        .unwrap_or(0)
}

fn ball_ratios(g: &Graph, discount: u64) -> impl Iterator<Item = Rational> + '_ {
    (0..g.n()).flat_map(move |v| {
        let dist = g.distances_from(v);
        let ecc = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; ecc + 1];
        for d in dist.into_iter().flatten() {
            counts[d] += 1;
        }
        let mut ball = 0;
        let mut out = Vec::with_capacity(ecc);
        for (r, c) in counts.into_iter().enumerate() {
            ball += c;
            if r >= 1 {
                out.push(Rational::new(ball - discount, 2 * r as u64));
            }
        }
        out
    })
}
