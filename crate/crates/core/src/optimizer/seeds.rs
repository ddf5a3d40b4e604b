//! Starting configurations: structured seeds tried first, then random disks.

use std::f64::consts::TAU;

use rand::Rng;

use crate::graph::Graph;

use super::Target;

/// `k` points on a circle of radius 1, starting at angle 0.
pub fn regular_polygon(k: usize) -> Vec<[f64; 2]> {
    (0..k)
        .map(|i| {
            let a = TAU * i as f64 / k as f64;
            [a.cos(), a.sin()]
        })
        .collect()
}

/// The `k` triangular-lattice points closest to the origin, nearest first.
pub fn triangular_lattice(k: usize) -> Vec<[f64; 2]> {
    let r = (k as f64).sqrt().ceil() as i64 + 1;
    let h = 3f64.sqrt() / 2.0;
    let mut pts: Vec<[f64; 2]> = (-r..=r)
        .flat_map(|j| (-r..=r).map(move |i| [i as f64 + 0.5 * j as f64, h * j as f64]))
        .collect();
    pts.sort_by(|a, b| {
        let key = |p: &[f64; 2]| (p[0] * p[0] + p[1] * p[1], p[1].atan2(p[0]));
        key(a).partial_cmp(&key(b)).expect("finite lattice points")
    });
    pts.truncate(k);
    pts
}

/// A good injective configuration for `k` mutually adjacent points: the
/// regular polygon for `k ≤ 5`, a `(k−1)`-gon around its center for
/// `6 ≤ k ≤ 8`, and a lattice patch beyond.
pub fn clique_configuration(k: usize) -> Vec<[f64; 2]> {
    match k {
        0..=5 => regular_polygon(k),
        6..=8 => centered_polygon(k),
        _ => triangular_lattice(k),
    }
}

fn centered_polygon(k: usize) -> Vec<[f64; 2]> {
    let mut pts = vec![[0.0, 0.0]];
    pts.extend(regular_polygon(k - 1));
    pts
}

/// Vertices in breadth-first order from `root`, covering every component.
fn bfs_order(g: &Graph, root: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in std::iter::once(root).chain(0..g.n()) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !std::mem::replace(&mut seen[w], true) {
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Largest-first greedy coloring.
fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; g.n()];
    for v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    color
}

/// Deterministic structured seeds for `g`, in start-index order.
pub fn structured(g: &Graph, target: Target) -> Vec<Vec<[f64; 2]>> {
    let n = g.n();
    let hub = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut seeds = vec![regular_polygon(n)];
    for center in [hub, n - 1] {
        let ring = regular_polygon(n - 1);
        let mut pts = Vec::with_capacity(n);
        let mut it = ring.into_iter();
        for v in 0..n {
            pts.push(if v == center { [0.0, 0.0] } else { it.next().expect("n − 1 ring points") });
        }
        if !seeds.contains(&pts) {
            seeds.push(pts);
        }
    }
    let lattice = triangular_lattice(n);
    let mut pts = vec![[0.0; 2]; n];
    for (v, p) in bfs_order(g, hub).into_iter().zip(lattice) {
        pts[v] = p;
    }
    seeds.push(pts);
    if target != Target::Re {
        // color classes collapse onto the points of a small clique configuration
        let color = greedy_coloring(g);
        let k = color.iter().max().map_or(1, |&c| c + 1);
        let config = clique_configuration(k);
        seeds.push(color.iter().map(|&c| config[c]).collect());
    }
    seeds
}

/// Extends an `(n−1)`-point configuration by one point in several places:
/// the centroid and a ring just outside the configuration.
pub fn extend_by_one(prev: &[[f64; 2]]) -> Vec<Vec<[f64; 2]>> {
    let k = prev.len() as f64;
    let cx = prev.iter().map(|p| p[0]).sum::<f64>() / k;
    let cy = prev.iter().map(|p| p[1]).sum::<f64>() / k;
    let reach = prev
        .iter()
        .map(|p| ((p[0] - cx).powi(2) + (p[1] - cy).powi(2)).sqrt())
        .fold(0.0, f64::max);
    let mut extra = vec![[cx, cy]];
    for i in 0..6 {
        let a = TAU * (i as f64 + 0.5) / 6.0;
        extra.push([cx + (reach + 0.5) * a.cos(), cy + (reach + 0.5) * a.sin()]);
    }
    extra
        .into_iter()
        .map(|p| {
            let mut pts = prev.to_vec();
            pts.push(p);
            pts
        })
        .collect()
}

/// `n` points uniform in the disk of radius `√n`.
pub fn random_disk(n: usize, rng: &mut impl Rng) -> Vec<[f64; 2]> {
    let radius = (n as f64).sqrt();
    (0..n)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let a = TAU * rng.gen::<f64>();
            [r * a.cos(), r * a.sin()]
        })
        .collect()
}
