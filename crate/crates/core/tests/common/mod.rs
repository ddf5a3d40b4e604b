//! Brute-force reference implementations, independent of the library's
//! solvers. Exponential; meant for graphs with a handful of vertices.

#![allow(dead_code)]

use gml::graph::Graph;
use gml::minor::MinorWitness;

/// Calls `visit` with every map `0..n → 0..k`, the first coordinate fixed
/// to `first` when given. Stops early when `visit` returns `true`.
pub fn for_each_labeling(n: usize, k: usize, first: Option<usize>, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if n == 0 {
        return visit(&[]);
    }
    let mut labels = vec![0; n];
    let start = if first.is_some() { 1 } else { 0 };
    if let Some(f) = first {
        labels[0] = f;
    }
    loop {
        if visit(&labels) {
            return true;
        }
        let mut i = start;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] < k {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    (1..=g.n())
        .find(|&k| for_each_labeling(g.n(), k, None, |c| g.edges().iter().all(|&(u, v)| c[u] != c[v])))
        .expect("n colors always suffice")
}

/// Does a map into `Z_p` exist with circular distance at least `q` on
/// every edge? Vertex 0 is pinned (rotation invariance) only when the graph
/// is connected.
pub fn circular_colorable(g: &Graph, p: usize, q: usize) -> bool {
    let first = g.is_connected().then_some(0);
    for_each_labeling(g.n(), p, first, |c| {
        g.edges().iter().all(|&(u, v)| {
            let d = c[u].abs_diff(c[v]);
            d.min(p - d) >= q
        })
    })
}

/// Smallest `p/q` over all `q ≤ max_q`, `2q ≤ p ≤ max_p` with a circular
/// `(p, q)`-coloring, as a reduced pair.
pub fn circular_chromatic(g: &Graph, max_p: usize, max_q: usize) -> (usize, usize) {
    let mut best: Option<(usize, usize)> = None;
    for q in 1..=max_q {
        for p in 2 * q..=max_p {
            if best.is_some_and(|(bp, bq)| p * bq >= bp * q) {
                break;
            }
            if circular_colorable(g, p, q) {
                best = Some((p, q));
                break;
            }
        }
    }
    let (p, q) = best.expect("χ/1 is within range");
    let g = gcd(p, q);
    (p / g, q / g)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Minimum bandwidth over all orderings, enumerated with Heap's algorithm.
pub fn bandwidth(g: &Graph) -> usize {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let width = |perm: &[usize]| {
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        g.edges().iter().map(|&(u, v)| pos[u].abs_diff(pos[v])).max().unwrap_or(0)
    };
    let mut best = width(&perm);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(width(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Searches for a `target` minor by assigning every host vertex to one of
/// the branch sets or to none. Returns the first valid witness.
pub fn find_minor(host: &Graph, target: &Graph) -> Option<MinorWitness> {
    let k = target.n();
    let mut found = None;
    for_each_labeling(host.n(), k + 1, None, |labels| {
        let mut sets = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            if l < k {
                sets[l].push(v);
            }
        }
        if sets.iter().any(Vec::is_empty) {
            return false;
        }
        let w = MinorWitness::new(sets, target.clone());
        if w.check(host).is_ok() {
            found = Some(w);
            true
        } else {
            false
        }
    });
    found
}

/// `h(n)` from its closed forms for `n ≤ 8`.
pub fn known_h(n: usize) -> f64 {
    use std::f64::consts::PI;
    match n {
        2 | 3 => 1.0,
        4 => 2f64.sqrt(),
        5 => (1.0 + 5f64.sqrt()) / 2.0,
        6 => 2.0 * (72f64.to_radians()).sin(),
        7 => 2.0,
        8 => 1.0 / (2.0 * (PI / 14.0).sin()),
        _ => panic!("unknown"),
    }
}

/// Packing bound from the area argument: `n` disjoint disks of radius ½
/// inside a disk of radius `R + ½` force `R ≥ (√n − 1)/2`.
pub fn packing_radius(n: usize) -> f64 {
    ((n as f64).sqrt() - 1.0) / 2.0
}
