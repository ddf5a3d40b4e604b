use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

use super::chromatic::chromatic_number;
use super::rational::Rational;

/// A map `f: V → [0, c)` with `1 ≤ |f(u) − f(v)| ≤ c − 1` on every edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircularColoring {
    pub c: f64,
    pub f: Vec<f64>,
}

impl CircularColoring {
    /// Checks range and edge constraints with absolute slack `tol`.
    pub fn is_valid(&self, g: &Graph, tol: f64) -> bool {
        self.violation(g, tol).is_none()
    }

    /// First edge breaking the constraint, if any.
    pub fn violation(&self, g: &Graph, tol: f64) -> Option<(usize, usize)> {
        if self.f.len() != g.n() || self.f.iter().any(|&x| x < -tol || x >= self.c + tol) {
            return Some((usize::MAX, usize::MAX));
        }
        g.edges().iter().copied().find(|&(u, v)| {
            let d = (self.f[u] - self.f[v]).abs();
            d < 1.0 - tol || d > self.c - 1.0 + tol
        })
    }
}

/// Exact circular chromatic number with a lattice witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircularChromatic {
    pub value: Rational,
    /// `f(v) = labels[v] / q` where `value = p/q`.
    pub labels: Vec<u64>,
    pub coloring: CircularColoring,
}

impl CircularChromatic {
    /// Integer re-check of the witness: labels in `0..p`, and every edge has
    /// circular label distance at least `q`.
    pub fn is_exact_witness(&self, g: &Graph) -> bool {
        let (p, q) = (self.value.numer(), self.value.denom());
        self.labels.len() == g.n()
            && self.labels.iter().all(|&a| a < p)
            && g.edges().iter().all(|&(u, v)| {
                let d = self.labels[u].abs_diff(self.labels[v]);
                q <= d && d <= p - q
            })
    }
}

/// Exact `χ_c(G)`: the smallest `p/q` with `χ − 1 < p/q ≤ χ`, `q ≤ n` and
/// `p ≤ n` for which a circular `p/q`-coloring with values on the `1/q`
/// lattice exists. The feasible set always contains `χ/1`.
pub fn circular_chromatic(g: &Graph) -> Result<CircularChromatic> {
    let (chi, _) = chromatic_number(g)?;
    let n = g.n() as u64;
    let chi = chi as u64;
    let low = Rational::integer(chi - 1);
    let high = Rational::integer(chi);
    let mut candidates: Vec<Rational> = Vec::new();
    for q in 1..=n {
        for p in 1..=n.max(chi) {
            let r = Rational::new(p, q);
            if r.denom() == q && r > low && r <= high {
                candidates.push(r);
            }
        }
    }
    candidates.sort();
    for r in candidates {
        let labels = first_circular(g, r.numer(), r.denom());
        if let Some(labels) = labels {
            let q = r.denom() as f64;
            let f = labels.iter().map(|&a| a as f64 / q).collect();
            return Ok(CircularChromatic {
                value: r,
                labels,
                coloring: CircularColoring { c: r.to_f64(), f },
            });
        }
    }
    unreachable!("χ/1 is always feasible")
}

/// Lexicographically first `(p, q)`-coloring: labels in `0..p` with circular
/// distance at least `q` across every edge. The smallest vertex of each
/// component is pinned to `0` (rotations preserve feasibility).
pub fn first_circular(g: &Graph, p: u64, q: u64) -> Option<Vec<u64>> {
    if q == 0 || p < 2 * q {
        return if g.m() == 0 { Some(vec![0; g.n()]) } else { None };
    }
    let p = p as usize;
    let q = q as usize;
    let words = p.div_ceil(64);
    let mut full = vec![u64::MAX; words];
    if p % 64 != 0 {
        full[words - 1] = (1u64 << (p % 64)) - 1;
    }
    let mut domain: Vec<Vec<u64>> = vec![full; g.n()];
    for comp in g.components() {
        let root = comp[0];
        domain[root] = vec![0; words];
        domain[root][0] = 1;
    }
    let mut search = CircularSearch {
        g,
        p,
        q,
        domain,
        label: vec![usize::MAX; g.n()],
        trail: Vec::new(),
    };
    search
        .extend(0)
        .then(|| search.label.iter().map(|&a| a as u64).collect())
}

struct CircularSearch<'a> {
    g: &'a Graph,
    p: usize,
    q: usize,
    domain: Vec<Vec<u64>>,
    label: Vec<usize>,
    trail: Vec<(usize, usize, u64)>,
}

impl CircularSearch<'_> {
    fn extend(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        for a in 0..self.p {
            if self.domain[v][a / 64] >> (a % 64) & 1 == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(v, a) && self.extend(v + 1) {
                return true;
            }
            self.undo(mark);
        }
        self.label[v] = usize::MAX;
        false
    }

    fn assign(&mut self, v: usize, a: usize) -> bool {
        self.label[v] = a;
        let (p, q) = (self.p, self.q);
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            if w <= v {
                continue;
            }
            // forbid labels at circular distance < q from a
            for off in 0..(2 * q - 1) {
                let b = (a + p + off + 1 - q) % p;
                let (word, bit) = (b / 64, 1u64 << (b % 64));
                let cur = self.domain[w][word];
                if cur & bit != 0 {
                    self.trail.push((w, word, cur));
                    self.domain[w][word] = cur & !bit;
                }
            }
            if self.domain[w].iter().all(|&x| x == 0) {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (w, word, old) = self.trail.pop().expect("trail nonempty");
            self.domain[w][word] = old;
        }
    }
}
