use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;

/// Exact chromatic number with the lexicographically smallest optimal
/// coloring (vertices compared in id order, colors as small as possible).
///
/// Iterative deepening from the clique number up to the DSATUR bound; each
/// level runs a forward-checking search over vertices in id order, so the
/// first coloring found is the lexicographically smallest one.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    g.require_edge()?;
    let lower = g.clique_number();
    let upper = dsatur_bound(g);
    for k in lower..=upper {
        if let Some(colors) = first_coloring(g, k) {
            let count = colors.iter().max().map_or(0, |&c| c + 1);
            return Ok((count, Coloring { colors, count }));
        }
    }
    unreachable!("DSATUR bound {upper} is always feasible")
}

/// Colors used by the DSATUR greedy heuristic.
pub fn dsatur_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let saturation = |v: usize| {
            let mut seen: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| color[w])
                .filter(|&c| c != usize::MAX)
                .collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        };
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (saturation(v), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&w| color[w] != c))
            .unwrap_or(0);
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Lexicographically first proper coloring with colors `0..k`, or `None`.
fn first_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 || k > 64 {
        return None;
    }
    let n = g.n();
    let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = ColorSearch {
        g,
        domain: vec![full; n],
        color: vec![usize::MAX; n],
        trail: Vec::new(),
    };
    search.extend(0, 0).then_some(search.color)
}

struct ColorSearch<'a> {
    g: &'a Graph,
    domain: Vec<u64>,
    color: Vec<usize>,
    trail: Vec<(usize, u64)>,
}

impl ColorSearch<'_> {
    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        // a new color is interchangeable with every other unused one
        let allowed = self.domain[v] & mask_below(used + 1);
        let mut options = allowed;
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let mark = self.trail.len();
            if self.assign(v, c) && self.extend(v + 1, used.max(c + 1)) {
                return true;
            }
            self.undo(mark);
            self.color[v] = usize::MAX;
        }
        false
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let bit = 1u64 << c;
        for &w in self.g.neighbors(v) {
            if w > v && self.domain[w] & bit != 0 {
                self.trail.push((w, self.domain[w]));
                self.domain[w] &= !bit;
                if self.domain[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (w, d) = self.trail.pop().expect("trail nonempty");
            self.domain[w] = d;
        }
    }
}

fn mask_below(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}
