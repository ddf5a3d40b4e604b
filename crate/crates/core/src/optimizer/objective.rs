//! Smoothed and exact forms of the three ratio objectives over a flat
//! coordinate vector `[x0, y0, x1, y1, …]`.

use crate::graph::Graph;

use super::Target;

/// Squared distances below this are treated as coincident points.
const TINY: f64 = 1e-24;

/// Pair sets feeding the numerator (a maximum) and denominator (a minimum)
/// of one target ratio.
#[derive(Debug, Clone)]
pub struct Objective {
    pub numer: Vec<(usize, usize)>,
    pub denom: Vec<(usize, usize)>,
}

impl Objective {
    pub fn new(g: &Graph, target: Target) -> Self {
        let edges = g.edges().to_vec();
        let pairs: Vec<_> = g.vertex_pairs().collect();
        let (numer, denom) = match target {
            Target::Dc => (edges.clone(), edges),
            Target::Pw => (pairs, edges),
            Target::Re => (edges, pairs),
        };
        Objective { numer, denom }
    }

    /// Exact ratio `max numer / min denom`; infinite when degenerate.
    pub fn exact(&self, x: &[f64]) -> f64 {
        let max = self.numer.iter().map(|&(u, v)| dist2(x, u, v)).fold(0.0, f64::max);
        let min = self
            .denom
            .iter()
            .map(|&(u, v)| dist2(x, u, v))
            .fold(f64::INFINITY, f64::min);
        if min <= TINY {
            f64::INFINITY
        } else {
            (max / min).sqrt()
        }
    }

    /// Smallest denominator distance.
    pub fn denom_min(&self, x: &[f64]) -> f64 {
        self.denom
            .iter()
            .map(|&(u, v)| dist2(x, u, v))
            .fold(f64::INFINITY, f64::min)
            .sqrt()
    }

    /// Log-sum-exp surrogate of `log(max numer) − log(min denom)` at
    /// temperature `tau`, with its gradient written into `grad`. Invariant
    /// under scaling and rigid motions.
    pub fn smooth(&self, x: &[f64], tau: f64, grad: &mut [f64]) -> f64 {
        grad.iter_mut().for_each(|g| *g = 0.0);
        let up = soft_extreme(x, &self.numer, tau, 1.0, grad);
        let down = soft_extreme(x, &self.denom, tau, -1.0, grad);
        up + down
    }

    /// Surrogate value only.
    pub fn smooth_value(&self, x: &[f64], tau: f64) -> f64 {
        let logs = |pairs: &[(usize, usize)], sign: f64| {
            let ls: Vec<f64> = pairs.iter().map(|&(u, v)| sign * log_dist(x, u, v)).collect();
            let m = ls.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            m + tau * ls.iter().map(|&l| ((l - m) / tau).exp()).sum::<f64>().ln()
        };
        logs(&self.numer, 1.0) + logs(&self.denom, -1.0)
    }
}

/// `tau · log Σ exp(sign · log d / tau)` and its gradient (accumulated).
fn soft_extreme(x: &[f64], pairs: &[(usize, usize)], tau: f64, sign: f64, grad: &mut [f64]) -> f64 {
    let ls: Vec<f64> = pairs.iter().map(|&(u, v)| sign * log_dist(x, u, v)).collect();
    let m = ls.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = ls.iter().map(|&l| ((l - m) / tau).exp()).collect();
    let total: f64 = weights.iter().sum();
    for (&(u, v), &w) in pairs.iter().zip(&weights) {
        let share = w / total;
        if share < 1e-300 {
            continue;
        }
        let d2 = dist2(x, u, v).max(TINY);
        let dx = x[2 * u] - x[2 * v];
        let dy = x[2 * u + 1] - x[2 * v + 1];
        let s = sign * share / d2;
        grad[2 * u] += s * dx;
        grad[2 * u + 1] += s * dy;
        grad[2 * v] -= s * dx;
        grad[2 * v + 1] -= s * dy;
    }
    m + tau * total.ln()
}

#[inline]
pub fn dist2(x: &[f64], u: usize, v: usize) -> f64 {
    let dx = x[2 * u] - x[2 * v];
    let dy = x[2 * u + 1] - x[2 * v + 1];
    dx * dx + dy * dy
}

#[inline]
fn log_dist(x: &[f64], u: usize, v: usize) -> f64 {
    0.5 * dist2(x, u, v).max(TINY).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    fn random_point(seed: u64, n: usize) -> Vec<f64> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..2 * n).map(|_| rng.gen_range(-2.0..2.0)).collect()
    }

    #[test]
    fn gradient_matches_finite_differences() {
        for (g, target) in [
            (complete(5).unwrap(), Target::Re),
            (cycle(6).unwrap(), Target::Dc),
            (cycle(5).unwrap(), Target::Pw),
        ] {
            let obj = Objective::new(&g, target);
            let x = random_point(7, g.n());
            let tau = 0.2;
            let mut grad = vec![0.0; x.len()];
            let f = obj.smooth(&x, tau, &mut grad);
            assert!((f - obj.smooth_value(&x, tau)).abs() < 1e-12);
            let h = 1e-6;
            for i in 0..x.len() {
                let mut xp = x.clone();
                xp[i] += h;
                let mut xm = x.clone();
                xm[i] -= h;
                let fd = (obj.smooth_value(&xp, tau) - obj.smooth_value(&xm, tau)) / (2.0 * h);
                assert!((fd - grad[i]).abs() < 1e-5, "coordinate {i}: {fd} vs {}", grad[i]);
            }
        }
    }

    #[test]
    fn surrogate_brackets_exact() {
        let g = complete(6).unwrap();
        let obj = Objective::new(&g, Target::Re);
        let x = random_point(3, 6);
        let exact = obj.exact(&x).ln();
        for tau in [0.1, 0.01, 0.001] {
            let s = obj.smooth_value(&x, tau);
            assert!(s >= exact - 1e-12);
            assert!(s <= exact + 2.0 * tau * (15f64).ln() + 1e-12);
        }
    }

    #[test]
    fn scale_invariant() {
        let g = cycle(5).unwrap();
        let obj = Objective::new(&g, Target::Pw);
        let x = random_point(11, 5);
        let y: Vec<f64> = x.iter().map(|v| v * 3.7 + 1.0).collect();
        assert!((obj.smooth_value(&x, 0.05) - obj.smooth_value(&y, 0.05)).abs() < 1e-9);
        assert!((obj.exact(&x) - obj.exact(&y)).abs() < 1e-9);
    }
}
