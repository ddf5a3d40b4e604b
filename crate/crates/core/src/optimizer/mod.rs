//! Multi-start minimax optimization of the three ratios in the plane.
//!
//! Every result is an upper bound certified by its witness: re-evaluating the
//! witness with [`eval_ratios`] reproduces the bound. Descent works on a
//! log-sum-exp surrogate of `log max − log min` whose temperature is lowered
//! along a schedule; a pattern search on the exact ratio finishes each start.

mod objective;
pub mod seeds;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{eval_ratios, re_lower_bound, RatioReport, Representation};
use crate::graph::{complete, Graph};
use crate::oned::chromatic_number;

pub use objective::Objective;

/// Which ratio to minimize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Dc,
    Pw,
    Re,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Dc => "dc",
            Target::Pw => "pw",
            Target::Re => "re",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dc" => Ok(Target::Dc),
            "pw" => Ok(Target::Pw),
            "re" => Ok(Target::Re),
            other => Err(Error::NotApplicable(format!("unknown target `{other}`"))),
        }
    }
}

/// The quantity a [`BoundResult`] bounds: one of the three ratios, or `h(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundTarget {
    Dc,
    Pw,
    Re,
    H,
}

impl From<Target> for BoundTarget {
    fn from(t: Target) -> Self {
        match t {
            Target::Dc => BoundTarget::Dc,
            Target::Pw => BoundTarget::Pw,
            Target::Re => BoundTarget::Re,
        }
    }
}

/// How descent picks its step length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepRule {
    /// Backtracking line search with the Armijo sufficient-decrease test;
    /// the trial step grows after every accepted move.
    Armijo,
    /// Normalized gradient steps whose length decays geometrically within
    /// each temperature stage.
    Decaying,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub starts: usize,
    /// Descent iterations per start, shared across the temperature stages.
    pub iterations: usize,
    pub seed: u64,
    /// Strictly decreasing temperatures, ending at or below `1e-3`.
    pub smoothing_schedule: Vec<f64>,
    pub step_rule: StepRule,
    /// Stall threshold on the surrogate, and the slack allowed between a
    /// bound and its re-evaluated witness.
    pub tolerance: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            starts: 64,
            iterations: 2000,
            seed: 0,
            smoothing_schedule: vec![0.3, 0.1, 0.03, 0.01, 0.003, 0.001],
            step_rule: StepRule::Armijo,
            tolerance: 1e-6,
        }
    }
}

impl OptimizerConfig {
    /// Default settings with a smaller budget.
    pub fn with_budget(starts: usize, iterations: usize) -> Self {
        OptimizerConfig {
            starts,
            iterations,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Optimizer(msg.into()));
        if self.starts == 0 || self.iterations == 0 {
            return bad("starts and iterations must be at least 1");
        }
        let s = &self.smoothing_schedule;
        if s.is_empty() || s.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
            return bad("smoothing schedule must be nonempty and positive");
        }
        if s.windows(2).any(|w| w[1] >= w[0]) {
            return bad("smoothing schedule must be strictly decreasing");
        }
        if *s.last().expect("nonempty") > 1e-3 {
            return bad("smoothing schedule must end at or below 1e-3");
        }
        if !(self.tolerance > 0.0) {
            return bad("tolerance must be positive");
        }
        Ok(())
    }
}

/// An upper bound with the representation that certifies it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub target: BoundTarget,
    pub upper_bound: f64,
    pub witness: Representation,
    pub lower_bound: Option<f64>,
    pub report: RatioReport,
}

/// Minimizes the `target` ratio of `g` over planar representations.
pub fn optimize(g: &Graph, target: Target, cfg: &OptimizerConfig) -> Result<BoundResult> {
    optimize_seeded(g, target, cfg, &[])
}

/// [`optimize`] with extra starting configurations tried before the
/// built-in structured seeds.
pub fn optimize_seeded(
    g: &Graph,
    target: Target,
    cfg: &OptimizerConfig,
    extra: &[Vec<[f64; 2]>],
) -> Result<BoundResult> {
    g.require_edge()?;
    cfg.validate()?;
    if let Some(bad) = extra.iter().find(|s| s.len() != g.n()) {
        return Err(Error::Dimension {
            expected: g.n(),
            found: bad.len(),
        });
    }
    let obj = Objective::new(g, target);
    let mut fixed: Vec<Vec<[f64; 2]>> = extra.to_vec();
    fixed.extend(seeds::structured(g, target));
    fixed.truncate(cfg.starts);

    let run = |i: usize| -> Option<(f64, Vec<f64>)> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i as u64);
        let mut init = fixed.get(i).cloned();
        for _ in 0..3 {
            let pts = init.take().unwrap_or_else(|| seeds::random_disk(g.n(), &mut rng));
            let x: Vec<f64> = pts.iter().flat_map(|p| [p[0], p[1]]).collect();
            if let Some(found) = descend(&obj, x, cfg) {
                return Some(found);
            }
        }
        None
    };
    let outcomes: Vec<Option<(f64, Vec<f64>)>> = with_pool(|| (0..cfg.starts).into_par_iter().map(run).collect());

    let (_, x) = outcomes
        .into_iter()
        .flatten()
        .fold(None::<(f64, Vec<f64>)>, |best, cand| match best {
            Some(b) if b.0 <= cand.0 => Some(b),
            _ => Some(cand),
        })
        .ok_or_else(|| Error::Optimizer("every start produced a non-finite configuration".into()))?;

    let scale = obj.denom_min(&x);
    let points: Vec<[f64; 2]> = x.chunks(2).map(|c| [c[0] / scale, c[1] / scale]).collect();
    let witness = Representation::plane(points);
    let report = eval_ratios(g, &witness)?;
    let upper_bound = report
        .ratio(target)
        .ok_or_else(|| Error::Optimizer("best witness is degenerate".into()))?;
    let lower_bound = match target {
        Target::Re => Some(component_re_bound(g)),
        _ => Some(1.0),
    };
    Ok(BoundResult {
        target: target.into(),
        upper_bound,
        witness,
        lower_bound,
        report,
    })
}

/// Largest packing bound over the components with edges; the resolution
/// ratio of a graph is at least that of each subgraph.
fn component_re_bound(g: &Graph) -> f64 {
    g.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .filter_map(|c| re_lower_bound(&g.induced(&c)).ok())
        .fold(0.0, f64::max)
}

/// Runs `f` on a thread pool capped by `GML_THREADS` when set.
fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("GML_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    match threads.map(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build()) {
        Some(Ok(pool)) => pool.install(f),
        _ => f(),
    }
}

/// One start: annealed surrogate descent followed by exact polish. Returns
/// the best exact ratio seen and its configuration, or `None` if the
/// iterates stop being finite.
fn descend(obj: &Objective, mut x: Vec<f64>, cfg: &OptimizerConfig) -> Option<(f64, Vec<f64>)> {
    if !normalize(obj, &mut x) {
        // coincident seed: spread it slightly and retry once
        for (i, c) in x.iter_mut().enumerate() {
            *c += 1e-3 * ((i * 7919 % 97) as f64 / 97.0 - 0.5);
        }
        if !normalize(obj, &mut x) {
            return None;
        }
    }
    let mut best = (obj.exact(&x), x.clone());
    let stages = cfg.smoothing_schedule.len();
    let per_stage = (cfg.iterations / stages).max(1);
    let mut grad = vec![0.0; x.len()];
    let mut trial = vec![0.0; x.len()];
    for &tau in &cfg.smoothing_schedule {
        let mut f = obj.smooth(&x, tau, &mut grad);
        let mut step = 0.1;
        for it in 0..per_stage {
            if !f.is_finite() {
                return None;
            }
            let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
            if gnorm < 1e-14 {
                break;
            }
            let accepted = match cfg.step_rule {
                StepRule::Armijo => {
                    let mut found = None;
                    while step > 1e-14 {
                        for (t, (xi, gi)) in trial.iter_mut().zip(x.iter().zip(&grad)) {
                            *t = xi - step * gi / gnorm;
                        }
                        let ft = obj.smooth_value(&trial, tau);
                        if ft <= f - 1e-4 * step * gnorm {
                            found = Some(ft);
                            break;
                        }
                        step *= 0.5;
                    }
                    found
                }
                StepRule::Decaying => {
                    let s = 0.1 * 0.995f64.powi(it as i32);
                    for (t, (xi, gi)) in trial.iter_mut().zip(x.iter().zip(&grad)) {
                        *t = xi - s * gi / gnorm;
                    }
                    Some(obj.smooth_value(&trial, tau))
                }
            };
            let Some(ft) = accepted else { break };
            let decrease = f - ft;
            std::mem::swap(&mut x, &mut trial);
            f = obj.smooth(&x, tau, &mut grad);
            if cfg.step_rule == StepRule::Armijo {
                step = (step * 2.0).min(1.0);
            }
            let r = obj.exact(&x);
            if r < best.0 {
                best = (r, x.clone());
            }
            if cfg.step_rule == StepRule::Armijo && decrease.abs() < cfg.tolerance * tau * 1e-3 {
                break;
            }
        }
        if !normalize(obj, &mut x) {
            return None;
        }
    }
    let (mut r, mut y) = best;
    if !normalize(obj, &mut y) {
        return None;
    }
    r = polish(obj, &mut y, 4 * cfg.iterations).min(r);
    r.is_finite().then_some((r, y))
}

/// Centers the configuration and scales it so the denominator minimum is 1.
/// Returns `false` on non-finite or degenerate input.
fn normalize(obj: &Objective, x: &mut [f64]) -> bool {
    let n = x.len() / 2;
    let cx = x.iter().step_by(2).sum::<f64>() / n as f64;
    let cy = x.iter().skip(1).step_by(2).sum::<f64>() / n as f64;
    let s = obj.denom_min(x);
    if !(s.is_finite() && s > 1e-12 && cx.is_finite() && cy.is_finite()) {
        return false;
    }
    for (i, c) in x.iter_mut().enumerate() {
        *c = (*c - if i % 2 == 0 { cx } else { cy }) / s;
    }
    true
}

/// Single-point compass search on the exact ratio, within `budget`
/// evaluations. Returns the final ratio; `x` holds the matching points.
fn polish(obj: &Objective, x: &mut [f64], budget: usize) -> f64 {
    const DIRS: [(f64, f64); 8] = [
        (1.0, 0.0),
        (-1.0, 0.0),
        (0.0, 1.0),
        (0.0, -1.0),
        (0.7071067811865476, 0.7071067811865476),
        (-0.7071067811865476, -0.7071067811865476),
        (0.7071067811865476, -0.7071067811865476),
        (-0.7071067811865476, 0.7071067811865476),
    ];
    let n = x.len() / 2;
    let mut best = obj.exact(x);
    let mut delta = 0.05;
    let mut evals = 0;
    while evals < budget && delta > 1e-10 {
        let mut improved = false;
        for v in 0..n {
            for &(dx, dy) in &DIRS {
                let (ox, oy) = (x[2 * v], x[2 * v + 1]);
                x[2 * v] = ox + delta * dx;
                x[2 * v + 1] = oy + delta * dy;
                let r = obj.exact(x);
                evals += 1;
                if r < best {
                    best = r;
                    improved = true;
                } else {
                    x[2 * v] = ox;
                    x[2 * v + 1] = oy;
                }
            }
        }
        if !improved {
            delta *= 0.5;
        }
    }
    best
}

/// Upper bound on `h(n)`: the resolution ratio of `K_n`, which equals its
/// dilation and plane-width ratios for every injective representation.
pub fn h_upper(n: usize, cfg: &OptimizerConfig) -> Result<BoundResult> {
    h_upper_seeded(n, cfg, None)
}

/// [`h_upper`] that additionally starts from `prev` (an `(n−1)`-point
/// configuration) extended by one point.
pub fn h_upper_seeded(n: usize, cfg: &OptimizerConfig, prev: Option<&Representation>) -> Result<BoundResult> {
    let g = complete(n)?;
    g.require_edge()?;
    let extra = prev
        .filter(|p| p.len() + 1 == n)
        .map(|p| seeds::extend_by_one(&p.points))
        .unwrap_or_default();
    let mut result = optimize_seeded(&g, Target::Re, cfg, &extra)?;
    result.target = BoundTarget::H;
    Ok(result)
}

/// `h_upper(n)` for `n = 2..=max_n`, each run also seeded from the previous
/// configuration plus one point.
pub fn h_upper_sequence(max_n: usize, cfg: &OptimizerConfig) -> Result<Vec<BoundResult>> {
    let mut out: Vec<BoundResult> = Vec::new();
    for n in 2..=max_n {
        let next = h_upper_seeded(n, cfg, out.last().map(|r| &r.witness))?;
        out.push(next);
    }
    Ok(out)
}

/// Plane-width bound for graphs whose chromatic and clique numbers agree:
/// color class `i` goes to point `i` of the best `h(χ)` configuration.
pub fn perfect_pw(g: &Graph, cfg: &OptimizerConfig) -> Result<BoundResult> {
    let (chi, coloring) = chromatic_number(g)?;
    let omega = g.clique_number();
    if chi != omega {
        return Err(Error::NotApplicable(format!(
            "graph not weakly perfect at top level (chromatic number {chi}, clique number {omega})"
        )));
    }
    let config = h_upper(chi, cfg)?;
    let witness = Representation::plane(coloring.colors.iter().map(|&c| config.witness.points[c]).collect());
    let report = eval_ratios(g, &witness)?;
    let upper_bound = report
        .pw_ratio
        .ok_or_else(|| Error::Optimizer("color classes collapsed".into()))?;
    Ok(BoundResult {
        target: BoundTarget::Pw,
        upper_bound,
        witness,
        lower_bound: Some(1.0),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, grid, star, wheel};

    fn quick() -> OptimizerConfig {
        OptimizerConfig::with_budget(8, 400)
    }

    #[test]
    fn config_validation() {
        assert!(OptimizerConfig::default().validate().is_ok());
        let mut cfg = quick();
        cfg.smoothing_schedule = vec![0.1, 0.1, 0.001];
        assert!(cfg.validate().is_err());
        cfg.smoothing_schedule = vec![0.1, 0.01];
        assert!(cfg.validate().is_err());
        cfg = quick();
        cfg.starts = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn spec_examples() {
        let k4 = complete(4).unwrap();
        let r = optimize(&k4, Target::Pw, &quick()).unwrap();
        assert!(r.upper_bound <= 2f64.sqrt() + 1e-3);
        let c5 = cycle(5).unwrap();
        let r = optimize(&c5, Target::Dc, &quick()).unwrap();
        assert!(r.upper_bound <= 1.0 + 1e-6);
        let s6 = star(6).unwrap();
        let r = optimize(&s6, Target::Re, &quick()).unwrap();
        assert!(r.upper_bound <= 1.0 + 1e-3);
        assert!(r.lower_bound.unwrap() <= r.upper_bound);
    }

    #[test]
    fn witness_is_normalized_and_consistent() {
        let g = wheel(5).unwrap();
        for target in [Target::Dc, Target::Pw, Target::Re] {
            let r = optimize(&g, target, &quick()).unwrap();
            let again = eval_ratios(&g, &r.witness).unwrap();
            assert_eq!(again.ratio(target), Some(r.upper_bound));
            let denom = match target {
                Target::Re => again.min_pair.dist,
                _ => again.min_edge.dist,
            };
            assert!((denom - 1.0).abs() < 1e-12);
            let dc = again.dc_ratio.unwrap();
            assert!(dc <= again.pw_ratio.unwrap() + 1e-12);
            if let Some(re) = again.re_ratio {
                assert!(dc <= re + 1e-12);
            }
        }
    }

    #[test]
    fn deterministic() {
        let g = grid(2, 3).unwrap();
        let cfg = OptimizerConfig { seed: 42, ..quick() };
        assert_eq!(optimize(&g, Target::Re, &cfg).unwrap(), optimize(&g, Target::Re, &cfg).unwrap());
    }

    #[test]
    fn random_starts_make_progress() {
        // no structured seeds: every start is random
        let g = complete(5).unwrap();
        let mut cfg = OptimizerConfig::with_budget(12, 1500);
        cfg.seed = 3;
        let obj = Objective::new(&g, Target::Re);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut best = f64::INFINITY;
        for _ in 0..cfg.starts {
            let pts = seeds::random_disk(5, &mut rng);
            let x = pts.iter().flat_map(|p| [p[0], p[1]]).collect();
            best = best.min(descend(&obj, x, &cfg).unwrap().0);
        }
        assert!(best < (1.0 + 5f64.sqrt()) / 2.0 + 1e-2, "best {best}");
    }

    #[test]
    fn perfect_pw_examples() {
        let r = perfect_pw(&complete(4).unwrap(), &quick()).unwrap();
        assert!((r.upper_bound - 2f64.sqrt()).abs() < 1e-3);
        assert_eq!(perfect_pw(&cycle(4).unwrap(), &quick()).unwrap().upper_bound, 1.0);
        assert_eq!(perfect_pw(&grid(3, 3).unwrap(), &quick()).unwrap().upper_bound, 1.0);
        assert!(matches!(perfect_pw(&cycle(5).unwrap(), &quick()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn target_parsing() {
        for t in [Target::Dc, Target::Pw, Target::Re] {
            assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
        }
        assert!("h".parse::<Target>().is_err());
    }
}
