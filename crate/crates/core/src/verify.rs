//! Verification suites over a built-in corpus of small graphs.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{cubic_expansion, minor_rich_graph, ConstructionConfig};
use crate::error::{Error, Result};
use crate::geometry::{
    cubic_tree_re_lower_bound, eval_ratios, grid_coloring, packing_radius_bound, Representation,
};
use crate::graph::{complete, cycle, full_cubic_tree, grid, moser_spindle, path, star, wheel, Graph};
use crate::oned::{bandwidth, chromatic_number, circular_chromatic, dc1, local_density, pw1, re1};
use crate::optimizer::{h_upper, optimize, OptimizerConfig, Target};
use crate::report::{one_dimensional_checks, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Inequalities,
    Table1,
    Constructions,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "inequalities" => Ok(Suite::Inequalities),
            "table1" => Ok(Suite::Table1),
            "constructions" => Ok(Suite::Constructions),
            "all" => Ok(Suite::All),
            other => Err(Error::NotApplicable(format!("unknown suite `{other}`"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Identities => "identities",
            Suite::Inequalities => "inequalities",
            Suite::Table1 => "table1",
            Suite::Constructions => "constructions",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Known values of `h(n)` for `n = 2..=8`.
pub fn table1() -> [(usize, f64); 7] {
    [
        (2, 1.0),
        (3, 1.0),
        (4, 2f64.sqrt()),
        (5, (1.0 + 5f64.sqrt()) / 2.0),
        (6, 2.0 * (2.0 * PI / 5.0).sin()),
        (7, 2.0),
        (8, 1.0 / (2.0 * (PI / 14.0).sin())),
    ]
}

/// Named small graphs covering every generator: complete graphs, cycles,
/// paths, stars, the 4-wheel, the Moser spindle, grids up to 4×5, cubic
/// trees up to 4 layers and the cubic expansions of `K_5` and `K_6`.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut add = |name: String, g: Result<Graph>| out.push((name, g.expect("corpus parameters are valid")));
    for n in 2..=7 {
        add(format!("complete({n})"), complete(n));
    }
    for n in 3..=9 {
        add(format!("cycle({n})"), cycle(n));
    }
    for n in 2..=8 {
        add(format!("path({n})"), path(n));
    }
    for n in 1..=16 {
        add(format!("star({n})"), star(n));
    }
    add("wheel(4)".into(), wheel(4));
    add("moser".into(), Ok(moser_spindle()));
    for m in 2..=4 {
        for n in m..=5 {
            add(format!("grid({m},{n})"), grid(m, n));
        }
    }
    for k in 1..=4 {
        add(format!("cubic_tree({k})"), full_cubic_tree(k));
    }
    for n in 5..=6 {
        add(format!("cubic_expansion({n})"), cubic_expansion(n).map(|(g, _)| g));
    }
    out
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Identities => identities()?,
        Suite::Inequalities => inequalities(seed)?,
        Suite::Table1 => table1_checks(seed)?,
        Suite::Constructions => constructions()?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Identities, Suite::Inequalities, Suite::Table1, Suite::Constructions] {
                all.extend(run_suite(s, seed)?.checks);
            }
            all
        }
    };
    Ok(SuiteReport { suite, checks })
}

/// Exact one-dimensional identities and inequalities on every corpus graph,
/// plus re-validation of every witness.
pub fn identities() -> Result<Vec<Check>> {
    let per_graph: Vec<Result<Vec<Check>>> = corpus()
        .par_iter()
        .map(|(name, g)| {
            let (chi, coloring) = chromatic_number(g)?;
            let cc = circular_chromatic(g)?;
            let (bw, ordering) = bandwidth(g)?;
            let mut checks = one_dimensional_checks(g.clique_number(), chi, &cc.value, bw, &local_density(g));
            checks.push(Check::new("coloring proper", coloring.is_proper(g), chi.to_string()));
            checks.push(Check::new("circular witness valid", cc.is_exact_witness(g), cc.value.to_string()));
            checks.push(Check::new(
                "ordering attains bw",
                ordering.bandwidth_of(g) == bw && ordering.is_bijection(),
                bw.to_string(),
            ));
            let line_ok = |rep: &Representation, want: f64, pick: fn(&crate::geometry::RatioReport) -> Option<f64>| {
                eval_ratios(g, rep).ok().and_then(|r| pick(&r)).is_some_and(|v| v <= want * (1.0 + 1e-12))
            };
            let d = dc1(g)?;
            let p = pw1(g)?;
            let r = re1(g)?;
            checks.push(Check::new("dc1 witness attains", line_ok(&d.witness, d.value.to_f64(), |r| r.dc_ratio), d.value.to_string()));
            checks.push(Check::new("pw1 witness attains", line_ok(&p.witness, p.value as f64, |r| r.pw_ratio), p.value.to_string()));
            checks.push(Check::new("re1 witness attains", line_ok(&r.witness, r.value as f64, |r| r.re_ratio), r.value.to_string()));
            Ok(checks
                .into_iter()
                .map(|c| Check { name: format!("{name}: {}", c.name), ..c })
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for checks in per_graph {
        out.extend(checks?);
    }
    Ok(out)
}

fn random_plane(n: usize, rng: &mut impl Rng) -> Representation {
    Representation::plane((0..n).map(|_| [rng.gen::<f64>(), rng.gen::<f64>()]).collect())
}

/// Pointwise ratio inequalities on random representations, restriction
/// monotonicity, the grid-coloring color bound, homomorphism composition and
/// the packing bounds.
pub fn inequalities(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = corpus();
    let mut checks = Vec::new();

    let mut worst = (0usize, 0usize);
    for _ in 0..1000 {
        let (_, g) = &graphs[rng.gen_range(0..graphs.len())];
        let r = eval_ratios(g, &random_plane(g.n(), &mut rng))?;
        let (dc, pw, re) = (r.dc_ratio.unwrap_or(f64::NAN), r.pw_ratio.unwrap_or(f64::NAN), r.re_ratio.unwrap_or(f64::NAN));
        worst.0 += 1;
        if dc <= pw && dc <= re {
            worst.1 += 1;
        }
    }
    checks.push(Check::new("dc_ratio <= pw_ratio, re_ratio on random representations", worst.0 == worst.1, format!("{}/{}", worst.1, worst.0)));

    let mut mono = (0usize, 0usize);
    for _ in 0..100 {
        let (_, g) = &graphs[rng.gen_range(0..graphs.len())];
        let rep = random_plane(g.n(), &mut rng);
        let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.7)).collect();
        let sub = g.induced(&keep);
        let sub = sub.edge_subgraph(|_, _| rng.gen_bool(0.8));
        if sub.m() == 0 || keep.len() < 2 {
            continue;
        }
        mono.0 += 1;
        let whole = eval_ratios(g, &rep)?.re_ratio;
        let part = eval_ratios(&sub, &rep.restricted(&keep))?.re_ratio;
        if let (Some(w), Some(p)) = (whole, part) {
            if p <= w * (1.0 + 1e-12) {
                mono.1 += 1;
            }
        }
    }
    checks.push(Check::new("re_ratio restriction monotone", mono.0 == mono.1, format!("{}/{}", mono.1, mono.0)));

    let mut colored = (0usize, 0usize);
    for _ in 0..100 {
        let (g, rep) = random_lattice_graph(&mut rng);
        let Ok(gc) = grid_coloring(&g, &rep) else { continue };
        let dc = eval_ratios(&g, &rep)?.dc_ratio.unwrap_or(f64::INFINITY);
        let t = (2f64.sqrt() * dc - 1e-12).ceil() as usize + 1;
        colored.0 += 1;
        if gc.is_proper(&g) && gc.count() <= t * t {
            colored.1 += 1;
        }
    }
    checks.push(Check::new("grid coloring proper within (ceil(sqrt2 dc)+1)^2 colors", colored.0 == colored.1 && colored.0 > 0, format!("{}/{}", colored.1, colored.0)));

    // C9 → C3 by v ↦ v mod 3: composing gives a C9 representation as good as C3's
    let c3 = cycle(3)?;
    let c9 = cycle(9)?;
    let cfg = OptimizerConfig { seed, ..OptimizerConfig::with_budget(4, 300) };
    let h = optimize(&c3, Target::Dc, &cfg)?;
    let phi: Vec<usize> = (0..9).map(|v| v % 3).collect();
    let composed = eval_ratios(&c9, &h.witness.compose(&phi))?.dc_ratio.unwrap_or(f64::INFINITY);
    checks.push(Check::new("homomorphism C9 -> C3 composes dc witness", composed <= h.upper_bound * (1.0 + 1e-12), format!("{composed} <= {}", h.upper_bound)));

    let mut prev = 0.0;
    for n in [9, 16, 25] {
        let r = optimize(&star(n)?, Target::Re, &cfg)?;
        let formula = packing_radius_bound(n + 1);
        checks.push(Check::new(format!("star({n}) re bound >= packing bound"), r.upper_bound >= formula - 1e-9, format!("{} >= {formula}", r.upper_bound)));
        checks.push(Check::new(format!("star({n}) packing bound grows"), formula > prev, formula.to_string()));
        prev = formula;
    }
    let k20 = cubic_tree_re_lower_bound(20);
    checks.push(Check::new("cubic_tree(20) packing bound > 3", k20 > 3.0, k20.to_string()));

    for (name, g) in &graphs {
        let (chi, _) = chromatic_number(g)?;
        checks.push(Check::new(format!("{name}: omega <= chi"), g.clique_number() <= chi, format!("{} <= {chi}", g.clique_number())));
    }
    Ok(checks)
}

/// A random subgraph of a small integer grid with its lattice placement,
/// scaled by a random factor. Edges join points at distance 1 or √2.
pub fn random_lattice_graph(rng: &mut impl Rng) -> (Graph, Representation) {
    let (w, h) = (rng.gen_range(2..6), rng.gen_range(2..6));
    let scale = rng.gen_range(0.5..3.0);
    let n = w * h;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let v = y * w + x;
            for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
                if x + dx < w && y + dy < h && rng.gen_bool(0.6) {
                    edges.push((v, (y + dy) * w + x + dx));
                }
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, 1));
    }
    let g = Graph::new(n, edges).expect("grid edges are valid");
    let rep = Representation::plane((0..n).map(|v| [(v % w) as f64 * scale, (v / w) as f64 * scale]).collect());
    (g, rep)
}

/// `h_upper(n)` against the known values: within `1e-2`, never more than
/// `1e-3` below.
pub fn table1_checks(seed: u64) -> Result<Vec<Check>> {
    let cfg = OptimizerConfig { seed, ..OptimizerConfig::default() };
    table1()
        .into_iter()
        .map(|(n, known)| {
            let got = h_upper(n, &cfg)?.upper_bound;
            let ok = (got - known).abs() <= 1e-2 && got >= known - 1e-3;
            Ok(Check::new(format!("h_upper({n}) vs {known:.6}"), ok, format!("{got:.9}")))
        })
        .collect()
}

/// The pipeline for `n = 5, 6`: lattice points distinct, edges at most √2,
/// the minor witness valid and the straight-line drawing crossing.
pub fn constructions() -> Result<Vec<Check>> {
    let outs: Vec<Result<Vec<Check>>> = [5usize, 6]
        .par_iter()
        .map(|&n| {
            let out = minor_rich_graph(n, &ConstructionConfig::default())?;
            Ok(vec![
                Check::new(format!("construct({n}): min_pair = 1"), out.min_pair_sq == 1, format!("min_pair^2 = {}", out.min_pair_sq)),
                Check::new(format!("construct({n}): max_edge <= sqrt2"), out.max_edge_sq <= 2, format!("max_edge^2 = {}", out.max_edge_sq)),
                Check::new(format!("construct({n}): K{n} witness"), out.witness.check(&out.graph).is_ok(), format!("{} vertices", out.graph.n())),
                Check::new(format!("construct({n}): noncrossing = false"), out.noncrossing == Some(false), format!("{:?}", out.noncrossing)),
                Check::new(format!("construct({n}): max degree <= 3"), out.graph.max_degree() <= 3, out.graph.max_degree().to_string()),
            ])
        })
        .collect();
    let mut checks = Vec::new();
    for o in outs {
        checks.extend(o?);
    }
    Ok(checks)
}
