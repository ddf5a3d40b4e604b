use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gml::constructions::{minor_rich_graph, ConstructionConfig};
use gml::geometry::to_svg;
use gml::graph::{self, Graph};
use gml::io::{self, GraphFormat};
use gml::optimizer::{optimize, OptimizerConfig, Target};
use gml::report::invariants_report;
use gml::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "gml", version, about = "Distance-ratio invariants of graph representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph as an edge list (or DIMACS).
    Gen {
        /// complete | star | cycle | path | wheel | grid | moser | cubictree
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact one-dimensional invariants and identity checks.
    Invariants {
        graph: String,
        /// Also compute plane bounds with the optimizer.
        #[arg(long)]
        optimize: bool,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Upper bound on one ratio, with witness representation and SVG.
    Optimize {
        graph: String,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, default_value = "gml-out")]
        out: PathBuf,
    },
    /// Build the max-degree-3 graph with a K_n minor and resolution √2.
    Construct {
        n: usize,
        #[arg(long, default_value = "gml-out")]
        out: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    starts: u64,
    #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
    iters: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

impl Budget {
    fn config(&self) -> OptimizerConfig {
        OptimizerConfig {
            starts: self.starts as usize,
            iterations: self.iters as usize,
            seed: self.seed,
            tolerance: self.tol,
            ..OptimizerConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Dc,
    Pw,
    Re,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Inequalities,
    Table1,
    Constructions,
    All,
}

/// Failures split by exit code.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<gml::Error> for Failure {
    fn from(e: gml::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Some(t) = std::env::var("GML_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        // ignore failure: the pool may already be initialized
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("gml: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("gml: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Gen { family, params, format, out } => {
            let g = generate(&family, &params)?;
            let format = match format {
                Format::Edgelist => GraphFormat::EdgeList,
                Format::Dimacs => GraphFormat::Dimacs,
            };
            let text = io::write_graph(&g, format);
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Invariants { graph, optimize, budget, out } => {
            let g = load(&graph)?;
            let cfg = budget.config();
            let report = invariants_report(&g, optimize.then_some(&cfg))?;
            let json = report.to_json();
            println!("{json}");
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join("report.json"), &json)?;
            }
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("FAIL {}: {}", c.name, c.value);
            }
            Ok(report.all_passed())
        }
        Command::Optimize { graph, target, budget, out } => {
            let g = load(&graph)?;
            let target = match target {
                TargetArg::Dc => Target::Dc,
                TargetArg::Pw => Target::Pw,
                TargetArg::Re => Target::Re,
            };
            let r = optimize(&g, target, &budget.config())?;
            fs::create_dir_all(&out)?;
            fs::write(out.join("witness.txt"), io::write_representation(&r.witness))?;
            fs::write(out.join("witness.svg"), to_svg(&g, &r.witness))?;
            let json = serde_json::to_string_pretty(&r).expect("bound serializes");
            fs::write(out.join("bound.json"), &json)?;
            let lower = r.lower_bound.map_or("none".to_string(), |b| format!("{b:.9}"));
            println!("{target} upper bound {:.9} (lower bound {lower})", r.upper_bound);
            println!("witness written to {}", out.display());
            Ok(r.lower_bound.is_none_or(|b| b <= r.upper_bound + 1e-12))
        }
        Command::Construct { n, out } => {
            if n < 5 {
                return Err(Failure::Usage(format!("construct needs n >= 5, got {n}")));
            }
            let c = minor_rich_graph(n, &ConstructionConfig::default())?;
            let witness_ok = c.witness.check(&c.graph).is_ok();
            let checks = [
                (format!("re_ratio <= {:.8}", 2f64.sqrt() + 5e-9), c.max_edge_sq <= 2 && c.min_pair_sq == 1),
                (format!("min_pair = {}", (c.min_pair_sq as f64).sqrt()), c.min_pair_sq == 1),
                (format!("K{n} witness {}", if witness_ok { "OK" } else { "INVALID" }), witness_ok),
                (format!("noncrossing = {}", c.noncrossing == Some(true)), c.noncrossing == Some(false)),
            ];
            let transcript = format!(
                "{}\nvertices = {}, edges = {}, max degree = {}, re_ratio = {:.12}\n",
                checks.iter().map(|(s, _)| s.as_str()).collect::<Vec<_>>().join(", "),
                c.graph.n(),
                c.graph.m(),
                c.graph.max_degree(),
                c.report.re_ratio.unwrap_or(f64::NAN),
            );
            fs::create_dir_all(&out)?;
            fs::write(out.join("graph.txt"), io::write_graph(&c.graph, GraphFormat::EdgeList))?;
            fs::write(out.join("representation.txt"), io::write_representation(&c.representation))?;
            fs::write(out.join("witness.json"), io::write_witness(&c.witness))?;
            fs::write(out.join("drawing.svg"), to_svg(&c.graph, &c.representation))?;
            fs::write(out.join("transcript.txt"), &transcript)?;
            print!("{transcript}");
            Ok(checks.iter().all(|(_, ok)| *ok))
        }
        Command::Verify { suite, seed } => {
            let suite = match suite {
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Inequalities => Suite::Inequalities,
                SuiteArg::Table1 => Suite::Table1,
                SuiteArg::Constructions => Suite::Constructions,
                SuiteArg::All => Suite::All,
            };
            let report = run_suite(suite, seed)?;
            for c in &report.checks {
                println!("{} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.value);
            }
            let failed = report.failures().count();
            println!("{suite}: {} checks, {failed} failed", report.checks.len());
            Ok(failed == 0)
        }
    }
}

fn generate(family: &str, p: &[usize]) -> Result<Graph, Failure> {
    let arity = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!("{family} takes {k} parameter(s), got {}", p.len())))
        }
    };
    let usage = |e: gml::Error| Failure::Usage(e.to_string());
    match family {
        "complete" => arity(1).and_then(|_| graph::complete(p[0]).map_err(usage)),
        "star" => arity(1).and_then(|_| graph::star(p[0]).map_err(usage)),
        "cycle" => arity(1).and_then(|_| graph::cycle(p[0]).map_err(usage)),
        "path" => arity(1).and_then(|_| graph::path(p[0]).map_err(usage)),
        "wheel" => arity(1).and_then(|_| graph::wheel(p[0]).map_err(usage)),
        "grid" => arity(2).and_then(|_| graph::grid(p[0], p[1]).map_err(usage)),
        "moser" => arity(0).map(|_| graph::moser_spindle()),
        "cubictree" => arity(1).and_then(|_| graph::full_cubic_tree(p[0]).map_err(usage)),
        other => Err(Failure::Usage(format!("unknown family `{other}`"))),
    }
}

/// Reads a graph file, or builds a named graph such as `K7`, `C5`,
/// `star16`, `P4`, `W4`, `grid3x4`, `moser` or `cubictree3`.
fn load(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).exists() {
        return Ok(io::read_graph_file(arg)?);
    }
    let split = arg.find(|c: char| c.is_ascii_digit()).unwrap_or(arg.len());
    let (name, rest) = arg.split_at(split);
    let nums: Option<Vec<usize>> = if rest.is_empty() {
        Some(Vec::new())
    } else {
        rest.split('x').map(|s| s.parse().ok()).collect()
    };
    let family = match name {
        "K" => "complete",
        "C" => "cycle",
        "P" => "path",
        "W" => "wheel",
        other => other,
    };
    match nums {
        Some(nums) if ["complete", "cycle", "path", "wheel", "star", "grid", "moser", "cubictree"].contains(&family) => {
            generate(family, &nums)
        }
        _ => Err(Failure::Usage(format!("`{arg}` is neither a file nor a named graph"))),
    }
}
