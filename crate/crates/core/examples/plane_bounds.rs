//! Upper bounds on dc, pw and re for a named graph, with the witness
//! written as SVG.
//!
//!     cargo run --release --example plane_bounds [wheel|grid|moser] [out.svg]

use gml::geometry::to_svg;
use gml::graph::{grid, moser_spindle, wheel, Graph};
use gml::optimizer::{optimize, OptimizerConfig, Target};

fn main() -> gml::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "wheel".into());
    let g: Graph = match name.as_str() {
        "grid" => grid(3, 3)?,
        "moser" => moser_spindle(),
        _ => wheel(4)?,
    };
    let cfg = OptimizerConfig::with_budget(16, 1000);
    for target in [Target::Dc, Target::Pw, Target::Re] {
        let r = optimize(&g, target, &cfg)?;
        let lower = r.lower_bound.map_or("-".into(), |b| format!("{b:.4}"));
        println!("{name} {target}: {:.6}  (lower bound {lower})", r.upper_bound);
        if target == Target::Re {
            if let Some(path) = args.next() {
                std::fs::write(&path, to_svg(&g, &r.witness))?;
                println!("re witness written to {path}");
            }
        }
    }
    Ok(())
}
