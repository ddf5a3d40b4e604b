//! Lower bounds on the resolution coefficient from disk packing, against
//! optimizer upper bounds for stars.
//!
//!     cargo run --release --example packing_bounds

use gml::geometry::{cubic_tree_re_lower_bound, re_lower_bound};
use gml::graph::star;
use gml::optimizer::{optimize, OptimizerConfig, Target};

fn main() -> gml::Result<()> {
    let cfg = OptimizerConfig::with_budget(16, 1000);
    println!("{:>8}  {:>10}  {:>10}", "star", "lower", "upper");
    for n in [4, 9, 16, 25, 36] {
        let g = star(n)?;
        let upper = optimize(&g, Target::Re, &cfg)?.upper_bound;
        println!("{n:>8}  {:>10.6}  {upper:>10.6}", re_lower_bound(&g)?);
    }
    println!("\nfull cubic trees (formula only):");
    for k in [5, 10, 15, 20, 25] {
        println!("  k = {k:>2}: re >= {:.4}", cubic_tree_re_lower_bound(k));
    }
    Ok(())
}
