//! The Moser spindle: 4-chromatic, yet drawable with all edges of length 1.
//!
//!     cargo run --release --example unit_distance

use gml::geometry::{check_unit_distance, eval_ratios, moser_spindle_coordinates};
use gml::graph::moser_spindle;
use gml::oned::chromatic_number;
use gml::optimizer::{optimize, OptimizerConfig, Target};

fn main() -> gml::Result<()> {
    let g = moser_spindle();
    let (chi, coloring) = chromatic_number(&g)?;
    println!("chromatic number {chi}, coloring {:?}", coloring.colors);

    let rep = moser_spindle_coordinates();
    let r = eval_ratios(&g, &rep)?;
    println!("certificate: unit distance = {}, dc ratio − 1 = {:.2e}", check_unit_distance(&g, &rep, 1e-9), r.dc_ratio.unwrap() - 1.0);

    let found = optimize(&g, Target::Dc, &OptimizerConfig::default())?;
    println!("optimizer: dc bound − 1 = {:.2e}", found.upper_bound - 1.0);
    for (v, p) in found.witness.points.iter().enumerate() {
        println!("  {v}: ({:+.6}, {:+.6})", p[0], p[1]);
    }
    Ok(())
}
