//! Coloring a graph from a plane representation by square cells: with
//! cells of side 1/√2 (shortest edge 1) adjacent vertices never share a
//! cell, and reusing colors with period t = ⌈√2·dc⌉ + 1 in both directions
//! keeps the coloring proper with t² colors.
//!
//!     cargo run --example grid_coloring

use gml::geometry::{eval_ratios, grid_coloring, Representation};
use gml::graph::complete;
use gml::verify::random_lattice_graph;
use rand::SeedableRng;

fn main() -> gml::Result<()> {
    let k4 = complete(4)?;
    let square = Representation::plane(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
    let gc = grid_coloring(&k4, &square)?;
    println!("K4 on the unit square: t = {}, {} colors, proper = {}", gc.t, gc.count(), gc.is_proper(&k4));

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let (g, rep) = random_lattice_graph(&mut rng);
        let dc = eval_ratios(&g, &rep)?.dc_ratio.unwrap();
        let gc = grid_coloring(&g, &rep)?;
        println!(
            "{:>2} vertices, dc ratio {dc:.3}: {} colors (bound {}), proper = {}",
            g.n(),
            gc.count(),
            gc.t * gc.t,
            gc.is_proper(&g)
        );
    }
    Ok(())
}
