//! A graph of maximum degree 3 with a K_n minor whose lattice drawing has
//! resolution ratio √2; being nonplanar, it cannot do better.
//!
//!     cargo run --release --example minor_construction [n] [out.svg]

use gml::constructions::{minor_rich_graph, ConstructionConfig};
use gml::geometry::to_svg;

fn main() -> gml::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let out = minor_rich_graph(n, &ConstructionConfig::default())?;
    println!("coarse drawing crossings: {}", out.drawing.crossings.len());
    println!("graph: {} vertices, {} edges, max degree {}", out.graph.n(), out.graph.m(), out.graph.max_degree());
    println!("max edge² = {}, min pair² = {}", out.max_edge_sq, out.min_pair_sq);
    println!("re ratio = {:.12}", out.report.re_ratio.unwrap());
    println!("K{n} minor witness valid: {}", out.witness.check(&out.graph).is_ok());
    println!("straight-line drawing noncrossing: {:?}", out.noncrossing);
    if let Some(path) = args.next() {
        std::fs::write(&path, to_svg(&out.graph, &out.representation))?;
        println!("drawing written to {path}");
    }
    Ok(())
}
