//! Reading and writing graphs, representations and minor witnesses.
//!
//!     cargo run --example file_formats

use gml::constructions::cubic_expansion;
use gml::geometry::moser_spindle_coordinates;
use gml::graph::moser_spindle;
use gml::io::{parse_graph, parse_representation, parse_witness, write_graph, write_representation, write_witness, GraphFormat};

fn main() -> gml::Result<()> {
    let g = moser_spindle();
    let edge_list = write_graph(&g, GraphFormat::EdgeList);
    let dimacs = write_graph(&g, GraphFormat::Dimacs);
    println!("edge list:\n{edge_list}\nDIMACS:\n{dimacs}");
    assert_eq!(parse_graph(&edge_list)?, g);
    assert_eq!(parse_graph(&dimacs)?, g);

    let rep = moser_spindle_coordinates();
    let text = write_representation(&rep);
    println!("representation:\n{text}");
    assert_eq!(parse_representation(&text)?, rep);

    let (host, w) = cubic_expansion(5)?;
    let json = write_witness(&w);
    println!("K5 witness in a {}-vertex cubic graph: {json}", host.n());
    assert!(parse_witness(&json, w.target.clone())?.check(&host).is_ok());

    match parse_graph("3 2\n0 1\n1 9\n") {
        Err(e) => println!("\nrejected bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
