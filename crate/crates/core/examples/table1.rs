//! Upper bounds on h(n), the best ratio of largest to smallest distance
//! among n points in the plane, next to the known values.
//!
//!     cargo run --release --example table1 [max_n]

use gml::optimizer::{h_upper_sequence, OptimizerConfig};
use gml::verify::table1;

fn main() -> gml::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let known = table1();
    println!("{:>3}  {:>12}  {:>12}", "n", "h_upper", "known");
    for r in h_upper_sequence(max_n, &OptimizerConfig::default())? {
        let n = r.witness.len();
        let k = known.iter().find(|(m, _)| *m == n).map_or(String::new(), |(_, v)| format!("{v:.9}"));
        println!("{n:>3}  {:>12.9}  {k:>12}", r.upper_bound);
    }
    Ok(())
}
