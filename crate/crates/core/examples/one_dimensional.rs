//! Exact line invariants: dc₁ = χ_c − 1, pw₁ = χ − 1 and re₁ = bandwidth,
//! each with a line representation attaining it, plus the roundings that
//! pass between them.
//!
//!     cargo run --example one_dimensional

use gml::geometry::eval_ratios;
use gml::graph::{complete, cycle, grid, moser_spindle, wheel, Graph};
use gml::oned::{dc1, floor_coloring, local_density, mod_rounding, pw1, re1, wrap_circular};

fn show(name: &str, g: &Graph) -> gml::Result<()> {
    let (d, p, r) = (dc1(g)?, pw1(g)?, re1(g)?);
    println!(
        "{name:<10} dc1 = {:<5} pw1 = {:<3} re1 = {:<3} local density = {}",
        d.value.to_string(),
        p.value,
        r.value,
        local_density(g)
    );
    // the dc1 witness wraps onto a circle of circumference χ_c ...
    let circle = wrap_circular(g, &d.witness, d.value.to_f64() + 1.0)?;
    assert!(circle.is_valid(g, 1e-9));
    // ... and folds onto ⌈dc1⌉ + 1 integer points, giving a pw witness
    let folded = mod_rounding(g, &d.witness)?;
    let pw = eval_ratios(g, &folded)?.pw_ratio.unwrap();
    let colors = floor_coloring(g, &folded)?;
    println!("{:<10} folded pw ratio {pw}, {} colors from ⌊x⌋", "", colors.count);
    Ok(())
}

fn main() -> gml::Result<()> {
    show("C5", &cycle(5)?)?;
    show("K4", &complete(4)?)?;
    show("W4", &wheel(4)?)?;
    show("grid 3x4", &grid(3, 4)?)?;
    show("moser", &moser_spindle())?;
    Ok(())
}
