//! Distance-ratio invariants of graph representations.
//!
//! A representation places the vertices of a graph as points in the line or
//! the plane. Three ratios measure how well it does:
//!
//! * the dilation ratio, longest over shortest edge;
//! * the plane-width ratio, largest vertex distance over shortest edge;
//! * the resolution ratio, longest edge over smallest vertex distance.
//!
//! Their minima over all representations are the dilation coefficient `dc`,
//! the plane-width `pw` and the resolution coefficient `re`. In one dimension
//! they are determined exactly by the circular chromatic number, the chromatic
//! number and the bandwidth ([`oned`]). In the plane the crate computes
//! certified upper bounds by optimization ([`optimizer`]) and lower bounds from
//! packing arguments ([`geometry`]), and builds graphs whose minors force
//! large resolution ([`constructions`]).

pub mod coloring;
pub mod constructions;

pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;

pub mod minor;
pub mod oned;
pub mod optimizer;
pub mod report;
pub mod verify;



pub use coloring::Coloring;
pub use error::{Error, Result};
pub use geometry::{eval_ratios, RatioReport, Representation};
pub use graph::Graph;
pub use minor::{verify_minor_witness, MinorWitness};
pub use optimizer::{optimize, BoundResult, OptimizerConfig, Target};
