//! Exact one-dimensional invariants: chromatic number, circular chromatic
//! number and bandwidth, which coincide with the line versions of the
//! plane-width, dilation and resolution ratios.

mod bandwidth;
mod chromatic;
mod circular;
mod density;
mod line;
mod rational;

pub use bandwidth::{bandwidth, bandwidth_exhaustive, cuthill_mckee, Ordering};
pub use chromatic::{chromatic_number, dsatur_bound};
pub use circular::{circular_chromatic, first_circular, CircularChromatic, CircularColoring};
pub use density::{density_bandwidth_bound, local_density};
pub use line::{dc1, floor_coloring, mod_rounding, normalize_line, pw1, re1, wrap_circular, LineBound};
pub use rational::Rational;
