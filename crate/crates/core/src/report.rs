//! Machine-readable summary of everything computed for one graph.
//!
//! Field names are stable; rationals are written as `"p/q"` strings and
//! floating-point values in shortest round-trip form, so serializing the same
//! report twice gives identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{re_lower_bound, RatioReport};
use crate::graph::Graph;
use crate::oned::{bandwidth, chromatic_number, circular_chromatic, local_density, Rational};
use crate::optimizer::{optimize, BoundResult, OptimizerConfig, Target};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub one_dimensional: OneDimensional,
    /// Present only when plane bounds were requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub plane: Option<PlaneBounds>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub clique_number: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneDimensional {
    pub chromatic_number: usize,
    pub circular_chromatic_number: Rational,
    pub bandwidth: usize,
    pub dc1: Rational,
    pub pw1: usize,
    pub re1: usize,
    pub local_density: Rational,
    /// Vertices in the order of an optimal bandwidth layout.
    pub bandwidth_layout: Vec<usize>,
    /// Colors of an optimal coloring.
    pub coloring: Vec<usize>,
    /// `labels[v] / q` is the circular color of `v`.
    pub circular_labels: Vec<u64>,
}

/// One plane bound with enough context to check it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub upper_bound: f64,
    pub lower_bound: Option<f64>,
    pub report: RatioReport,
}

impl From<&BoundResult> for BoundSummary {
    fn from(r: &BoundResult) -> Self {
        BoundSummary {
            upper_bound: r.upper_bound,
            lower_bound: r.lower_bound,
            report: r.report.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneBounds {
    pub dc: BoundSummary,
    pub pw: BoundSummary,
    pub re: BoundSummary,
    /// Packing bound; absent for disconnected graphs.
    pub re_lower_bound: Option<f64>,
}

/// A named identity or inequality and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, value: impl Into<String>) -> Self {
        Check { name: name.into(), passed, value: value.into() }
    }
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Exact one-dimensional section plus its identity checks; the plane section
/// is filled when `plane` carries an optimizer budget.
pub fn invariants_report(g: &Graph, plane: Option<&OptimizerConfig>) -> Result<Report> {
    g.require_edge()?;
    let omega = g.clique_number();
    let cc = circular_chromatic(g)?;
    let (chi_n, coloring) = chromatic_number(g)?;
    let chi = (chi_n, coloring.colors);
    let (bw, ordering) = bandwidth(g)?;
    let density = local_density(g);
    let dc1 = cc.value.minus_integer(1);
    let pw1 = chi.0 - 1;
    let re1 = bw;

    let mut checks = one_dimensional_checks(omega, chi.0, &cc.value, bw, &density);
    checks.push(Check::new("circular coloring witness valid", cc.is_exact_witness(g), cc.value.to_string()));
    checks.push(Check::new(
        "bandwidth layout attains bw",
        ordering.is_bijection() && ordering.bandwidth_of(g) == bw,
        bw.to_string(),
    ));
    checks.push(Check::new("coloring proper", g.is_proper_coloring(&chi.1), chi.0.to_string()));

    let plane = match plane {
        Some(cfg) => {
            let [dc, pw, re] = [Target::Dc, Target::Pw, Target::Re].map(|t| optimize(g, t, cfg));
            let (dc, pw, re) = (dc?, pw?, re?);
            let lower = g.is_connected().then(|| re_lower_bound(g)).transpose()?;
            for (name, r) in [("dc", &dc), ("pw", &pw), ("re", &re)] {
                let ok = r.lower_bound.is_none_or(|lb| lb <= r.upper_bound + 1e-12);
                checks.push(Check::new(format!("{name} lower bound <= upper bound"), ok, format!("{}", r.upper_bound)));
            }
            let w = &re.report;
            if let (Some(d), Some(p), Some(e)) = (w.dc_ratio, w.pw_ratio, w.re_ratio) {
                checks.push(Check::new("re witness: dc_ratio <= pw_ratio", d <= p, format!("{d} <= {p}")));
                checks.push(Check::new("re witness: dc_ratio <= re_ratio", d <= e, format!("{d} <= {e}")));
            }
            Some(PlaneBounds {
                dc: (&dc).into(),
                pw: (&pw).into(),
                re: (&re).into(),
                re_lower_bound: lower,
            })
        }
        None => None,
    };

    Ok(Report {
        graph: GraphSummary {
            n: g.n(),
            m: g.m(),
            max_degree: g.max_degree(),
            clique_number: omega,
        },
        one_dimensional: OneDimensional {
            chromatic_number: chi.0,
            circular_chromatic_number: cc.value,
            bandwidth: bw,
            dc1,
            pw1,
            re1,
            local_density: density,
            bandwidth_layout: ordering.layout(),
            coloring: chi.1,
            circular_labels: cc.labels.clone(),
        },
        plane,
        checks,
    })
}

/// The exact identities and inequalities relating the one-dimensional
/// invariants, with zero tolerance.
pub fn one_dimensional_checks(omega: usize, chi: usize, chi_c: &Rational, bw: usize, density: &Rational) -> Vec<Check> {
    let dc1 = chi_c.minus_integer(1);
    let pw1 = chi - 1;
    let re1 = bw;
    vec![
        Check::new("ceil(dc1) = pw1", dc1.ceil() as usize == pw1, format!("ceil({dc1}) = {}, pw1 = {pw1}", dc1.ceil())),
        Check::new("pw1 <= re1", pw1 <= re1, format!("{pw1} <= {re1}")),
        Check::new("chi = ceil(chi_c)", chi_c.ceil() as usize == chi, format!("chi = {chi}, chi_c = {chi_c}")),
        Check::new(
            "chi - 1 < chi_c <= chi",
            *chi_c > Rational::integer(chi as u64 - 1) && *chi_c <= Rational::integer(chi as u64),
            chi_c.to_string(),
        ),
        Check::new("bw >= chi - 1", bw + 1 >= chi, format!("{bw} >= {pw1}")),
        Check::new(
            "bw >= ceil(local density)",
            bw as u64 >= density.ceil(),
            format!("{bw} >= ceil({density}) = {}", density.ceil()),
        ),
        Check::new("omega <= chi", omega <= chi, format!("{omega} <= {chi}")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, grid, moser_spindle};

    #[test]
    fn k4_report() {
        let r = invariants_report(&complete(4).unwrap(), None).unwrap();
        assert_eq!(r.one_dimensional.dc1, Rational::integer(3));
        assert_eq!(r.one_dimensional.pw1, 3);
        assert!(r.checks.iter().find(|c| c.name == "ceil(dc1) = pw1").unwrap().passed);
        assert!(r.plane.is_none());
    }

    #[test]
    fn grid_and_moser() {
        let r = invariants_report(&grid(3, 4).unwrap(), None).unwrap();
        assert_eq!((r.one_dimensional.bandwidth, r.one_dimensional.re1), (3, 3));
        let r = invariants_report(&moser_spindle(), None).unwrap();
        assert_eq!(r.one_dimensional.chromatic_number, 4);
        assert_eq!(r.one_dimensional.pw1, 3);
        assert!(r.all_passed());
    }

    #[test]
    fn json_round_trip() {
        let cfg = OptimizerConfig::with_budget(2, 50);
        let r = invariants_report(&complete(3).unwrap(), Some(&cfg)).unwrap();
        let text = r.to_json();
        assert!(text.contains("\"circular_chromatic_number\": \"3/1\""));
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert_eq!(invariants_report(&complete(3).unwrap(), Some(&cfg)).unwrap().to_json(), text);
    }
}
