//! Text formats for graphs, representations and minor witnesses.
//!
//! * Edge list: a header line `n m`, then `m` lines `u v` (0-based).
//! * DIMACS: `p edge n m` and `e u v` lines (1-based); `c` lines are comments.
//! * Representation: one line `v x` (line) or `v x y` (plane) per vertex.
//! * Witness: a JSON array of branch sets, each an array of vertex ids.
//!
//! Blank lines and lines starting with `#` are skipped in the text formats.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Dim, Representation};
use crate::graph::Graph;
use crate::minor::MinorWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::NotApplicable(format!("unknown graph format `{other}`"))),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Content lines with their 1-based line numbers.
fn lines<'a>(text: &'a str, comment: &[&str]) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    let comment: Vec<String> = comment.iter().map(|s| s.to_string()).collect();
    text.lines().enumerate().filter_map(move |(i, l)| {
        let t = l.trim();
        let skip = t.is_empty() || comment.iter().any(|c| t.starts_with(c.as_str()));
        (!skip).then(|| (i + 1, t.split_whitespace().collect()))
    })
}

fn number<T: FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{field}`")))
}

/// Reads either format, choosing DIMACS when the first content line starts
/// with `p` or `c`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut it = lines(text, &["#"]);
    let (hl, header) = it.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    if header.len() != 2 {
        return Err(parse_err(hl, "header must be `n m`"));
    }
    let n: usize = number(hl, header[0], "vertex count")?;
    let m: usize = number(hl, header[1], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, fields) in it {
        if fields.len() != 2 {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        let (u, v): (usize, usize) = (number(ln, fields[0], "vertex")?, number(ln, fields[1], "vertex")?);
        if u >= n || v >= n || u == v {
            return Err(parse_err(ln, format!("invalid edge ({u}, {v}) for {n} vertices")));
        }
        edges.push((u, v));
        last = ln;
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 1;
    for (ln, f) in lines(text, &["c", "#"]) {
        last = ln;
        match f[0] {
            "p" => {
                if header.is_some() || f.len() != 4 || (f[1] != "edge" && f[1] != "col") {
                    return Err(parse_err(ln, "expected a single `p edge n m` line"));
                }
                header = Some((number(ln, f[2], "vertex count")?, number(ln, f[3], "edge count")?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(ln, "edge before `p` line"))?;
                if f.len() != 3 {
                    return Err(parse_err(ln, "edge line must be `e u v`"));
                }
                let (u, v): (usize, usize) = (number(ln, f[1], "vertex")?, number(ln, f[2], "vertex")?);
                if u == 0 || v == 0 || u > n || v > n || u == v {
                    return Err(parse_err(ln, format!("invalid edge ({u}, {v}) for {n} vertices")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(ln, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last, "missing `p edge n m` line"))?;
    // DIMACS files often list each edge in both directions
    let g = Graph::new(n, edges.iter().copied())?;
    if edges.len() != m && g.m() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "{} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}

/// Reads a representation; the dimension is 1 when every line has a single
/// coordinate. Every vertex in `0..=max id` must appear exactly once.
pub fn parse_representation(text: &str) -> Result<Representation> {
    let mut points: Vec<Option<[f64; 2]>> = Vec::new();
    let mut plane = false;
    for (ln, f) in lines(text, &["#"]) {
        if !(2..=3).contains(&f.len()) {
            return Err(parse_err(ln, "representation line must be `v x [y]`"));
        }
        let v: usize = number(ln, f[0], "vertex")?;
        let x: f64 = number(ln, f[1], "coordinate")?;
        let y: f64 = if f.len() == 3 { number(ln, f[2], "coordinate")? } else { 0.0 };
        if !(x.is_finite() && y.is_finite()) {
            return Err(parse_err(ln, "coordinates must be finite"));
        }
        plane |= f.len() == 3;
        if points.len() <= v {
            points.resize(v + 1, None);
        }
        if points[v].replace([x, y]).is_some() {
            return Err(parse_err(ln, format!("vertex {v} listed twice")));
        }
    }
    let points: Vec<[f64; 2]> = points
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or(Error::MissingPoint(v)))
        .collect::<Result<_>>()?;
    Ok(Representation {
        dim: if plane { Dim::Plane } else { Dim::Line },
        points,
    })
}

/// Writes coordinates in shortest round-trip form.
pub fn write_representation(rep: &Representation) -> String {
    let mut out = String::new();
    for (v, p) in rep.points.iter().enumerate() {
        match rep.dim {
            Dim::Line => writeln!(out, "{v} {:?}", p[0]).unwrap(),
            Dim::Plane => writeln!(out, "{v} {:?} {:?}", p[0], p[1]).unwrap(),
        }
    }
    out
}

pub fn write_witness(w: &MinorWitness) -> String {
    serde_json::to_string(&w.branch_sets).expect("branch sets serialize")
}

/// Reads a JSON list of branch sets for the given target graph.
pub fn parse_witness(text: &str, target: Graph) -> Result<MinorWitness> {
    let sets: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Ok(MinorWitness::new(sets, target))
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn read_representation_file(path: impl AsRef<Path>) -> Result<Representation> {
    parse_representation(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, moser_spindle};

    #[test]
    fn edge_list_round_trip() {
        let g = moser_spindle();
        let text = write_graph(&g, GraphFormat::EdgeList);
        assert!(text.starts_with("7 11\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = complete(5).unwrap();
        let text = write_graph(&g, GraphFormat::Dimacs);
        assert!(text.contains("e 1 2"));
        assert_eq!(parse_graph(&format!("c K5\n{text}")).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 x\n"),
            Err(Error::Parse { line: 3, msg: "expected vertex, found `x`".into() })
        );
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn representation_round_trip() {
        let rep = Representation::plane(vec![[0.1, -2.5], [1e-17, 3.0], [0.3333333333333333, 7.0]]);
        assert_eq!(parse_representation(&write_representation(&rep)).unwrap(), rep);
        let line = Representation::line([0.0, 1.5, 2.25]);
        assert_eq!(parse_representation(&write_representation(&line)).unwrap(), line);
        assert_eq!(parse_representation("0 1\n2 3\n"), Err(Error::MissingPoint(1)));
    }

    #[test]
    fn witness_round_trip() {
        let w = MinorWitness::new(vec![vec![0, 3], vec![1], vec![2]], complete(3).unwrap());
        let text = write_witness(&w);
        assert_eq!(text, "[[0,3],[1],[2]]");
        assert_eq!(parse_witness(&text, complete(3).unwrap()).unwrap(), w);
    }
}
