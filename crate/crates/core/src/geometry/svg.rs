use std::fmt::Write;

use crate::graph::Graph;

use super::{eval_ratios, Representation};

/// Renders a plane representation as SVG: edges as segments, vertices as
/// labeled circles, the shortest/longest edge and closest/farthest pair
/// highlighted when the ratios can be evaluated.
pub fn to_svg(g: &Graph, rep: &Representation) -> String {
    let pts = &rep.points[..g.n().min(rep.points.len())];
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &[x, y] in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let extent = (x1 - x0).max(y1 - y0).max(1e-9);
    let size = 800.0;
    let margin = 30.0;
    let scale = (size - 2.0 * margin) / extent;
    let map = |[x, y]: [f64; 2]| (margin + (x - x0) * scale, size - margin - (y - y0) * scale);
    let radius = if pts.len() > 200 { 1.5 } else { 6.0 };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#333" stroke-width="1">"##);
    for &(u, v) in g.edges() {
        let (ax, ay) = map(pts[u]);
        let (bx, by) = map(pts[v]);
        let _ = writeln!(s, r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    if let Ok(report) = eval_ratios(g, rep) {
        let marks = [
            (report.min_edge, "#1f77b4", "min edge"),
            (report.max_edge, "#d62728", "max edge"),
            (report.min_pair, "#2ca02c", "min pair"),
            (report.max_pair, "#ff7f0e", "max pair"),
        ];
        for (e, color, label) in marks {
            let (ax, ay) = map(pts[e.u]);
            let (bx, by) = map(pts[e.v]);
            let _ = writeln!(
                s,
                r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="{color}" stroke-width="3" stroke-dasharray="6 3"><title>{label} {:.6}</title></line>"#,
                e.dist
            );
        }
    }
    for (v, &p) in pts.iter().enumerate() {
        let (x, y) = map(p);
        let _ = writeln!(
            s,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="{radius}" fill="#fff" stroke="#000"/>"##
        );
        if pts.len() <= 200 {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-size="11" font-family="monospace">{v}</text>"#,
                x + 7.0,
                y - 7.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
