//! Plain SVG rendering of planar coloured point sets.

use std::fmt::Write;

use blockset::blocked::ColouredPointSet;
use blockset::visibility::visibility_graph;

const PALETTE: [&str; 16] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#000000",
];

const SIZE: f64 = 400.0;

pub fn palette_colour(class: usize) -> &'static str {
    PALETTE[class % PALETTE.len()]
}

/// One circle per point, coloured by class, and a thin line in the class
/// colour across every blocked pair. The drawing is scaled to a square
/// canvas with a 5% margin; y points up.
pub fn render(set: &ColouredPointSet) -> String {
    assert_eq!(set.dim(), 2, "only planar sets can be drawn");
    let coords: Vec<Vec<f64>> = set.config().iter().map(|p| p.to_f64()).collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for c in &coords {
        for k in 0..2 {
            lo[k] = lo[k].min(c[k]);
            hi[k] = hi[k].max(c[k]);
        }
    }
    if coords.is_empty() {
        lo = [0.0; 2];
        hi = [0.0; 2];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let span = if span > 0.0 { span } else { 1.0 };
    let margin = 0.05 * SIZE;
    let scale = (SIZE - 2.0 * margin) / span;
    let centre = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    let place = |c: &[f64]| {
        (
            SIZE / 2.0 + (c[0] - centre[0]) * scale,
            SIZE / 2.0 - (c[1] - centre[1]) * scale,
        )
    };

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let graph = visibility_graph(set.config());
    writeln!(out, r#"<g stroke-width="1" stroke-opacity="0.6">"#).unwrap();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if graph.adjacent(i, j) {
                continue;
            }
            let (x1, y1) = place(&coords[i]);
            let (x2, y2) = place(&coords[j]);
            writeln!(
                out,
                r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{}"/>"#,
                palette_colour(set.colour(i))
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, "<g>").unwrap();
    for (i, c) in coords.iter().enumerate() {
        let (x, y) = place(c);
        writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="6" fill="{}"/>"#,
            palette_colour(set.colour(i))
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
