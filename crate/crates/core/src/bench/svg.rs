use std::fmt::Write;

use crate::geometry::{bounds, overlapping_pairs};
use crate::model::{Embedding, SizedGraph};

const PANEL: f64 = 600.0;
const MARGIN: f64 = 20.0;

/// Draw a layout as SVG: one rectangle per node, one line per edge,
/// overlapping nodes highlighted. With `after`, both layouts are drawn side
/// by side at the same scale.
pub fn render_svg(graph: &SizedGraph, before: &Embedding, after: Option<&Embedding>) -> String {
    let sizes = graph.sizes();
    let layouts: Vec<&Embedding> = std::iter::once(before).chain(after).collect();
    let boxes: Vec<_> = layouts
        .iter()
        .map(|e| bounds(e.positions(), &sizes))
        .collect();
    let span = boxes
        .iter()
        .map(|b| b.width().max(b.height()))
        .fold(0.0_f64, f64::max);
    let scale = if span > 0.0 { PANEL / span } else { 1.0 };
    let panel_w: Vec<f64> = boxes.iter().map(|b| b.width() * scale).collect();
    let height = boxes.iter().map(|b| b.height() * scale).fold(0.0, f64::max) + 2.0 * MARGIN;
    let width = panel_w.iter().sum::<f64>() + MARGIN * (layouts.len() as f64 + 1.0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(width),
        fmt(height),
        fmt(width),
        fmt(height)
    );
    s.push_str(
        "<style>.edge{stroke:#9a9a9a;stroke-width:1}.node{fill:#dbe4f0;stroke:#34506b;stroke-width:1}\
         .node.overlap{fill:#f6c3c0;stroke:#c0261b;stroke-width:2}</style>\n",
    );
    let mut x_offset = MARGIN;
    for (k, (emb, bb)) in layouts.iter().zip(&boxes).enumerate() {
        let label = match (k, layouts.len()) {
            (0, 1) => "layout",
            (0, _) => "before",
            _ => "after",
        };
        let mut overlapping = vec![false; graph.n()];
        for (u, v) in overlapping_pairs(emb.positions(), &sizes) {
            overlapping[u] = true;
            overlapping[v] = true;
        }
        // Graph y grows upward, SVG y grows downward.
        let px = |x: f64| x_offset + (x - bb.min_x) * scale;
        let py = |y: f64| MARGIN + (bb.max_y - y) * scale;
        let _ = writeln!(s, r#"<g class="{label}">"#);
        for &(u, v) in graph.edges() {
            let (a, b) = (emb.get(u), emb.get(v));
            let _ = writeln!(
                s,
                r#"<line class="edge" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                fmt(px(a.x)),
                fmt(py(a.y)),
                fmt(px(b.x)),
                fmt(py(b.y))
            );
        }
        for (i, node) in graph.nodes().iter().enumerate() {
            let p = emb.get(i);
            let class = if overlapping[i] {
                "node overlap"
            } else {
                "node"
            };
            let _ = writeln!(
                s,
                r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}"><title>{}</title></rect>"#,
                fmt(px(p.x - node.width / 2.0)),
                fmt(py(p.y + node.height / 2.0)),
                fmt(node.width * scale),
                fmt(node.height * scale),
                escape(&node.id)
            );
        }
        s.push_str("</g>\n");
        x_offset += panel_w[k] + MARGIN;
    }
    s.push_str("</svg>\n");
    s
}

fn fmt(v: f64) -> String {
    let r = format!("{v:.3}");
    let r = r.trim_end_matches('0').trim_end_matches('.');
    if r == "-0" {
        "0".into()
    } else {
        r.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
