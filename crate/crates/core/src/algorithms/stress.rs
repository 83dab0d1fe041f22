//! Proximity-graph helpers shared by PRISM and GTREE.

use crate::geometry::triangulate;
use crate::model::{Point, Size};

/// How much the edge `(u, v)` must grow, as a factor of its current length,
/// for the two nodes to stop overlapping (moving along the edge). At most 1
/// means they are apart already.
pub(crate) fn overlap_factor(pos: &[Point], sizes: &[Size], u: usize, v: usize) -> f64 {
    let d = pos[v] - pos[u];
    let gx = (sizes[u].w + sizes[v].w) / 2.0;
    let gy = (sizes[u].h + sizes[v].h) / 2.0;
    let tx = if d.x == 0.0 {
        f64::INFINITY
    } else {
        gx / d.x.abs()
    };
    let ty = if d.y == 0.0 {
        f64::INFINITY
    } else {
        gy / d.y.abs()
    };
    tx.min(ty).max(1.0)
}

/// Proximity edges for one outer iteration: the Delaunay edges of the
/// current centers, plus every overlapping pair once no Delaunay edge is
/// overlapped any more (overlaps between non-neighbours remain).
pub(crate) fn proximity_edges(
    pos: &[Point],
    sizes: &[Size],
    overlapping: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut edges = triangulate(pos, sizes).map(|t| t.edges).unwrap_or_default();
    let any = edges
        .iter()
        .any(|&(u, v)| overlap_factor(pos, sizes, u, v) > 1.0);
    if !any {
        edges.extend_from_slice(overlapping);
        edges.sort_unstable();
        edges.dedup();
    }
    edges
}

/// Gauss-Seidel sweeps of localized stress majorization toward the target
/// edge lengths, with weights `1 / d^2`.
pub(crate) fn majorize(
    pos: &mut [Point],
    edges: &[(usize, usize)],
    targets: &[f64],
    sweeps: usize,
) {
    let n = pos.len();
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (&(u, v), &d) in edges.iter().zip(targets) {
        adj[u].push((v, d));
        adj[v].push((u, d));
    }
    for _ in 0..sweeps {
        for i in 0..n {
            if adj[i].is_empty() {
                continue;
            }
            let mut num = Point::default();
            let mut den = 0.0;
            for &(j, d) in &adj[i] {
                let w = 1.0 / (d * d);
                let delta = pos[i] - pos[j];
                let len = delta.norm();
                let pull = if len > 0.0 {
                    pos[j] + delta * (d / len)
                } else {
                    pos[j]
                };
                num = num + pull * w;
                den += w;
            }
            if den > 0.0 {
                pos[i] = num * (1.0 / den);
            }
        }
    }
}
