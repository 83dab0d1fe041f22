//! Baseline force-directed layout used to give synthetic graphs their
//! initial positions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Embedding, Point, SizedGraph};

use super::mix_seed;

pub const DEFAULT_LAYOUT_ITERATIONS: usize = 300;

/// Fruchterman–Reingold layout. The ideal edge length is 1.5 times the mean
/// node diagonal; the temperature cools linearly to zero. Each connected
/// component is laid out on its own, then components are packed row by row.
pub fn initial_layout(graph: &SizedGraph, seed: u64, iterations: usize) -> Embedding {
    let n = graph.n();
    if n == 0 {
        return Embedding::new(graph, Vec::new()).expect("empty embedding");
    }
    let sizes = graph.sizes();
    let k = 1.5 * sizes.iter().map(|s| s.w.hypot(s.h)).sum::<f64>() / n as f64;

    let components = components(graph);
    let mut pos = vec![Point::default(); n];
    let mut boxes = Vec::with_capacity(components.len());
    for (ci, members) in components.iter().enumerate() {
        let local =
            fruchterman_reingold(graph, members, k, mix_seed(&[seed, ci as u64]), iterations);
        let (mut lo, mut hi) = (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for (&v, &p) in members.iter().zip(&local) {
            pos[v] = p;
            lo = Point::new(
                lo.x.min(p.x - sizes[v].w / 2.0),
                lo.y.min(p.y - sizes[v].h / 2.0),
            );
            hi = Point::new(
                hi.x.max(p.x + sizes[v].w / 2.0),
                hi.y.max(p.y + sizes[v].h / 2.0),
            );
        }
        boxes.push((lo, hi));
    }

    if components.len() > 1 {
        // Grid packing: cells as large as the largest component plus one
        // ideal length of clearance.
        let cell_w = boxes.iter().map(|(lo, hi)| hi.x - lo.x).fold(0.0, f64::max) + k;
        let cell_h = boxes.iter().map(|(lo, hi)| hi.y - lo.y).fold(0.0, f64::max) + k;
        let cols = (components.len() as f64).sqrt().ceil() as usize;
        for (ci, members) in components.iter().enumerate() {
            let (lo, hi) = boxes[ci];
            let center = Point::new((lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0);
            let target = Point::new((ci % cols) as f64 * cell_w, (ci / cols) as f64 * cell_h);
            for &v in members {
                pos[v] = pos[v] - center + target;
            }
        }
    }
    Embedding::new(graph, pos).expect("layout produces finite positions")
}

/// Connected components, each sorted, ordered by size (largest first) and
/// then by smallest member.
fn components(graph: &SizedGraph) -> Vec<Vec<usize>> {
    let n = graph.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in graph.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    out
}

fn fruchterman_reingold(
    graph: &SizedGraph,
    members: &[usize],
    k: f64,
    seed: u64,
    iterations: usize,
) -> Vec<Point> {
    let m = members.len();
    if m == 1 {
        return vec![Point::default()];
    }
    let local: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((*local.get(&u)?, *local.get(&v)?)))
        .collect();

    let radius = k * (m as f64).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<Point> = (0..m)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            Point::new(r * a.cos(), r * a.sin())
        })
        .collect();

    let t0 = radius / 4.0;
    let k2 = k * k;
    let mut disp = vec![Point::default(); m];
    for it in 0..iterations {
        let temp = t0 * (1.0 - it as f64 / iterations as f64);
        disp.iter_mut().for_each(|d| *d = Point::default());
        for i in 0..m {
            for j in i + 1..m {
                let mut delta = pos[i] - pos[j];
                let mut d2 = delta.norm_squared();
                if d2 == 0.0 {
                    // Deterministic nudge apart for coincident points.
                    let a = (i * 31 + j * 17) as f64;
                    delta = Point::new(a.cos(), a.sin()) * (1e-6 * k);
                    d2 = delta.norm_squared();
                }
                // Repulsion k^2 / d along the unit vector, i.e. delta * k^2 / d^2.
                let f = delta * (k2 / d2);
                disp[i] = disp[i] + f;
                disp[j] = disp[j] - f;
            }
        }
        for &(u, v) in &edges {
            let delta = pos[u] - pos[v];
            let d = delta.norm();
            // Attraction d^2 / k along the unit vector.
            let f = delta * (d / k);
            disp[u] = disp[u] - f;
            disp[v] = disp[v] + f;
        }
        for i in 0..m {
            let len = disp[i].norm();
            if len > 0.0 {
                pos[i] = pos[i] + disp[i] * (len.min(temp) / len);
            }
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Size;

    #[test]
    fn single_node_at_origin() {
        let g = SizedGraph::from_indexed("g", &[Size::new(4.0, 2.0)], []).unwrap();
        assert_eq!(
            initial_layout(&g, 1, 300).positions(),
            &[Point::new(0.0, 0.0)]
        );
    }

    #[test]
    fn deterministic_in_seed() {
        let g = SizedGraph::from_indexed(
            "g",
            &[Size::new(4.0, 2.0); 8],
            [(0, 1), (1, 2), (2, 3), (5, 6)],
        )
        .unwrap();
        assert_eq!(initial_layout(&g, 9, 100), initial_layout(&g, 9, 100));
        assert_ne!(initial_layout(&g, 9, 100), initial_layout(&g, 10, 100));
    }

    #[test]
    fn path_ends_are_furthest_apart() {
        let g = SizedGraph::from_indexed("p", &[Size::new(4.0, 2.0); 3], [(0, 1), (1, 2)]).unwrap();
        for seed in 0..20 {
            let e = initial_layout(&g, seed, DEFAULT_LAYOUT_ITERATIONS);
            let ends = e.get(0).distance(e.get(2));
            assert!(ends > e.get(0).distance(e.get(1)), "seed {seed}");
            assert!(ends > e.get(1).distance(e.get(2)), "seed {seed}");
        }
    }

    #[test]
    fn components_do_not_share_space() {
        let g = SizedGraph::from_indexed("g", &[Size::new(4.0, 2.0); 6], [(0, 1), (1, 2), (3, 4)])
            .unwrap();
        let e = initial_layout(&g, 2, 300);
        assert!(e.positions().iter().all(|p| p.is_finite()));
        let comps = components(&g);
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
    }
}
