//! GTREE: grow a spanning tree of the proximity graph that favours the most
//! overlapped edges and push each subtree outward along its tree edge.

use std::collections::BinaryHeap;

use crate::geometry::{bounds, overlapping_pairs};
use crate::model::Point;

use super::stress::{overlap_factor, proximity_edges};
use super::{Problem, Run};

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let sizes = problem.sizes;
    let mut pos = problem.positions;
    let n = pos.len();
    let mut iterations = 0;
    while iterations < problem.max_iterations {
        let overlapping = overlapping_pairs(&pos, problem.padded);
        if overlapping.is_empty() {
            break;
        }
        iterations += 1;
        let edges = proximity_edges(&pos, sizes, &overlapping);
        let mut adj: Vec<Vec<(usize, f64, f64)>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            let len = pos[u].distance(pos[v]);
            let deficit = (overlap_factor(&pos, sizes, u, v) - 1.0) * len;
            adj[u].push((v, deficit, len));
            adj[v].push((u, deficit, len));
        }

        let c = bounds(&pos, sizes).center();
        let root = (0..n)
            .min_by(|&a, &b| {
                pos[a]
                    .distance(c)
                    .total_cmp(&pos[b].distance(c))
                    .then(a.cmp(&b))
            })
            .expect("non-empty");

        // Prim's algorithm for a maximum spanning tree on the deficit.
        // The heap orders by deficit, then prefers smaller endpoints.
        #[derive(PartialEq)]
        struct Cand(f64, std::cmp::Reverse<(usize, usize)>);
        impl Eq for Cand {}
        impl PartialOrd for Cand {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
        impl Ord for Cand {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
            }
        }
        let mut in_tree = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        for start in std::iter::once(root).chain(0..n) {
            if in_tree[start] {
                continue;
            }
            in_tree[start] = true;
            order.push(start);
            for &(v, d, _) in &adj[start] {
                heap.push(Cand(d, std::cmp::Reverse((start, v))));
            }
            while let Some(Cand(_, std::cmp::Reverse((p, v)))) = heap.pop() {
                if in_tree[v] {
                    continue;
                }
                in_tree[v] = true;
                parent[v] = p;
                order.push(v);
                for &(w, d, _) in &adj[v] {
                    if !in_tree[w] {
                        heap.push(Cand(d, std::cmp::Reverse((v, w))));
                    }
                }
            }
        }

        // Parents precede children in `order`, so offsets accumulate top-down.
        let mut offset = vec![Point::default(); n];
        for &v in &order {
            let p = parent[v];
            if p == usize::MAX {
                continue;
            }
            let (_, deficit, len) = adj[v]
                .iter()
                .copied()
                .find(|&(w, _, _)| w == p)
                .expect("tree edge");
            offset[v] = offset[p];
            if deficit > 0.0 && len > 0.0 {
                offset[v] = offset[v] + (pos[v] - pos[p]) * (deficit / len);
            }
        }
        for i in 0..n {
            pos[i] = pos[i] + offset[i];
        }
    }
    Run {
        positions: pos,
        iterations,
    }
}
