//! PRISM: repeatedly stretch the overlapped edges of a proximity graph and
//! relax the layout toward the stretched lengths by stress majorization.

use crate::geometry::overlapping_pairs;

use super::stress::{majorize, overlap_factor, proximity_edges};
use super::{Problem, Run};

/// Cap on how much one edge may grow in a single outer iteration.
const MAX_STRETCH: f64 = 1.5;
const SWEEPS: usize = 30;

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let sizes = problem.sizes;
    let mut pos = problem.positions;
    let mut iterations = 0;
    while iterations < problem.max_iterations {
        let overlapping = overlapping_pairs(&pos, problem.padded);
        if overlapping.is_empty() {
            break;
        }
        iterations += 1;
        let edges = proximity_edges(&pos, sizes, &overlapping);
        let targets: Vec<f64> = edges
            .iter()
            .map(|&(u, v)| {
                let t = overlap_factor(&pos, sizes, u, v).min(MAX_STRETCH);
                t * pos[u].distance(pos[v])
            })
            .collect();
        majorize(&mut pos, &edges, &targets, SWEEPS);
    }
    Run {
        positions: pos,
        iterations,
    }
}
