//! Force-transfer: overlaps are resolved one pair at a time along the axis
//! that needs the smaller move. The node further along that axis moves, and
//! the push is transferred to every node ahead of it that it now hits.

use crate::geometry::{overlapping_pairs, overlaps};
use crate::model::{Point, Size};

use super::{Problem, Run};

#[derive(Clone, Copy)]
enum Axis {
    X,
    Y,
}

fn coord(p: Point, axis: Axis) -> f64 {
    match axis {
        Axis::X => p.x,
        Axis::Y => p.y,
    }
}

fn shift(p: &mut Point, axis: Axis, delta: f64) {
    match axis {
        Axis::X => p.x += delta,
        Axis::Y => p.y += delta,
    }
}

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let sizes = problem.sizes;
    let mut pos = problem.positions;
    let mut iterations = 0;
    let mut visited = vec![usize::MAX; pos.len()];
    let mut stamp = 0;
    while iterations < problem.max_iterations {
        let pairs = overlapping_pairs(&pos, problem.padded);
        if pairs.is_empty() {
            break;
        }
        iterations += 1;
        for (u, v) in pairs {
            if !overlaps(pos[u], problem.padded[u], pos[v], problem.padded[v]) {
                continue;
            }
            let d = pos[v] - pos[u];
            let need_x = (sizes[u].w + sizes[v].w) / 2.0 - d.x.abs();
            let need_y = (sizes[u].h + sizes[v].h) / 2.0 - d.y.abs();
            let (axis, need) = if need_x <= need_y {
                (Axis::X, need_x)
            } else {
                (Axis::Y, need_y)
            };
            // Ties go to the higher index, which is `v`.
            let (mover, anchor) = if coord(pos[u], axis) > coord(pos[v], axis) {
                (u, v)
            } else {
                (v, u)
            };
            stamp += 1;
            push(
                &mut pos,
                problem.padded,
                mover,
                anchor,
                axis,
                need,
                &mut visited,
                stamp,
            );
        }
    }
    Run {
        positions: pos,
        iterations,
    }
}

/// Move `start` forward by `delta` and cascade the same move to every node
/// ahead of a moved node that it now overlaps (under `sizes`). Each node moves at most once
/// per cascade and `anchor` never moves.
#[allow(clippy::too_many_arguments)]
fn push(
    pos: &mut [Point],
    sizes: &[Size],
    start: usize,
    anchor: usize,
    axis: Axis,
    delta: f64,
    visited: &mut [usize],
    stamp: usize,
) {
    let mut stack = vec![start];
    visited[start] = stamp;
    visited[anchor] = stamp;
    while let Some(w) = stack.pop() {
        let before = coord(pos[w], axis);
        shift(&mut pos[w], axis, delta);
        for z in 0..pos.len() {
            if visited[z] == stamp || coord(pos[z], axis) < before {
                continue;
            }
            if overlaps(pos[w], sizes[w], pos[z], sizes[z]) {
                visited[z] = stamp;
                stack.push(z);
            }
        }
    }
}
