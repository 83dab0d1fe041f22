use crate::geometry::{bounds, overlapping_pairs};
use crate::model::{Point, Size};

use super::{Problem, Run};

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let s = factor(&problem.positions, problem.sizes).unwrap_or(1.0);
    Run {
        positions: scale_about_center(&problem.positions, problem.sizes, s),
        iterations: 1,
    }
}

/// Smallest `s >= 1` such that multiplying every center offset by `s`
/// separates all currently overlapping pairs. `None` when an overlapping
/// pair shares its center, since no finite factor can separate it.
pub(crate) fn factor(positions: &[Point], sizes: &[Size]) -> Option<f64> {
    let mut s = 1.0_f64;
    for (u, v) in overlapping_pairs(positions, sizes) {
        let d = positions[v] - positions[u];
        let gx = (sizes[u].w + sizes[v].w) / 2.0;
        let gy = (sizes[u].h + sizes[v].h) / 2.0;
        let sx = if d.x == 0.0 {
            f64::INFINITY
        } else {
            gx / d.x.abs()
        };
        let sy = if d.y == 0.0 {
            f64::INFINITY
        } else {
            gy / d.y.abs()
        };
        let needed = sx.min(sy);
        if !needed.is_finite() {
            return None;
        }
        s = s.max(needed);
    }
    Some(s)
}

/// Scale center offsets from the bounding-box center by `s`.
pub(crate) fn scale_about_center(positions: &[Point], sizes: &[Size], s: f64) -> Vec<Point> {
    if s == 1.0 || positions.is_empty() {
        return positions.to_vec();
    }
    let c = bounds(positions, sizes).center();
    positions.iter().map(|&p| c + (p - c) * s).collect()
}
