//! RWordle-L: place nodes one by one, nearest to the layout center first,
//! sliding each outward along the ray from the center until it fits among
//! the nodes already placed.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{bounds, overlaps};
use crate::model::{Point, Size};

use super::{Problem, Run};

/// Step along the ray, as a fraction of the node's smaller side.
const STEP_FRACTION: f64 = 0.1;

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let sizes = problem.sizes;
    let start = problem.positions;
    let n = start.len();
    let c = bounds(&start, sizes).center();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        start[a]
            .distance(c)
            .total_cmp(&start[b].distance(c))
            .then(a.cmp(&b))
    });

    let mut rng = ChaCha8Rng::seed_from_u64(problem.seed);
    let mut grid = Grid::new(sizes);
    let mut placed = start.clone();
    for &v in &order {
        let offset = start[v] - c;
        let len = offset.norm();
        let dir = if len > 0.0 {
            offset * (1.0 / len)
        } else {
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            Point::new(a.cos(), a.sin())
        };
        let step = STEP_FRACTION * sizes[v].w.min(sizes[v].h);
        let mut k = 0u64;
        let mut p = start[v];
        while grid.collides(p, sizes[v], &placed, sizes) {
            k += 1;
            p = start[v] + dir * (step * k as f64);
        }
        placed[v] = p;
        grid.insert(v, p);
    }
    Run {
        positions: placed,
        iterations: 1,
    }
}

/// Uniform grid over committed node centers. A cell is as large as the
/// biggest node, so overlap candidates lie in neighbouring cells.
struct Grid {
    cell_w: f64,
    cell_h: f64,
    cells: HashMap<(i64, i64), Vec<usize>>,
}

impl Grid {
    fn new(sizes: &[Size]) -> Self {
        let cell_w = sizes
            .iter()
            .map(|s| s.w)
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let cell_h = sizes
            .iter()
            .map(|s| s.h)
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        Self {
            cell_w,
            cell_h,
            cells: HashMap::new(),
        }
    }

    fn cell(&self, p: Point) -> (i64, i64) {
        (
            (p.x / self.cell_w).floor() as i64,
            (p.y / self.cell_h).floor() as i64,
        )
    }

    fn insert(&mut self, i: usize, p: Point) {
        let key = self.cell(p);
        self.cells.entry(key).or_default().push(i);
    }

    fn collides(&self, p: Point, size: Size, placed: &[Point], sizes: &[Size]) -> bool {
        let (cx, cy) = self.cell(p);
        for gx in cx - 1..=cx + 1 {
            for gy in cy - 1..=cy + 1 {
                if let Some(list) = self.cells.get(&(gx, gy)) {
                    if list.iter().any(|&j| overlaps(p, size, placed[j], sizes[j])) {
                        return true;
                    }
                }
            }
        }
        false
    }
}
