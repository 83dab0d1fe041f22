use crate::model::{Embedding, Point, Size, SizedGraph};

/// Strict rectangle overlap test on centers and sizes. Rectangles that only
/// touch do not overlap.
pub fn overlaps(u_pos: Point, u_size: Size, v_pos: Point, v_size: Size) -> bool {
    (v_pos.x - u_pos.x).abs() < (v_size.w + u_size.w) / 2.0
        && (v_pos.y - u_pos.y).abs() < (v_size.h + u_size.h) / 2.0
}

/// All overlapping pairs `(i, j)`, `i < j`, sorted lexicographically.
///
/// Sweeps over nodes sorted by left edge, so the cost is proportional to
/// `n log n` plus the number of pairs whose x-extents intersect.
pub fn overlapping_pairs(positions: &[Point], sizes: &[Size]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    sweep(positions, sizes, |i, j| pairs.push((i.min(j), i.max(j))));
    pairs.sort_unstable();
    pairs
}

pub fn count_overlapping_pairs(positions: &[Point], sizes: &[Size]) -> usize {
    let mut count = 0;
    sweep(positions, sizes, |_, _| count += 1);
    count
}

pub fn count_overlaps(graph: &SizedGraph, embedding: &Embedding) -> usize {
    count_overlapping_pairs(embedding.positions(), &graph.sizes())
}

fn sweep(positions: &[Point], sizes: &[Size], mut hit: impl FnMut(usize, usize)) {
    let n = positions.len();
    let left = |i: usize| positions[i].x - sizes[i].w / 2.0;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| left(a).total_cmp(&left(b)).then(a.cmp(&b)));
    for (k, &i) in order.iter().enumerate() {
        let right = positions[i].x + sizes[i].w / 2.0;
        // Slack so that rounding in the edge computation never hides a pair
        // the exact predicate would report.
        let limit = right + 1e-9 * (1.0 + right.abs());
        for &j in &order[k + 1..] {
            if left(j) > limit {
                break;
            }
            if overlaps(positions[i], sizes[i], positions[j], sizes[j]) {
                hit(i, j);
            }
        }
    }
}
