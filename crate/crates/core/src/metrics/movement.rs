use crate::geometry::knn_indices;
use crate::model::{AdjustmentPair, Point};

use super::Frames;

/// A node counts as moved when its center travels farther than this.
pub const MOVEMENT_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MovementMetrics {
    pub nm_mn: f64,
    pub nm_dm_me: f64,
    pub nm_dm_ne: f64,
    pub nm_dm_se: f64,
    pub nm_dm_h: f64,
    pub nm_dm_imse: f64,
    /// Mean squared displacement after the best uniform scale and
    /// translation of the initial layout (no rotation).
    pub nm_d: f64,
    /// Undefined unless `1 <= k <= n - 1`.
    pub nm_knn: Option<f64>,
}

pub fn nm_metrics(pair: &AdjustmentPair<'_>, k: usize) -> MovementMetrics {
    from_frames(pair, &Frames::new(pair), k)
}

pub(crate) fn from_frames(pair: &AdjustmentPair<'_>, f: &Frames, k: usize) -> MovementMetrics {
    let before = pair.initial.positions();
    let after = pair.adjusted.positions();
    let n = before.len() as f64;

    let mut moved = 0usize;
    let mut euclid = 0.0;
    let mut squared = 0.0;
    let mut manhattan = 0.0;
    for (b, a) in before.iter().zip(after) {
        let d = *a - *b;
        let len = d.norm();
        if len > MOVEMENT_THRESHOLD {
            moved += 1;
        }
        euclid += len;
        squared += d.norm_squared();
        manhattan += d.x.abs() + d.y.abs();
    }
    let k_box = f.bb_adj.width().max(f.bb_adj.height());

    // Align the initial box onto the adjusted one: translate centers, then
    // scale per axis about the common center.
    let c = f.bb.center();
    let c_adj = f.bb_adj.center();
    let shift = c_adj - c;
    let ratio = Point::new(
        f.bb_adj.width() / f.bb.width(),
        f.bb_adj.height() / f.bb.height(),
    );
    let imse = before
        .iter()
        .zip(after)
        .map(|(b, a)| {
            let shifted = *b + shift;
            let aligned = Point::new(
                c_adj.x + (shifted.x - c_adj.x) * ratio.x,
                c_adj.y + (shifted.y - c_adj.y) * ratio.y,
            );
            (*a - aligned).norm_squared()
        })
        .sum::<f64>()
        / n;

    MovementMetrics {
        nm_mn: moved as f64 / n,
        nm_dm_me: euclid / n,
        nm_dm_ne: euclid / (k_box * std::f64::consts::SQRT_2 * n),
        nm_dm_se: squared,
        nm_dm_h: manhattan,
        nm_dm_imse: imse,
        nm_d: similarity_displacement(before, after),
        nm_knn: knn_change(before, after, k),
    }
}

/// `min over s >= 0, t` of the mean of `|after - (s * before + t)|^2`.
fn similarity_displacement(before: &[Point], after: &[Point]) -> f64 {
    let n = before.len() as f64;
    let mean = |pts: &[Point]| pts.iter().fold(Point::default(), |acc, &p| acc + p) * (1.0 / n);
    let (mb, ma) = (mean(before), mean(after));
    let mut cross = 0.0;
    let mut norm = 0.0;
    for (b, a) in before.iter().zip(after) {
        let (b, a) = (*b - mb, *a - ma);
        cross += a.dot(b);
        norm += b.norm_squared();
    }
    let s = if norm > 0.0 {
        (cross / norm).max(0.0)
    } else {
        0.0
    };
    before
        .iter()
        .zip(after)
        .map(|(b, a)| ((*a - ma) - (*b - mb) * s).norm_squared())
        .sum::<f64>()
        / n
}

fn knn_change(before: &[Point], after: &[Point], k: usize) -> Option<f64> {
    let nb = knn_indices(before, k).ok()?;
    let na = knn_indices(after, k).ok()?;
    let total = nb
        .iter()
        .zip(&na)
        .map(|(x, y)| {
            let common = x.iter().filter(|v| y.binary_search(v).is_ok()).count();
            ((k - common) as f64).powi(2)
        })
        .sum();
    Some(total)
}
