//! Push-Force Scan: a horizontal scan followed by a vertical scan. Each scan
//! visits nodes in coordinate order and shifts them forward just enough to
//! clear the overlaps found on the way, never reordering nodes along the
//! scanned axis.

use crate::geometry::overlaps;
use crate::model::{Point, Size};

use super::{Problem, Run};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Variant {
    /// Every node is shifted by an accumulated push, so space opened by one
    /// overlap carries over to everything behind it.
    Classic,
    /// Nodes move only as far as their own constraints require; a pushed
    /// group drags the next one along by at most a small gap.
    Improved,
}

pub(crate) fn run(problem: Problem<'_>, variant: Variant) -> Run {
    let sizes = problem.sizes;
    let mut pos = problem.positions;
    match variant {
        Variant::Classic => push_scan(&mut pos, sizes),
        Variant::Improved => compact_scan(&mut pos, sizes),
    }
    // The vertical pass is the classic one in both variants.
    let mut t = transpose(&pos);
    let t_sizes: Vec<Size> = sizes.iter().map(|s| Size::new(s.h, s.w)).collect();
    push_scan(&mut t, &t_sizes);
    Run {
        positions: transpose(&t),
        iterations: 1,
    }
}

fn transpose(pos: &[Point]) -> Vec<Point> {
    pos.iter().map(|p| Point::new(p.y, p.x)).collect()
}

/// Indices sorted by x, then split into runs of equal x.
fn x_groups(pos: &[Point]) -> (Vec<usize>, Vec<std::ops::Range<usize>>) {
    let mut order: Vec<usize> = (0..pos.len()).collect();
    order.sort_by(|&a, &b| pos[a].x.total_cmp(&pos[b].x).then(a.cmp(&b)));
    let mut groups = Vec::new();
    let mut start = 0;
    for k in 1..=order.len() {
        if k == order.len() || pos[order[k]].x != pos[order[start]].x {
            groups.push(start..k);
            start = k;
        }
    }
    (order, groups)
}

/// Horizontal pass of the classic variant. Groups of equal x share one
/// shift, and shifts never decrease along the scan, so x-order is kept and
/// nodes that did not overlap never come closer.
fn push_scan(pos: &mut [Point], sizes: &[Size]) {
    let n = pos.len();
    if n < 2 {
        return;
    }
    let (order, groups) = x_groups(pos);
    let w_max = sizes.iter().map(|s| s.w).fold(0.0, f64::max);
    let original = pos.to_vec();
    let mut shift = vec![0.0_f64; n];
    let mut running = 0.0_f64;
    for g in groups {
        let mut delta = running;
        for &i in &order[g.clone()] {
            let xi = original[i].x;
            for &j in order[..g.start].iter().rev() {
                let dx = xi - original[j].x;
                if dx >= (sizes[i].w + w_max) / 2.0 {
                    break;
                }
                if overlaps(original[i], sizes[i], original[j], sizes[j]) {
                    let need = (sizes[i].w + sizes[j].w) / 2.0 - dx;
                    delta = delta.max(shift[j] + need);
                }
            }
        }
        for &i in &order[g] {
            shift[i] = delta;
            pos[i].x = original[i].x + delta;
        }
        running = delta;
    }
}

/// Horizontal pass of the improved variant. A group is placed at the
/// largest of: its own x; the previous group plus the original gap, capped
/// at a small fraction of the node width; and every earlier node whose
/// y-extent it shares, plus the separation distance.
fn compact_scan(pos: &mut [Point], sizes: &[Size]) {
    let n = pos.len();
    if n < 2 {
        return;
    }
    let (order, groups) = x_groups(pos);
    let w_max = sizes.iter().map(|s| s.w).fold(0.0, f64::max);
    let w_min = sizes.iter().map(|s| s.w).fold(f64::INFINITY, f64::min);
    let tau = 0.05 * w_min;
    let original = pos.to_vec();
    let mut prev: Option<(f64, f64)> = None; // (original x, new x) of the last group
    for g in groups {
        let x = original[order[g.start]].x;
        let mut target = x;
        if let Some((px, pnew)) = prev {
            target = target.max(pnew + (x - px).min(tau));
            if target <= pnew {
                target = pnew.next_up();
            }
        }
        let base = target;
        for &i in &order[g.clone()] {
            for &j in order[..g.start].iter().rev() {
                // Placed coordinates never decrease along the scan, so once
                // an earlier node is out of reach all before it are too.
                if pos[j].x + (sizes[i].w + w_max) / 2.0 <= base {
                    break;
                }
                let dy = (original[i].y - original[j].y).abs();
                if dy < (sizes[i].h + sizes[j].h) / 2.0 {
                    target = target.max(pos[j].x + (sizes[i].w + sizes[j].w) / 2.0);
                }
            }
        }
        for &i in &order[g] {
            pos[i].x = target;
        }
        prev = Some((x, target));
    }
}
