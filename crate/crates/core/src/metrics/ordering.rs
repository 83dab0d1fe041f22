use std::cmp::Ordering;

use crate::model::AdjustmentPair;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderingMetrics {
    pub oo_o: f64,
    pub oo_kt: f64,
    pub oo_ni: f64,
    pub oo_nni: f64,
}

/// Orthogonal-ordering metrics. Coordinates are compared exactly.
///
/// `oo_ni` counts, per axis, the pairs ordered one way initially and
/// strictly the other way afterwards.
pub fn oo_metrics(pair: &AdjustmentPair<'_>) -> OrderingMetrics {
    let n = pair.n();
    if n < 2 {
        return OrderingMetrics {
            oo_o: 1.0,
            oo_kt: 0.0,
            oo_ni: 0.0,
            oo_nni: 0.0,
        };
    }
    let before = pair.initial.positions();
    let after = pair.adjusted.positions();

    // A pair is inverted when either axis changes its <, =, > relation.
    let mut inverted = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            let x_changed = cmp(before[u].x, before[v].x) != cmp(after[u].x, after[v].x);
            let y_changed = cmp(before[u].y, before[v].y) != cmp(after[u].y, after[v].y);
            if x_changed || y_changed {
                inverted += 1;
            }
        }
    }

    let xs: Vec<(f64, f64)> = before.iter().zip(after).map(|(b, a)| (b.x, a.x)).collect();
    let ys: Vec<(f64, f64)> = before.iter().zip(after).map(|(b, a)| (b.y, a.y)).collect();
    let ni = (axis_inversions(&xs) + axis_inversions(&ys)) as f64;
    let ordered_pairs = (n * (n - 1)) as f64;

    OrderingMetrics {
        oo_o: if inverted == 0 { 1.0 } else { 0.0 },
        oo_kt: (2 * inverted) as f64 / ordered_pairs,
        oo_ni: ni,
        oo_nni: ni / ordered_pairs,
    }
}

/// Numeric comparison of finite coordinates; -0.0 equals 0.0.
fn cmp(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
}

/// Number of ordered pairs `(u, v)` with `initial_u > initial_v` and
/// `adjusted_u < adjusted_v`, in O(n log n) with a Fenwick tree over the
/// ranks of the adjusted coordinate.
fn axis_inversions(coords: &[(f64, f64)]) -> u64 {
    let n = coords.len();
    let mut adjusted: Vec<f64> = coords.iter().map(|c| c.1).collect();
    adjusted.sort_by(|&a, &b| cmp(a, b));
    adjusted.dedup();
    // 1-based rank; equal values share a rank.
    let rank = |v: f64| adjusted.partition_point(|&a| cmp(a, v).is_lt()) + 1;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp(coords[a].0, coords[b].0));

    let mut tree = Fenwick::new(adjusted.len());
    let mut inserted = 0u64;
    let mut total = 0u64;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && cmp(coords[order[end]].0, coords[order[start]].0).is_eq() {
            end += 1;
        }
        // Every node already inserted has a strictly smaller initial
        // coordinate; count those with a strictly larger adjusted one.
        for &u in &order[start..end] {
            total += inserted - tree.prefix(rank(coords[u].1));
        }
        for &u in &order[start..end] {
            tree.add(rank(coords[u].1));
            inserted += 1;
        }
        start = end;
    }
    total
}

struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Self {
            tree: vec![0; n + 1],
        }
    }

    fn add(&mut self, mut i: usize) {
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    fn prefix(&self, mut i: usize) -> u64 {
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}
