//! Random instances and brute-force reference implementations shared by the
//! integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use noverlap::{Embedding, Node, Point, Size, SizedGraph};
use proptest::prelude::*;

/// A graph with an initial and an adjusted embedding.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: SizedGraph,
    pub initial: Embedding,
    pub adjusted: Embedding,
}

pub fn graph_from(sizes: &[(f64, f64)], edges: &[(usize, usize)]) -> SizedGraph {
    let nodes = sizes
        .iter()
        .enumerate()
        .map(|(i, &(w, h))| Node::new(format!("v{i:03}"), w, h))
        .collect();
    let edges = edges
        .iter()
        .map(|&(a, b)| (format!("v{a:03}"), format!("v{b:03}")));
    SizedGraph::new("t", nodes, edges).unwrap()
}

pub fn embed(graph: &SizedGraph, pts: &[(f64, f64)]) -> Embedding {
    Embedding::new(graph, pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
}

fn coord(grid: bool) -> BoxedStrategy<f64> {
    if grid {
        (-6i32..=6).prop_map(|i| i as f64 * 0.5).boxed()
    } else {
        (-10.0..10.0f64).boxed()
    }
}

/// Instances of `min_n..=max_n` nodes. With `grid`, coordinates snap to a
/// coarse lattice so that ties and exact equalities are common.
pub fn instances(min_n: usize, max_n: usize, grid: bool) -> impl Strategy<Value = Instance> {
    (min_n..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                prop::collection::vec((0.5..3.0f64, 0.5..3.0f64), n),
                prop::collection::vec((coord(grid), coord(grid)), n),
                prop::collection::vec((0u8..3, coord(grid), coord(grid)), n),
                prop::collection::vec(prop::bool::weighted(0.3), pairs),
            )
        })
        .prop_map(|(sizes, pos, moves, keep)| {
            let n = sizes.len();
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let graph = graph_from(&sizes, &edges);
            let adjusted: Vec<(f64, f64)> = pos
                .iter()
                .zip(&moves)
                .map(|(&(x, y), &(stay, dx, dy))| if stay == 0 { (x, y) } else { (x + dx, y + dy) })
                .collect();
            Instance {
                initial: embed(&graph, &pos),
                adjusted: embed(&graph, &adjusted),
                graph,
            }
        })
}

/// Layouts with enough overlaps to exercise the algorithms.
pub fn crowded(min_n: usize, max_n: usize) -> impl Strategy<Value = (SizedGraph, Embedding)> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                prop::collection::vec((0.5..4.0f64, 0.5..4.0f64), n),
                prop::collection::vec((-8i32..=8, -8i32..=8, 0.0..1.0f64), n),
                prop::collection::vec(prop::bool::weighted(0.2), pairs),
            )
        })
        .prop_map(|(sizes, pos, keep)| {
            let n = sizes.len();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect();
            let g = graph_from(&sizes, &edges);
            // Mix lattice points (coincident centers, shared rows) with
            // off-lattice ones.
            let pts: Vec<(f64, f64)> = pos
                .iter()
                .map(|&(x, y, f)| {
                    if f < 0.5 {
                        (x as f64 * 0.5, y as f64 * 0.5)
                    } else {
                        (x as f64 * 0.5 + f, y as f64 * 0.5 - f)
                    }
                })
                .collect();
            let e = embed(&g, &pts);
            (g, e)
        })
}

pub struct OoOracle {
    pub oo_o: f64,
    pub oo_kt: f64,
    pub oo_ni: f64,
    pub oo_nni: f64,
}

/// Literal pairwise evaluation over ordered pairs.
pub fn oo_oracle(before: &[Point], after: &[Point]) -> OoOracle {
    let n = before.len();
    if n < 2 {
        return OoOracle {
            oo_o: 1.0,
            oo_kt: 0.0,
            oo_ni: 0.0,
            oo_nni: 0.0,
        };
    }
    let mut inv = 0usize;
    let mut ni = 0usize;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (b, bv, a, av) = (before[u], before[v], after[u], after[v]);
            let kept = ((b.x < bv.x) == (a.x < av.x))
                && ((b.y < bv.y) == (a.y < av.y))
                && ((b.x == bv.x) == (a.x == av.x))
                && ((b.y == bv.y) == (a.y == av.y));
            if !kept {
                inv += 1;
            }
            if b.x > bv.x && a.x < av.x {
                ni += 1;
            }
            if b.y > bv.y && a.y < av.y {
                ni += 1;
            }
        }
    }
    let denom = (n * (n - 1)) as f64;
    OoOracle {
        oo_o: if inv == 0 { 1.0 } else { 0.0 },
        oo_kt: inv as f64 / denom,
        oo_ni: ni as f64,
        oo_nni: ni as f64 / denom,
    }
}

/// (min_x, min_y, max_x, max_y) over node rectangles.
pub fn box_of(pts: &[Point], sizes: &[Size]) -> (f64, f64, f64, f64) {
    let mut b = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for (p, s) in pts.iter().zip(sizes) {
        b.0 = b.0.min(p.x - s.w / 2.0);
        b.1 = b.1.min(p.y - s.h / 2.0);
        b.2 = b.2.max(p.x + s.w / 2.0);
        b.3 = b.3.max(p.y + s.h / 2.0);
    }
    b
}

pub struct NmOracle {
    pub nm_mn: f64,
    pub nm_dm_me: f64,
    pub nm_dm_ne: f64,
    pub nm_dm_se: f64,
    pub nm_dm_h: f64,
    pub nm_dm_imse: f64,
    pub nm_knn: Option<f64>,
}

pub fn nm_oracle(before: &[Point], after: &[Point], sizes: &[Size], k: usize) -> NmOracle {
    let n = before.len();
    let nf = n as f64;
    let dist = |i: usize| (after[i].x - before[i].x).hypot(after[i].y - before[i].y);
    let moved = (0..n).filter(|&i| dist(i) > 1e-9).count();
    let mut me = 0.0;
    let mut se = 0.0;
    let mut h = 0.0;
    for i in 0..n {
        let (dx, dy) = (after[i].x - before[i].x, after[i].y - before[i].y);
        me += dist(i);
        se += dx * dx + dy * dy;
        h += dx.abs() + dy.abs();
    }
    let b0 = box_of(before, sizes);
    let b1 = box_of(after, sizes);
    let (w0, h0) = (b0.2 - b0.0, b0.3 - b0.1);
    let (w1, h1) = (b1.2 - b1.0, b1.3 - b1.1);
    let c0 = ((b0.0 + b0.2) / 2.0, (b0.1 + b0.3) / 2.0);
    let c1 = ((b1.0 + b1.2) / 2.0, (b1.1 + b1.3) / 2.0);
    let mut imse = 0.0;
    for i in 0..n {
        // shift by c1 - c0, then scale about c1
        let sx = before[i].x + (c1.0 - c0.0);
        let sy = before[i].y + (c1.1 - c0.1);
        let tx = c1.0 + (sx - c1.0) * (w1 / w0);
        let ty = c1.1 + (sy - c1.1) * (h1 / h0);
        let (dx, dy) = (after[i].x - tx, after[i].y - ty);
        imse += dx * dx + dy * dy;
    }
    let knn = (k >= 1 && k < n).then(|| {
        let a = knn_oracle(before, k);
        let b = knn_oracle(after, k);
        (0..n)
            .map(|v| {
                let common = a[v].intersection(&b[v]).count();
                ((k - common) as f64).powi(2)
            })
            .sum()
    });
    NmOracle {
        nm_mn: moved as f64 / nf,
        nm_dm_me: me / nf,
        nm_dm_ne: me / (w1.max(h1) * 2f64.sqrt() * nf),
        nm_dm_se: se,
        nm_dm_h: h,
        nm_dm_imse: imse / nf,
        nm_knn: knn,
    }
}

/// Full sort of every other node by (squared distance, index).
pub fn knn_oracle(pts: &[Point], k: usize) -> Vec<BTreeSet<usize>> {
    (0..pts.len())
        .map(|v| {
            let mut others: Vec<usize> = (0..pts.len()).filter(|&u| u != v).collect();
            let d2 = |u: usize| {
                let (dx, dy) = (pts[u].x - pts[v].x, pts[u].y - pts[v].y);
                dx * dx + dy * dy
            };
            others.sort_by(|&a, &b| d2(a).partial_cmp(&d2(b)).unwrap().then(a.cmp(&b)));
            others.into_iter().take(k).collect()
        })
        .collect()
}

/// Positive when `d` lies strictly inside the circle through a, b, c
/// (counter-clockwise), scaled by the circle's size.
pub fn in_circle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);
    let det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    let orient = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    det * orient.signum()
}

/// Delaunay edges by brute force: every edge of a triangle whose
/// circumcircle holds no other point. Assumes general position.
pub fn delaunay_oracle(pts: &[Point]) -> BTreeSet<(usize, usize)> {
    let n = pts.len();
    let mut edges = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let area = (pts[b].x - pts[a].x) * (pts[c].y - pts[a].y)
                    - (pts[b].y - pts[a].y) * (pts[c].x - pts[a].x);
                if area.abs() < 1e-12 {
                    continue;
                }
                let empty = (0..n)
                    .filter(|&d| d != a && d != b && d != c)
                    .all(|d| in_circle(pts[a], pts[b], pts[c], pts[d]) <= 0.0);
                if empty {
                    edges.extend([(a, b), (b, c), (a, c)]);
                }
            }
        }
    }
    edges
}

/// Longest over shortest adjusted edge, and the coefficient of variation of
/// Delaunay length ratios.
pub fn el_oracle(
    graph: &SizedGraph,
    before: &[Point],
    after: &[Point],
) -> (Option<f64>, Option<f64>) {
    let len = |p: &[Point], u: usize, v: usize| (p[u].x - p[v].x).hypot(p[u].y - p[v].y);
    let lengths: Vec<f64> = graph
        .edges()
        .iter()
        .map(|&(u, v)| len(after, u, v))
        .collect();
    let el_r = if lengths.is_empty() || lengths.contains(&0.0) {
        None
    } else {
        let max = lengths.iter().cloned().fold(f64::MIN, f64::max);
        let min = lengths.iter().cloned().fold(f64::MAX, f64::min);
        Some(max / min)
    };
    let ratios: Vec<f64> = delaunay_oracle(before)
        .into_iter()
        .map(|(u, v)| len(after, u, v) / len(before, u, v))
        .collect();
    let k = ratios.len() as f64;
    let mean = ratios.iter().sum::<f64>() / k;
    let var = ratios.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / k;
    let rsdd = (mean > 0.0).then(|| var.sqrt() / mean);
    (el_r, rsdd)
}

/// Convex hull by gift wrapping, then its shoelace area.
pub fn jarvis_area(points: &[Point]) -> f64 {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap()
            .then(a.y.partial_cmp(&b.y).unwrap())
    });
    pts.dedup();
    if pts.len() < 3 {
        return 0.0;
    }
    let cross =
        |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let d2 = |a: Point, b: Point| (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
    let start = 0;
    let mut hull = vec![pts[start]];
    let mut cur = start;
    loop {
        let mut next = (cur + 1) % pts.len();
        for i in 0..pts.len() {
            let c = cross(pts[cur], pts[next], pts[i]);
            if c < 0.0 || (c == 0.0 && d2(pts[cur], pts[i]) > d2(pts[cur], pts[next])) {
                next = i;
            }
        }
        if next == start {
            break;
        }
        hull.push(pts[next]);
        cur = next;
        if hull.len() > pts.len() {
            break;
        }
    }
    let mut twice = 0.0;
    for i in 0..hull.len() {
        let (p, q) = (hull[i], hull[(i + 1) % hull.len()]);
        twice += p.x * q.y - q.x * p.y;
    }
    twice.abs() / 2.0
}

/// Smallest s >= 1 found by bisection such that scaling all centers by s
/// removes every overlap.
pub fn scaling_bisection(pts: &[Point], sizes: &[Size]) -> f64 {
    let free = |s: f64| {
        let n = pts.len();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let dx = (pts[u].x - pts[v].x).abs() * s;
                let dy = (pts[u].y - pts[v].y).abs() * s;
                !(dx < (sizes[u].w + sizes[v].w) / 2.0 && dy < (sizes[u].h + sizes[v].h) / 2.0)
            })
        })
    };
    if free(1.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (1.0, 2.0);
    while !free(hi) {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if free(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Optimal chain positions by trying every split into consecutive blocks.
pub fn chain_oracle(desired: &[f64], gaps: &[f64]) -> Vec<f64> {
    let n = desired.len();
    let mut offset = vec![0.0; n];
    for i in 1..n {
        offset[i] = offset[i - 1] + gaps[i - 1];
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0..(1u32 << (n - 1)) {
        // Bit i set: a block boundary between i and i + 1.
        let mut x = vec![0.0; n];
        let mut start = 0;
        for end in 1..=n {
            if end == n || mask & (1 << (end - 1)) != 0 {
                let len = (end - start) as f64;
                let base = (start..end)
                    .map(|i| desired[i] - (offset[i] - offset[start]))
                    .sum::<f64>()
                    / len;
                for i in start..end {
                    x[i] = base + offset[i] - offset[start];
                }
                start = end;
            }
        }
        if (1..n).any(|i| x[i] - x[i - 1] < gaps[i - 1] - 1e-12) {
            continue;
        }
        let cost: f64 = x.iter().zip(desired).map(|(a, b)| (a - b).powi(2)).sum();
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, x));
        }
    }
    best.unwrap().1
}

/// Center and radius of the circle through three points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> (Point, f64) {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    let (a2, b2, c2) = (
        a.x * a.x + a.y * a.y,
        b.x * b.x + b.y * b.y,
        c.x * c.x + c.y * c.y,
    );
    let center = Point::new(
        (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
        (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d,
    );
    (center, (a.x - center.x).hypot(a.y - center.y))
}
