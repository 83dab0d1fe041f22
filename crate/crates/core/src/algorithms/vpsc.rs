//! Separation constraints solved as a least-squares projection, one axis at
//! a time: first horizontally, then vertically.

use crate::model::{Point, Size};

use super::{Problem, Run};

/// `x[right] - x[left] >= gap`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationConstraint {
    pub left: usize,
    pub right: usize,
    pub gap: f64,
}

pub(crate) fn run(problem: Problem<'_>) -> Run {
    let sizes = problem.sizes;
    let mut pos = problem.positions;
    let n = pos.len();

    // Horizontal pass: pairs whose y-extents intersect, except overlapping
    // pairs that are cheaper to separate vertically.
    let mut cx = Vec::new();
    for_each_projection_overlap(&pos, sizes, Axis::Y, |u, v| {
        let ox = (sizes[u].w + sizes[v].w) / 2.0 - (pos[v].x - pos[u].x).abs();
        let oy = (sizes[u].h + sizes[v].h) / 2.0 - (pos[v].y - pos[u].y).abs();
        if ox > 0.0 && ox > oy {
            return;
        }
        cx.push(oriented(
            u,
            v,
            pos[u].x,
            pos[v].x,
            (sizes[u].w + sizes[v].w) / 2.0,
        ));
    });
    let desired: Vec<f64> = pos.iter().map(|p| p.x).collect();
    let xs = solve_separation(&desired, &cx);
    for i in 0..n {
        pos[i].x = xs[i];
    }

    // Vertical pass: every pair whose x-extents still intersect. Pairs that
    // are already apart vertically are kept apart.
    let mut cy = Vec::new();
    for_each_projection_overlap(&pos, sizes, Axis::X, |u, v| {
        cy.push(oriented(
            u,
            v,
            pos[u].y,
            pos[v].y,
            (sizes[u].h + sizes[v].h) / 2.0,
        ));
    });
    let desired: Vec<f64> = pos.iter().map(|p| p.y).collect();
    let ys = solve_separation(&desired, &cy);
    for i in 0..n {
        pos[i].y = ys[i];
    }
    Run {
        positions: pos,
        iterations: 1,
    }
}

fn oriented(u: usize, v: usize, cu: f64, cv: f64, gap: f64) -> SeparationConstraint {
    // Order by coordinate, ties by index, matching the solver's total order.
    let (left, right) = if (cu, u) <= (cv, v) { (u, v) } else { (v, u) };
    SeparationConstraint { left, right, gap }
}

#[derive(Clone, Copy, PartialEq)]
enum Axis {
    X,
    Y,
}

/// Call `f(u, v)` for every pair whose extents along `axis` strictly
/// intersect.
fn for_each_projection_overlap(
    pos: &[Point],
    sizes: &[Size],
    axis: Axis,
    mut f: impl FnMut(usize, usize),
) {
    let lo = |i: usize| match axis {
        Axis::X => pos[i].x - sizes[i].w / 2.0,
        Axis::Y => pos[i].y - sizes[i].h / 2.0,
    };
    let hi = |i: usize| match axis {
        Axis::X => pos[i].x + sizes[i].w / 2.0,
        Axis::Y => pos[i].y + sizes[i].h / 2.0,
    };
    let c = |i: usize| match axis {
        Axis::X => pos[i].x,
        Axis::Y => pos[i].y,
    };
    let ext = |i: usize| match axis {
        Axis::X => sizes[i].w,
        Axis::Y => sizes[i].h,
    };
    let mut order: Vec<usize> = (0..pos.len()).collect();
    order.sort_by(|&a, &b| lo(a).total_cmp(&lo(b)).then(a.cmp(&b)));
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            // Slack guards against rounding in the edge comparison; the exact
            // test below decides.
            if lo(j) > hi(i) + 1e-9 * (1.0 + hi(i).abs()) {
                break;
            }
            if (c(j) - c(i)).abs() < (ext(i) + ext(j)) / 2.0 {
                f(i.min(j), i.max(j));
            }
        }
    }
}

/// Move `desired` as little as possible, in the least-squares sense, so that
/// every constraint holds.
///
/// Constraints must be acyclic. Variables are visited in an order compatible
/// with the constraints, and each visited variable's block absorbs the
/// blocks of its most violated incoming constraints, sitting at the mean of
/// its members' desired positions. On a chain this is exactly the pool
/// adjacent violators projection. A final forward sweep repairs any residual
/// violation left by rounding.
pub fn solve_separation(desired: &[f64], constraints: &[SeparationConstraint]) -> Vec<f64> {
    let n = desired.len();
    if constraints.is_empty() {
        return desired.to_vec();
    }
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in constraints.iter().enumerate() {
        incoming[c.right].push(ci);
        outgoing[c.left].push(ci);
        indeg[c.right] += 1;
    }
    let order = topological_order(desired, constraints, &outgoing, indeg);

    let mut blocks = Blocks::new(desired);
    for &v in &order {
        let b = blocks.of[v];
        blocks.incoming[b].extend(incoming[v].iter().copied());
        loop {
            let b = blocks.of[v];
            let Some((ci, violation)) = blocks.most_violated(b, constraints) else {
                break;
            };
            if violation <= 0.0 {
                break;
            }
            blocks.merge(constraints[ci]);
        }
    }

    let mut x: Vec<f64> = (0..n).map(|i| blocks.position(i)).collect();
    for &v in &order {
        for &ci in &incoming[v] {
            let c = constraints[ci];
            let min = x[c.left] + c.gap;
            if x[v] < min {
                x[v] = min;
            }
        }
    }
    x
}

fn topological_order(
    desired: &[f64],
    constraints: &[SeparationConstraint],
    outgoing: &[Vec<usize>],
    mut indeg: Vec<usize>,
) -> Vec<usize> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    // Kahn's algorithm, preferring smaller desired positions so the order
    // is deterministic.
    #[derive(PartialEq)]
    struct Key(f64, usize);
    impl Eq for Key {}
    impl PartialOrd for Key {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Key {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
        }
    }
    let n = desired.len();
    let mut heap: BinaryHeap<Reverse<Key>> = (0..n)
        .filter(|&i| indeg[i] == 0)
        .map(|i| Reverse(Key(desired[i], i)))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(Key(_, v))) = heap.pop() {
        order.push(v);
        for &ci in &outgoing[v] {
            let r = constraints[ci].right;
            indeg[r] -= 1;
            if indeg[r] == 0 {
                heap.push(Reverse(Key(desired[r], r)));
            }
        }
    }
    assert_eq!(order.len(), n, "separation constraints contain a cycle");
    order
}

struct Blocks<'a> {
    desired: &'a [f64],
    of: Vec<usize>,
    offset: Vec<f64>,
    members: Vec<Vec<usize>>,
    /// Sum of `desired - offset` over the members.
    weight_sum: Vec<f64>,
    incoming: Vec<Vec<usize>>,
}

impl<'a> Blocks<'a> {
    fn new(desired: &'a [f64]) -> Self {
        let n = desired.len();
        Self {
            desired,
            of: (0..n).collect(),
            offset: vec![0.0; n],
            members: (0..n).map(|i| vec![i]).collect(),
            weight_sum: desired.to_vec(),
            incoming: vec![Vec::new(); n],
        }
    }

    fn block_position(&self, b: usize) -> f64 {
        self.weight_sum[b] / self.members[b].len() as f64
    }

    fn position(&self, i: usize) -> f64 {
        self.block_position(self.of[i]) + self.offset[i]
    }

    /// Most violated constraint entering block `b` from another block.
    /// Constraints that became internal are dropped on the way.
    fn most_violated(
        &mut self,
        b: usize,
        constraints: &[SeparationConstraint],
    ) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        let mut list = std::mem::take(&mut self.incoming[b]);
        list.retain(|&ci| self.of[constraints[ci].left] != b);
        for &ci in &list {
            let c = constraints[ci];
            let violation = self.position(c.left) + c.gap - self.position(c.right);
            if best.is_none_or(|(_, v)| violation > v) {
                best = Some((ci, violation));
            }
        }
        self.incoming[b] = list;
        best
    }

    /// Merge the blocks on both sides of `c` so that `c` holds with equality.
    fn merge(&mut self, c: SeparationConstraint) {
        let (bl, br) = (self.of[c.left], self.of[c.right]);
        // Offsets of the left block's members relative to the right block.
        let d = self.offset[c.right] - self.offset[c.left] - c.gap;
        let (keep, gone, shift) = if self.members[br].len() >= self.members[bl].len() {
            (br, bl, d)
        } else {
            (bl, br, -d)
        };
        let moved = std::mem::take(&mut self.members[gone]);
        for &i in &moved {
            self.offset[i] += shift;
            self.of[i] = keep;
            self.weight_sum[keep] += self.desired[i] - self.offset[i];
        }
        self.members[keep].extend(moved);
        let inc = std::mem::take(&mut self.incoming[gone]);
        self.incoming[keep].extend(inc);
    }
}
