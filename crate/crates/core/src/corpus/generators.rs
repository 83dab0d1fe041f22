use std::collections::BTreeSet;

use rand::seq::index;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi G(n, m) with `m = min(2n, n(n-1)/2)`, pairs drawn without
/// replacement.
pub(crate) fn random(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let total = n * (n - 1) / 2;
    let m = (2 * n).min(total);
    let mut edges: Vec<(usize, usize)> = index::sample(rng, total, m)
        .into_iter()
        .map(|k| unrank_pair(k, n))
        .collect();
    edges.sort_unstable();
    edges
}

/// Map `k` in `0..n(n-1)/2` to the k-th pair `(u, v)`, `u < v`, in
/// lexicographic order.
fn unrank_pair(mut k: usize, n: usize) -> (usize, usize) {
    let mut u = 0;
    let mut row = n - 1;
    while k >= row {
        k -= row;
        u += 1;
        row -= 1;
    }
    (u, u + 1 + k)
}

/// Uniform random recursive tree: node `i` attaches to a uniform `j < i`.
pub(crate) fn tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    (1..n).map(|i| (rng.gen_range(0..i), i)).collect()
}

/// Watts–Strogatz: ring where each node links to its 2 nearest neighbours
/// on each side, then each lattice edge has its far endpoint rewired with
/// probability 0.1, avoiding self-loops and duplicates.
pub(crate) fn small_world(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    const HALF_K: usize = 2;
    const P: f64 = 0.1;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut set = BTreeSet::new();
    let mut lattice = Vec::new();
    for i in 0..n {
        for j in 1..=HALF_K {
            let e = key(i, (i + j) % n);
            if e.0 != e.1 && set.insert(e) {
                lattice.push((i, (i + j) % n));
            }
        }
    }
    let complete = set.len() == n * (n - 1) / 2;
    for (u, v) in lattice {
        if complete || !rng.gen_bool(P) {
            continue;
        }
        // Pick a new far endpoint among nodes not yet linked to u.
        let candidates: Vec<usize> = (0..n)
            .filter(|&w| w != u && !set.contains(&key(u, w)))
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let w = candidates[rng.gen_range(0..candidates.len())];
        set.remove(&key(u, v));
        set.insert(key(u, w));
    }
    set.into_iter().collect()
}

/// Barabási–Albert: start from a triangle, then every new node links to
/// two distinct existing nodes chosen proportionally to degree.
pub(crate) fn scale_free(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    const M: usize = 2;
    let seed_nodes = (M + 1).min(n);
    let mut edges = Vec::new();
    // Every node appears once per incident edge.
    let mut repeated = Vec::new();
    for u in 0..seed_nodes {
        for v in u + 1..seed_nodes {
            edges.push((u, v));
            repeated.extend([u, v]);
        }
    }
    for v in seed_nodes..n {
        let mut targets = Vec::with_capacity(M);
        while targets.len() < M {
            let t = repeated[rng.gen_range(0..repeated.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            edges.push((t, v));
            repeated.extend([t, v]);
        }
    }
    edges
}
