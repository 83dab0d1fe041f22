use crate::error::{Error, Result};
use crate::model::{Embedding, Point};

/// The `k` nearest other nodes of every node by center distance, as sorted
/// dense-index lists. Distance ties go to the smaller index.
pub fn knn_indices(positions: &[Point], k: usize) -> Result<Vec<Vec<usize>>> {
    let n = positions.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "k must be in 1..={} for {n} nodes, got {k}",
            n.saturating_sub(1)
        )));
    }
    let mut out = Vec::with_capacity(n);
    let mut candidates: Vec<(f64, usize)> = Vec::with_capacity(n - 1);
    for (v, &p) in positions.iter().enumerate() {
        candidates.clear();
        candidates.extend(
            positions
                .iter()
                .enumerate()
                .filter(|&(u, _)| u != v)
                .map(|(u, &q)| ((q - p).norm_squared(), u)),
        );
        let by_key = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
        if k < candidates.len() {
            candidates.select_nth_unstable_by(k - 1, by_key);
        }
        let mut nearest: Vec<usize> = candidates[..k].iter().map(|&(_, u)| u).collect();
        nearest.sort_unstable();
        out.push(nearest);
    }
    Ok(out)
}

pub fn knn_sets(embedding: &Embedding, k: usize) -> Result<Vec<Vec<usize>>> {
    knn_indices(embedding.positions(), k)
}
