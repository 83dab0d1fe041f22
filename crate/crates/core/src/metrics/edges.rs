use crate::geometry::triangulate;
use crate::model::AdjustmentPair;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLengthMetrics {
    /// Longest over shortest adjusted edge. Undefined without edges or with a
    /// zero-length adjusted edge.
    pub el_r: Option<f64>,
    /// Coefficient of variation of the length ratios over the Delaunay edges
    /// of the initial layout. Undefined for fewer than two nodes or a
    /// zero-length initial Delaunay edge.
    pub el_rsdd: Option<f64>,
}

pub fn el_metrics(pair: &AdjustmentPair<'_>) -> EdgeLengthMetrics {
    let before = pair.initial.positions();
    let after = pair.adjusted.positions();

    let lengths = pair
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| after[u].distance(after[v]));
    let (min, max) = lengths.fold((f64::INFINITY, 0.0_f64), |(lo, hi), l| {
        (lo.min(l), hi.max(l))
    });
    let el_r = (pair.graph.m() > 0 && min > 0.0).then(|| max / min);

    let el_rsdd = triangulate(before, &pair.graph.sizes()).ok().and_then(|t| {
        let ratios = t
            .edges
            .iter()
            .map(|&(u, v)| {
                let initial = before[u].distance(before[v]);
                (initial > 0.0).then(|| after[u].distance(after[v]) / initial)
            })
            .collect::<Option<Vec<f64>>>()?;
        let k = ratios.len() as f64;
        let mean = ratios.iter().sum::<f64>() / k;
        if mean <= 0.0 {
            return None;
        }
        let var = ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / k;
        Some(var.sqrt() / mean)
    });

    EdgeLengthMetrics { el_r, el_rsdd }
}
