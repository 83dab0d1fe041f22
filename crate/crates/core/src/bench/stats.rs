use std::collections::BTreeMap;

use crate::algorithms::Algorithm;
use crate::error::{Error, Result};
use crate::registry::Metric;

use super::BenchRecord;

/// Quantile of sorted data by linear interpolation between order
/// statistics (the R type 7 rule).
pub fn quantile(sorted: &[f64], p: f64) -> Option<f64> {
    if sorted.is_empty() {
        return None;
    }
    let h = (sorted.len() - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    Some(sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo]))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub q1: Option<f64>,
    pub median: Option<f64>,
    pub q3: Option<f64>,
    pub mean: Option<f64>,
    /// Values that were present.
    pub count: usize,
    pub undefined_count: usize,
}

impl Summary {
    pub fn of(values: impl IntoIterator<Item = Option<f64>>) -> Self {
        let mut defined = Vec::new();
        let mut undefined_count = 0;
        for v in values {
            match v {
                Some(x) if !x.is_nan() => defined.push(x),
                _ => undefined_count += 1,
            }
        }
        defined.sort_by(f64::total_cmp);
        let mean =
            (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);
        Self {
            q1: quantile(&defined, 0.25),
            median: quantile(&defined, 0.5),
            q3: quantile(&defined, 0.75),
            mean,
            count: defined.len(),
            undefined_count,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBy {
    Algorithm,
    AlgorithmAndSize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub algorithm: Algorithm,
    /// Node count of the group when grouping by size.
    pub n: Option<usize>,
    pub records: usize,
    pub time_ms: Summary,
    pub metrics: Vec<(Metric, Summary)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateTable {
    pub metrics: Vec<Metric>,
    pub rows: Vec<AggregateRow>,
}

impl AggregateTable {
    pub fn row(&self, algorithm: Algorithm, n: Option<usize>) -> Option<&AggregateRow> {
        self.rows
            .iter()
            .find(|r| r.algorithm == algorithm && r.n == n)
    }
}

impl AggregateRow {
    pub fn metric(&self, metric: Metric) -> Option<&Summary> {
        self.metrics
            .iter()
            .find(|(m, _)| *m == metric)
            .map(|(_, s)| s)
    }
}

/// Per-group quartiles and means. Failed runs count as undefined for every
/// metric and are left out of the timing summary.
pub fn aggregate(
    records: &[BenchRecord],
    group_by: GroupBy,
    metrics: &[Metric],
) -> Result<AggregateTable> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("no records to aggregate".into()));
    }
    let mut groups: BTreeMap<(Algorithm, Option<usize>), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        let n = match group_by {
            GroupBy::Algorithm => None,
            GroupBy::AlgorithmAndSize => Some(r.n),
        };
        groups.entry((r.algorithm, n)).or_default().push(r);
    }
    let rows = groups
        .into_iter()
        .map(|((algorithm, n), rs)| AggregateRow {
            algorithm,
            n,
            records: rs.len(),
            time_ms: Summary::of(
                rs.iter()
                    .filter(|r| r.error.is_none())
                    .map(|r| Some(r.time_ms)),
            ),
            metrics: metrics
                .iter()
                .map(|&m| (m, Summary::of(rs.iter().map(|r| r.metrics.get(m)))))
                .collect(),
        })
        .collect();
    Ok(AggregateTable {
        metrics: metrics.to_vec(),
        rows,
    })
}

/// Pearson correlation over the pairs where both values are present.
/// Undefined with fewer than 3 pairs or when either side is constant.
pub fn pearson(xs: &[Option<f64>], ys: &[Option<f64>]) -> Option<f64> {
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter_map(|(x, y)| Some(((*x)?, (*y)?)))
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    if pairs.len() < 3 {
        return None;
    }
    let n = pairs.len() as f64;
    let mx = pairs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pairs.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in &pairs {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub metrics: Vec<Metric>,
    /// Row-major, `metrics.len()` squared entries.
    pub values: Vec<Option<f64>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: Metric, b: Metric) -> Option<f64> {
        let i = self.metrics.iter().position(|&m| m == a)?;
        let j = self.metrics.iter().position(|&m| m == b)?;
        self.values[i * self.metrics.len() + j]
    }
}

/// Pairwise-complete Pearson correlations between metric columns. The
/// diagonal is 1 for every metric with at least 3 finite values.
pub fn correlation_matrix(records: &[BenchRecord], metrics: &[Metric]) -> CorrelationMatrix {
    let columns: Vec<Vec<Option<f64>>> = metrics
        .iter()
        .map(|&m| records.iter().map(|r| r.metrics.get(m)).collect())
        .collect();
    let k = metrics.len();
    let mut values = vec![None; k * k];
    for i in 0..k {
        let finite = columns[i]
            .iter()
            .flatten()
            .filter(|v| v.is_finite())
            .count();
        values[i * k + i] = (finite >= 3).then_some(1.0);
        for j in i + 1..k {
            let r = pearson(&columns[i], &columns[j]);
            values[i * k + j] = r;
            values[j * k + i] = r;
        }
    }
    CorrelationMatrix {
        metrics: metrics.to_vec(),
        values,
    }
}
