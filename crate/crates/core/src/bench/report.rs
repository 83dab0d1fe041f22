//! Text and CSV renderings of aggregate tables and correlation matrices.

use std::fmt::Write;

use super::stats::{AggregateTable, CorrelationMatrix, Summary};

fn cell(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.4}"),
        None => "-".into(),
    }
}

fn summary_cells(s: &Summary) -> [String; 5] {
    [
        cell(s.q1),
        cell(s.median),
        cell(s.q3),
        cell(s.mean),
        s.undefined_count.to_string(),
    ]
}

/// Whitespace-aligned table, one block per metric.
pub fn aggregate_text(table: &AggregateTable) -> String {
    let mut out = String::new();
    let header = [
        "algorithm",
        "n",
        "runs",
        "q1",
        "median",
        "q3",
        "mean",
        "undef",
    ];
    let mut blocks: Vec<(String, Vec<Vec<String>>)> = Vec::new();
    let row_prefix = |r: &super::AggregateRow| {
        vec![
            r.algorithm.to_string(),
            r.n.map(|n| n.to_string()).unwrap_or_else(|| "all".into()),
            r.records.to_string(),
        ]
    };
    blocks.push((
        "time_ms".into(),
        table
            .rows
            .iter()
            .map(|r| {
                let mut v = row_prefix(r);
                v.extend(summary_cells(&r.time_ms));
                v
            })
            .collect(),
    ));
    for (k, m) in table.metrics.iter().enumerate() {
        blocks.push((
            m.to_string(),
            table
                .rows
                .iter()
                .map(|r| {
                    let mut v = row_prefix(r);
                    v.extend(summary_cells(&r.metrics[k].1));
                    v
                })
                .collect(),
        ));
    }
    for (title, rows) in blocks {
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let _ = writeln!(out, "{title}");
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (c, w))| {
                    if i == 0 {
                        format!("{c:<w$}")
                    } else {
                        format!("{c:>w$}")
                    }
                })
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "  {}", line(header.to_vec()));
        for row in &rows {
            let _ = writeln!(out, "  {}", line(row.iter().map(String::as_str).collect()));
        }
        out.push('\n');
    }
    out
}

/// Long format: one line per (group, quantity).
pub fn aggregate_csv(table: &AggregateTable) -> String {
    let mut out = String::from("algorithm,n,quantity,runs,q1,median,q3,mean,undefined\n");
    let num = |v: Option<f64>| v.map(|x| format!("{x}")).unwrap_or_default();
    for r in &table.rows {
        let n = r.n.map(|n| n.to_string()).unwrap_or_default();
        let items = std::iter::once(("time_ms".to_string(), &r.time_ms))
            .chain(r.metrics.iter().map(|(m, s)| (m.to_string(), s)));
        for (name, s) in items {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.algorithm,
                n,
                name,
                r.records,
                num(s.q1),
                num(s.median),
                num(s.q3),
                num(s.mean),
                s.undefined_count
            );
        }
    }
    out
}

pub fn correlation_text(matrix: &CorrelationMatrix) -> String {
    let names: Vec<String> = matrix.metrics.iter().map(|m| m.to_string()).collect();
    let w = names.iter().map(String::len).max().unwrap_or(0).max(7);
    let k = names.len();
    let mut out = format!("{:w$}", "");
    for name in &names {
        let _ = write!(out, "  {name:>w$}");
    }
    out.push('\n');
    for (i, name) in names.iter().enumerate() {
        let _ = write!(out, "{name:w$}");
        for j in 0..k {
            let _ = write!(out, "  {:>w$}", cell(matrix.values[i * k + j]));
        }
        out.push('\n');
    }
    out
}

pub fn correlation_csv(matrix: &CorrelationMatrix) -> String {
    let k = matrix.metrics.len();
    let mut out = String::from("metric");
    for m in &matrix.metrics {
        let _ = write!(out, ",{m}");
    }
    out.push('\n');
    for i in 0..k {
        out.push_str(matrix.metrics[i].abbreviation());
        for j in 0..k {
            let _ = write!(
                out,
                ",{}",
                matrix.values[i * k + j]
                    .map(|x| format!("{x}"))
                    .unwrap_or_default()
            );
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{aggregate, correlation_matrix, BenchRecord, GroupBy};
    use super::*;
    use crate::algorithms::Algorithm;
    use crate::metrics::MetricReport;
    use crate::registry::Metric;

    fn records() -> Vec<BenchRecord> {
        (0..4)
            .map(|i| {
                let mut metrics = MetricReport::empty();
                metrics.set(Metric::OoNni, Some(i as f64));
                metrics.set(Metric::SpChA, Some(2.0 * i as f64));
                BenchRecord {
                    graph_id: format!("g{i}"),
                    generator: "tree".into(),
                    n: 10,
                    m: 9,
                    algorithm: Algorithm::Vpsc,
                    seed: 0,
                    time_ms: 1.0,
                    fallback: false,
                    metrics,
                    error: None,
                }
            })
            .collect()
    }

    #[test]
    fn renders() {
        let metrics = [Metric::OoNni, Metric::SpChA];
        let t = aggregate(&records(), GroupBy::Algorithm, &metrics).unwrap();
        let text = aggregate_text(&t);
        assert!(text.contains("oo_nni") && text.contains("1.5000"));
        let csv = aggregate_csv(&t);
        assert_eq!(csv.lines().count(), 1 + 3);
        assert!(csv.contains("vpsc,,oo_nni,4,0.75,1.5,2.25,1.5,0"));
        let c = correlation_matrix(&records(), &metrics);
        assert!(correlation_text(&c).contains("1.0000"));
        assert!(correlation_csv(&c)
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("oo_nni,1,0.99999"));
    }
}
