use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::metrics::MetricReport;
use crate::registry::Metric;

use super::BenchRecord;

/// Columns before the 21 metric columns. An `error` column follows the
/// metrics.
pub const CSV_FIXED_COLUMNS: [&str; 8] = [
    "graph_id",
    "generator",
    "n",
    "m",
    "algorithm",
    "seed",
    "time_ms",
    "fallback",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CsvOptions {
    /// Write `0` for every `time_ms` so runs can be compared byte for byte.
    pub mask_time: bool,
}

fn header() -> Vec<&'static str> {
    let mut h: Vec<&str> = CSV_FIXED_COLUMNS.to_vec();
    h.extend(Metric::ALL.iter().map(|m| m.abbreviation()));
    h.push("error");
    h
}

/// Shortest representation that reads back to the same value.
fn number(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else {
        format!("{v}")
    }
}

pub fn write_csv<W: Write>(out: W, records: &[BenchRecord], options: CsvOptions) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header())?;
    for r in records {
        let mut row = vec![
            r.graph_id.clone(),
            r.generator.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.algorithm.to_string(),
            r.seed.to_string(),
            if options.mask_time {
                "0".into()
            } else {
                number(r.time_ms)
            },
            r.fallback.to_string(),
        ];
        row.extend(
            r.metrics
                .iter()
                .map(|(_, v)| v.map(number).unwrap_or_default()),
        );
        row.push(r.error.clone().unwrap_or_default());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let expected = header();
    let found: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if found != expected {
        return Err(Error::invalid(
            "CSV header",
            format!("expected {}", expected.join(",")),
        ));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let field = |k: usize| row.get(k).unwrap_or("");
        let bad = |col: &str, v: &str| {
            Error::invalid(format!("CSV line {line}"), format!("invalid {col} {v:?}"))
        };
        let parse_f = |k: usize, col: &str| -> Result<f64> {
            let v = field(k);
            if v == "inf" {
                return Ok(f64::INFINITY);
            }
            v.parse::<f64>().map_err(|_| bad(col, v))
        };
        let mut metrics = MetricReport::empty();
        for (j, m) in Metric::ALL.iter().enumerate() {
            let k = CSV_FIXED_COLUMNS.len() + j;
            if !field(k).is_empty() {
                metrics.set(*m, Some(parse_f(k, m.abbreviation())?));
            }
        }
        let error = field(CSV_FIXED_COLUMNS.len() + Metric::COUNT);
        out.push(BenchRecord {
            graph_id: field(0).to_string(),
            generator: field(1).to_string(),
            n: field(2).parse().map_err(|_| bad("n", field(2)))?,
            m: field(3).parse().map_err(|_| bad("m", field(3)))?,
            algorithm: field(4).parse().map_err(|_| bad("algorithm", field(4)))?,
            seed: field(5).parse().map_err(|_| bad("seed", field(5)))?,
            time_ms: parse_f(6, "time_ms")?,
            fallback: field(7).parse().map_err(|_| bad("fallback", field(7)))?,
            metrics,
            error: (!error.is_empty()).then(|| error.to_string()),
        });
    }
    Ok(out)
}
