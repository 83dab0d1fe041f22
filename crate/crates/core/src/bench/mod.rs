//! Benchmark harness: run every algorithm on every graph of a corpus,
//! record timings and metrics, then summarize.

mod config;
mod records;
mod report;
mod stats;
mod svg;

pub use config::{BenchConfig, Preset};
pub use records::{read_csv, write_csv, CsvOptions, CSV_FIXED_COLUMNS};
pub use report::{aggregate_csv, aggregate_text, correlation_csv, correlation_text};
pub use stats::{
    aggregate, correlation_matrix, pearson, quantile, AggregateRow, AggregateTable,
    CorrelationMatrix, GroupBy, Summary,
};
pub use svg::render_svg;

use rayon::prelude::*;

use crate::algorithms::{adjust, AdjustParams, Algorithm};
use crate::corpus::CorpusSpec;
use crate::error::{Error, Result};
use crate::geometry::count_overlaps;
use crate::metrics::{compute_metrics, MetricOptions, MetricReport};
use crate::model::{AdjustmentPair, Embedding, SizedGraph};
use crate::registry::Metric;

/// One (graph, algorithm) run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub graph_id: String,
    pub generator: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Duration of the adjustment call alone.
    pub time_ms: f64,
    pub fallback: bool,
    pub metrics: MetricReport,
    /// Set when the run failed; metrics are then all undefined.
    pub error: Option<String>,
}

/// A graph with its initial layout, ready to be adjusted.
#[derive(Debug, Clone)]
pub struct BenchGraph {
    pub graph: SizedGraph,
    pub initial: Embedding,
    pub generator: String,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub algorithms: Vec<Algorithm>,
    pub metrics: Vec<Metric>,
    pub padding: f64,
    pub max_outer_iterations: usize,
    /// Worker threads; 0 uses all cores.
    pub parallelism: usize,
}

impl RunOptions {
    pub fn from_config(config: &BenchConfig, parallelism: usize) -> Self {
        Self {
            algorithms: config.algorithms.clone(),
            metrics: config.metrics.clone(),
            padding: config.padding,
            max_outer_iterations: config.max_outer_iterations,
            parallelism,
        }
    }
}

fn pool(parallelism: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))
}

/// Generate and lay out every graph of the corpus, in graph-id order.
pub fn corpus_graphs(spec: &CorpusSpec, parallelism: usize) -> Result<Vec<BenchGraph>> {
    spec.validate()?;
    let entries = spec.entries();
    pool(parallelism)?.install(|| {
        entries
            .par_iter()
            .map(|entry| {
                let (graph, initial) = spec.build(entry)?;
                Ok(BenchGraph {
                    graph,
                    initial,
                    generator: entry.model.to_string(),
                    seed: entry.seed,
                })
            })
            .collect()
    })
}

/// Run every selected algorithm on every graph. Records come back sorted by
/// graph id, then algorithm, whatever the parallelism.
pub fn run_benchmark(graphs: &[BenchGraph], options: &RunOptions) -> Result<Vec<BenchRecord>> {
    let jobs: Vec<(usize, Algorithm)> = (0..graphs.len())
        .flat_map(|g| options.algorithms.iter().map(move |&a| (g, a)))
        .collect();
    let mut records: Vec<BenchRecord> = pool(options.parallelism)?.install(|| {
        jobs.par_iter()
            .map(|&(g, a)| run_one(&graphs[g], a, options))
            .collect()
    });
    records.sort_by(|a, b| {
        a.graph_id
            .cmp(&b.graph_id)
            .then(a.algorithm.cmp(&b.algorithm))
    });
    Ok(records)
}

/// Convenience: build the corpus of `config` and benchmark it.
pub fn run_config(config: &BenchConfig, parallelism: usize) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let graphs = corpus_graphs(&config.corpus, parallelism)?;
    run_benchmark(&graphs, &RunOptions::from_config(config, parallelism))
}

fn run_one(input: &BenchGraph, algorithm: Algorithm, options: &RunOptions) -> BenchRecord {
    let mut record = BenchRecord {
        graph_id: input.graph.graph_id().to_string(),
        generator: input.generator.clone(),
        n: input.graph.n(),
        m: input.graph.m(),
        algorithm,
        seed: input.seed,
        time_ms: 0.0,
        fallback: false,
        metrics: MetricReport::empty(),
        error: None,
    };
    if input.graph.n() == 0 {
        record.error = Some(Error::EmptyGraph.to_string());
        return record;
    }
    let params = AdjustParams {
        seed: input.seed,
        max_outer_iterations: options.max_outer_iterations,
        padding: options.padding,
        ..AdjustParams::new(algorithm)
    };
    let outcome = match adjust(&input.graph, &input.initial, &params) {
        Ok(o) => o,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    record.time_ms = outcome.wall_time.as_secs_f64() * 1000.0;
    record.fallback = outcome.fallback_used;

    // Checked here, independently of the algorithm.
    let remaining = count_overlaps(&input.graph, &outcome.adjusted);
    if remaining > 0 {
        record.error = Some(format!("{remaining} overlapping pairs remain"));
        return record;
    }
    let pair = match AdjustmentPair::new(&input.graph, &input.initial, &outcome.adjusted) {
        Ok(p) => p,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    let all = compute_metrics(&pair, &MetricOptions::default());
    for &m in &options.metrics {
        record.metrics.set(m, all.get(m));
    }
    record
}
