use std::path::Path;

use serde::Deserialize;

use crate::algorithms::Algorithm;
use crate::corpus::{CorpusSpec, GraphModel, NodeSizeRule};
use crate::error::{Error, Result};
use crate::registry::Metric;

/// Everything a benchmark run needs: the corpus, the algorithms to compare
/// and the metrics to record.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub corpus: CorpusSpec,
    pub algorithms: Vec<Algorithm>,
    pub metrics: Vec<Metric>,
    pub padding: f64,
    pub max_outer_iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    Desk,
    Full,
}

impl Preset {
    pub fn corpus(self) -> CorpusSpec {
        match self {
            Preset::Desk => CorpusSpec::desk_scale(),
            Preset::Full => CorpusSpec::full_scale(),
        }
    }
}

/// On-disk form. Every field is optional; corpus fields override the preset
/// (desk scale when no preset is named).
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    preset: Option<Preset>,
    models: Option<Vec<String>>,
    sizes: Option<Vec<usize>>,
    seeds_per_size: Option<usize>,
    base_seed: Option<u64>,
    layout_iterations: Option<usize>,
    node_size: Option<NodeSizeRule>,
    algorithms: Option<Vec<String>>,
    metrics: Option<MetricSelection>,
    padding: Option<f64>,
    max_outer_iterations: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MetricSelection {
    /// `"all"` or `"selected"`.
    Named(String),
    List(Vec<String>),
}

impl BenchConfig {
    pub fn from_preset(preset: Preset) -> Self {
        Self {
            corpus: preset.corpus(),
            algorithms: Algorithm::ALL.to_vec(),
            metrics: Metric::SELECTED.to_vec(),
            padding: 0.0,
            max_outer_iterations: 1000,
        }
    }

    /// Parse TOML, or JSON when the text starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?
        } else {
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?
        };
        Self::from_raw(raw)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    fn from_raw(raw: RawConfig) -> Result<Self> {
        let mut cfg = Self::from_preset(raw.preset.unwrap_or(Preset::Desk));
        let corpus = &mut cfg.corpus;
        if let Some(models) = raw.models {
            corpus.models = models
                .iter()
                .map(|m| m.parse::<GraphModel>())
                .collect::<Result<_>>()
                .map_err(config)?;
        }
        if let Some(sizes) = raw.sizes {
            corpus.sizes = sizes;
        }
        if let Some(s) = raw.seeds_per_size {
            corpus.seeds_per_size = s;
        }
        if let Some(s) = raw.base_seed {
            corpus.base_seed = s;
        }
        if let Some(i) = raw.layout_iterations {
            corpus.layout_iterations = i;
        }
        if let Some(rule) = raw.node_size {
            corpus.node_size = rule;
        }
        if let Some(algs) = raw.algorithms {
            cfg.algorithms = algs
                .iter()
                .map(|a| a.parse::<Algorithm>())
                .collect::<Result<_>>()
                .map_err(config)?;
        }
        if let Some(sel) = raw.metrics {
            cfg.metrics = match sel {
                MetricSelection::Named(s) if s == "all" => Metric::ALL.to_vec(),
                MetricSelection::Named(s) if s == "selected" => Metric::SELECTED.to_vec(),
                MetricSelection::Named(s) => {
                    return Err(Error::Config(format!(
                        "metrics must be \"all\", \"selected\" or a list, got {s:?}"
                    )))
                }
                MetricSelection::List(list) => list
                    .iter()
                    .map(|m| m.parse::<Metric>())
                    .collect::<Result<_>>()
                    .map_err(config)?,
            };
        }
        if let Some(p) = raw.padding {
            cfg.padding = p;
        }
        if let Some(m) = raw.max_outer_iterations {
            cfg.max_outer_iterations = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.corpus.validate()?;
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        if self.metrics.is_empty() {
            return Err(Error::Config("no metrics selected".into()));
        }
        if !(self.padding.is_finite() && self.padding >= 0.0) {
            return Err(Error::Config(format!(
                "padding must be non-negative, got {}",
                self.padding
            )));
        }
        if self.max_outer_iterations == 0 {
            return Err(Error::Config(
                "max_outer_iterations must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Number of graphs and of (graph, algorithm) runs.
    pub fn plan(&self) -> (usize, usize) {
        let graphs = self.corpus.graph_count();
        (graphs, graphs * self.algorithms.len())
    }
}

fn config(e: Error) -> Error {
    match e {
        Error::InvalidArgument(m) => Error::Config(m),
        other => other,
    }
}
