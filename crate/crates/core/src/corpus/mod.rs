//! Synthetic graph corpus: four random graph models, node sizing rules and
//! a baseline initial layout.

mod generators;
mod layout;

pub use layout::{initial_layout, DEFAULT_LAYOUT_ITERATIONS};

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Embedding, Size, SizedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphModel {
    Random,
    Tree,
    SmallWorld,
    ScaleFree,
}

impl GraphModel {
    pub const ALL: [GraphModel; 4] = [
        GraphModel::Random,
        GraphModel::Tree,
        GraphModel::SmallWorld,
        GraphModel::ScaleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphModel::Random => "random",
            GraphModel::Tree => "tree",
            GraphModel::SmallWorld => "small_world",
            GraphModel::ScaleFree => "scale_free",
        }
    }
}

impl fmt::Display for GraphModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        GraphModel::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown graph model {s:?}")))
    }
}

/// How node rectangles are sized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum NodeSizeRule {
    Uniform {
        w: f64,
        h: f64,
    },
    /// Height `base + slope * degree`, width twice the height.
    DegreeProportional {
        base: f64,
        slope: f64,
    },
}

impl Default for NodeSizeRule {
    fn default() -> Self {
        NodeSizeRule::Uniform { w: 4.0, h: 2.0 }
    }
}

impl NodeSizeRule {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            NodeSizeRule::Uniform { w, h } => w.is_finite() && h.is_finite() && w > 0.0 && h > 0.0,
            NodeSizeRule::DegreeProportional { base, slope } => {
                base.is_finite() && slope.is_finite() && base > 0.0 && slope >= 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("invalid node size rule {self:?}")))
        }
    }

    pub fn sizes(&self, degrees: &[usize]) -> Vec<Size> {
        degrees
            .iter()
            .map(|&d| match *self {
                NodeSizeRule::Uniform { w, h } => Size::new(w, h),
                NodeSizeRule::DegreeProportional { base, slope } => {
                    let f = base + slope * d as f64;
                    Size::new(2.0 * f, f)
                }
            })
            .collect()
    }
}

/// Generate a graph with the default 4 x 2 node size.
pub fn generate(model: GraphModel, n: usize, seed: u64) -> Result<SizedGraph> {
    generate_with(
        model,
        n,
        seed,
        &NodeSizeRule::default(),
        format!("{model}-n{n}-seed{seed}"),
    )
}

pub fn generate_with(
    model: GraphModel,
    n: usize,
    seed: u64,
    rule: &NodeSizeRule,
    graph_id: impl Into<String>,
) -> Result<SizedGraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "a generated graph needs at least 2 nodes, got {n}"
        )));
    }
    rule.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = match model {
        GraphModel::Random => generators::random(n, &mut rng),
        GraphModel::Tree => generators::tree(n, &mut rng),
        GraphModel::SmallWorld => generators::small_world(n, &mut rng),
        GraphModel::ScaleFree => generators::scale_free(n, &mut rng),
    };
    let mut degrees = vec![0; n];
    for &(u, v) in &edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    SizedGraph::from_indexed(graph_id, &rule.sizes(&degrees), edges)
}

/// SplitMix64 folded over `parts`; used to derive independent per-graph
/// seeds from one base seed.
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut h = 0x9E37_79B9_7F4A_7C15_u64;
    for &p in parts {
        let mut z = h ^ p.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        h = z ^ (z >> 31);
    }
    h
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub models: Vec<GraphModel>,
    pub sizes: Vec<usize>,
    pub seeds_per_size: usize,
    #[serde(default)]
    pub node_size: NodeSizeRule,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_layout_iterations")]
    pub layout_iterations: usize,
}

fn default_layout_iterations() -> usize {
    DEFAULT_LAYOUT_ITERATIONS
}

/// One graph of a corpus, identified before anything is generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub graph_id: String,
    pub model: GraphModel,
    pub n: usize,
    pub replicate: usize,
    pub seed: u64,
}

impl CorpusSpec {
    /// 4 models, 21 sizes from 10 to 1000 in geometric progression,
    /// 10 seeds each: 840 graphs.
    pub fn full_scale() -> Self {
        let mut sizes: Vec<usize> = (0..=20)
            .map(|i| (10.0 * 100f64.powf(i as f64 / 20.0)).round() as usize)
            .collect();
        sizes.dedup();
        Self {
            models: GraphModel::ALL.to_vec(),
            sizes,
            seeds_per_size: 10,
            node_size: NodeSizeRule::default(),
            base_seed: 0,
            layout_iterations: DEFAULT_LAYOUT_ITERATIONS,
        }
    }

    /// Same construction on a smaller grid: 4 models, 7 sizes, 3 seeds.
    pub fn desk_scale() -> Self {
        Self {
            sizes: vec![10, 18, 32, 56, 100, 178, 316],
            seeds_per_size: 3,
            ..Self::full_scale()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.models.is_empty() {
            return Err(Error::Config("corpus needs at least one model".into()));
        }
        if self.sizes.is_empty() {
            return Err(Error::Config("corpus needs at least one size".into()));
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| !(2..=100_000).contains(&n)) {
            return Err(Error::Config(format!(
                "graph size {n} is outside [2, 100000]"
            )));
        }
        if self.seeds_per_size == 0 {
            return Err(Error::Config("seeds_per_size must be positive".into()));
        }
        if self.layout_iterations == 0 {
            return Err(Error::Config("layout_iterations must be positive".into()));
        }
        self.node_size.validate()
    }

    pub fn graph_count(&self) -> usize {
        self.models.len() * self.sizes.len() * self.seeds_per_size
    }

    /// Every graph of the corpus, sorted by graph id.
    pub fn entries(&self) -> Vec<CorpusEntry> {
        let mut out = Vec::with_capacity(self.graph_count());
        for &model in &self.models {
            for &n in &self.sizes {
                for rep in 0..self.seeds_per_size {
                    out.push(CorpusEntry {
                        graph_id: format!("{model}-n{n:05}-s{rep:03}"),
                        model,
                        n,
                        replicate: rep,
                        seed: mix_seed(&[self.base_seed, model as u64, n as u64, rep as u64]),
                    });
                }
            }
        }
        out.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
        out
    }

    /// Generate the graph of `entry` and lay it out.
    pub fn build(&self, entry: &CorpusEntry) -> Result<(SizedGraph, Embedding)> {
        let graph = generate_with(
            entry.model,
            entry.n,
            entry.seed,
            &self.node_size,
            entry.graph_id.clone(),
        )?;
        let layout = initial_layout(&graph, mix_seed(&[entry.seed, 1]), self.layout_iterations);
        Ok((graph, layout))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        let full = CorpusSpec::full_scale();
        assert_eq!(full.sizes.len(), 21);
        assert_eq!((full.sizes[0], full.sizes[20]), (10, 1000));
        assert_eq!(full.graph_count(), 840);
        assert_eq!(full.entries().len(), 840);
        let desk = CorpusSpec::desk_scale();
        assert_eq!(desk.graph_count(), 84);
        // Quarter-decade steps from 10 to 316.
        let quarter: Vec<usize> = (0..7)
            .map(|i| (10.0 * 10f64.powf(i as f64 / 4.0)).round() as usize)
            .collect();
        assert_eq!(desk.sizes, quarter);
    }

    #[test]
    fn entries_have_unique_ids_and_seeds() {
        let e = CorpusSpec::full_scale().entries();
        let ids: std::collections::HashSet<_> = e.iter().map(|x| &x.graph_id).collect();
        let seeds: std::collections::HashSet<_> = e.iter().map(|x| x.seed).collect();
        assert_eq!(ids.len(), 840);
        assert_eq!(seeds.len(), 840);
    }

    #[test]
    fn worked_examples() {
        let t = generate(GraphModel::Tree, 10, 7).unwrap();
        assert_eq!((t.n(), t.m()), (10, 9));
        let r = generate(GraphModel::Random, 10, 7).unwrap();
        assert_eq!((r.n(), r.m()), (10, 20));
        assert!(generate(GraphModel::Random, 1, 7).is_err());
    }

    #[test]
    fn degree_proportional_sizes() {
        let rule = NodeSizeRule::DegreeProportional {
            base: 1.0,
            slope: 0.5,
        };
        assert_eq!(
            rule.sizes(&[0, 2]),
            vec![Size::new(2.0, 1.0), Size::new(4.0, 2.0)]
        );
    }

    #[test]
    fn spec_serializes() {
        let spec = CorpusSpec::desk_scale();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<CorpusSpec>(&json).unwrap(), spec);
        let toml_text = toml::to_string(&spec).unwrap();
        assert_eq!(toml::from_str::<CorpusSpec>(&toml_text).unwrap(), spec);
    }
}
