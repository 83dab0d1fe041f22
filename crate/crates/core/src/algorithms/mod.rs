//! Node overlap removal algorithms.
//!
//! Every algorithm is reached through [`adjust`], which handles the shared
//! contract:
//!
//! * an input that is already overlap-free is returned unchanged;
//! * coincident centers are separated before the algorithm runs;
//! * the algorithm works on node sizes inflated by `2 * padding + epsilon`,
//!   so rounding never leaves two nodes overlapping by a hair;
//! * if overlaps remain when the algorithm stops (iteration cap reached),
//!   a uniform scaling pass removes them and the outcome is flagged.

mod fta;
mod gtree;
mod pfs;
mod prism;
mod rwordle;
mod scaling;
mod stress;
mod vpsc;

pub use vpsc::{solve_separation, SeparationConstraint};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::geometry::{count_overlapping_pairs, separate_coincident};
use crate::model::{Embedding, Point, Size, SizedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Scaling,
    Pfs,
    PfsPrime,
    Fta,
    Vpsc,
    Prism,
    RwordleL,
    Gtree,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Scaling,
        Algorithm::Pfs,
        Algorithm::PfsPrime,
        Algorithm::Fta,
        Algorithm::Vpsc,
        Algorithm::Prism,
        Algorithm::RwordleL,
        Algorithm::Gtree,
    ];

    /// Stable name used in configs, CSV files and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Scaling => "scaling",
            Algorithm::Pfs => "pfs",
            Algorithm::PfsPrime => "pfs_prime",
            Algorithm::Fta => "fta",
            Algorithm::Vpsc => "vpsc",
            Algorithm::Prism => "prism",
            Algorithm::RwordleL => "rwordle_l",
            Algorithm::Gtree => "gtree",
        }
    }

    /// Whether the algorithm keeps the left/right and above/below relations
    /// of every node pair.
    pub fn preserves_ordering(self) -> bool {
        matches!(
            self,
            Algorithm::Scaling | Algorithm::Pfs | Algorithm::PfsPrime
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjustParams {
    pub algorithm: Algorithm,
    /// Only RWordle-L draws random numbers (for nodes sitting exactly on
    /// the layout center); the others are fully deterministic.
    pub seed: u64,
    pub max_outer_iterations: usize,
    /// Extra clearance around every node; widths and heights grow by
    /// `2 * padding` while adjusting.
    pub padding: f64,
    pub epsilon: f64,
}

impl AdjustParams {
    pub fn new(algorithm: Algorithm) -> Self {
        Self {
            algorithm,
            seed: 0,
            max_outer_iterations: 1000,
            padding: 0.0,
            epsilon: 1e-9,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_padding(mut self, padding: f64) -> Self {
        self.padding = padding;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.padding.is_finite() && self.padding >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "padding must be a non-negative number, got {}",
                self.padding
            )));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.max_outer_iterations == 0 {
            return Err(Error::InvalidArgument(
                "max_outer_iterations must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdjustOutcome {
    pub adjusted: Embedding,
    pub fallback_used: bool,
    pub outer_iterations: usize,
    pub wall_time: Duration,
}

/// Working data handed to each algorithm.
pub(crate) struct Problem<'a> {
    pub positions: Vec<Point>,
    /// Padded and epsilon-inflated sizes, used to size moves.
    pub sizes: &'a [Size],
    /// Padded sizes, used to decide whether overlaps remain.
    pub padded: &'a [Size],
    pub max_iterations: usize,
    pub seed: u64,
}

/// Result of one algorithm run before the shared post-processing.
pub(crate) struct Run {
    pub positions: Vec<Point>,
    pub iterations: usize,
}

pub fn adjust(
    graph: &SizedGraph,
    initial: &Embedding,
    params: &AdjustParams,
) -> Result<AdjustOutcome> {
    params.validate()?;
    if initial.len() != graph.n() {
        return Err(Error::EmbeddingSize {
            expected: graph.n(),
            found: initial.len(),
        });
    }
    let start = Instant::now();
    let padded: Vec<Size> = graph
        .sizes()
        .into_iter()
        .map(|s| s.inflate(2.0 * params.padding))
        .collect();

    if count_overlapping_pairs(initial.positions(), &padded) == 0 {
        return Ok(AdjustOutcome {
            adjusted: initial.clone(),
            fallback_used: false,
            outer_iterations: 0,
            wall_time: start.elapsed(),
        });
    }

    let working: Vec<Size> = padded.iter().map(|s| s.inflate(params.epsilon)).collect();
    let positions = separate_coincident(initial.positions(), &padded)
        .unwrap_or_else(|| initial.positions().to_vec());
    let problem = Problem {
        positions,
        sizes: &working,
        padded: &padded,
        max_iterations: params.max_outer_iterations,
        seed: params.seed,
    };

    let run = match params.algorithm {
        Algorithm::Scaling => scaling::run(problem),
        Algorithm::Pfs => pfs::run(problem, pfs::Variant::Classic),
        Algorithm::PfsPrime => pfs::run(problem, pfs::Variant::Improved),
        Algorithm::Fta => fta::run(problem),
        Algorithm::Vpsc => vpsc::run(problem),
        Algorithm::Prism => prism::run(problem),
        Algorithm::RwordleL => rwordle::run(problem),
        Algorithm::Gtree => gtree::run(problem),
    };

    let mut positions = run.positions;
    let mut fallback_used = false;
    if count_overlapping_pairs(&positions, &padded) > 0 {
        if let Some(separated) = separate_coincident(&positions, &padded) {
            positions = separated;
        }
        let s = scaling::factor(&positions, &working).unwrap_or(1.0);
        positions = scaling::scale_about_center(&positions, &padded, s);
        fallback_used = true;
    }
    let wall_time = start.elapsed();
    Ok(AdjustOutcome {
        adjusted: Embedding::new(graph, positions)?,
        fallback_used,
        outer_iterations: run.iterations,
        wall_time,
    })
}

/// Smallest uniform scaling of the centers that removes every overlap
/// (1 when there is none).
pub fn scaling_factor(graph: &SizedGraph, embedding: &Embedding) -> Result<f64> {
    scaling::factor(embedding.positions(), &graph.sizes())
        .ok_or_else(|| Error::InvalidArgument("two overlapping nodes share the same center".into()))
}
