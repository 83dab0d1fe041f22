//! Node overlap removal for graph layouts whose nodes are sized rectangles.
//!
//! The crate provides
//!
//! * a graph/embedding model with JSON and DOT input ([`model`], [`io`]),
//! * the shared geometry ([`geometry`]),
//! * eight overlap removal algorithms behind [`algorithms::adjust`],
//! * a catalog of 21 quality metrics ([`metrics`], [`registry`]),
//! * synthetic corpora with a baseline force-directed layout ([`corpus`]),
//! * a benchmark runner with aggregation, correlation and SVG output
//!   ([`bench`]).

pub mod algorithms;
pub mod bench;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod io;
pub mod metrics;
pub mod model;
pub mod registry;

pub use algorithms::{adjust, AdjustOutcome, AdjustParams, Algorithm};
pub use error::{Error, Result};
pub use model::{AdjustmentPair, Embedding, Node, Point, Size, SizedGraph};
pub use registry::{Metric, MetricClass, MetricDescriptor};
