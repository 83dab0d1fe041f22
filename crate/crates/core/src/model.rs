//! Graph and embedding data model.
//!
//! Nodes are kept sorted by id. The position of a node in that order is its
//! dense index, and every algorithm in the crate iterates in dense-index
//! order so that results only depend on the input and the seed.

use std::collections::{BTreeSet, HashMap};
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// A 2D point or vector in model units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

/// Width and height of a node rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Size {
    pub w: f64,
    pub h: f64,
}

impl Size {
    pub const fn new(w: f64, h: f64) -> Self {
        Self { w, h }
    }

    /// Grow both dimensions by `amount`.
    pub fn inflate(self, amount: f64) -> Self {
        Self::new(self.w + amount, self.h + amount)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: String,
    pub width: f64,
    pub height: f64,
}

impl Node {
    pub fn new(id: impl Into<String>, width: f64, height: f64) -> Self {
        Self {
            id: id.into(),
            width,
            height,
        }
    }

    pub fn size(&self) -> Size {
        Size::new(self.width, self.height)
    }
}

/// An undirected simple graph whose nodes are sized rectangles.
#[derive(Debug, Clone, PartialEq)]
pub struct SizedGraph {
    graph_id: String,
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    index: HashMap<String, usize>,
}

impl SizedGraph {
    /// Build and validate a graph. Nodes may come in any order; they are
    /// re-sorted by id. Self-loops, duplicate edges, dangling endpoints,
    /// duplicate ids and non-positive sizes are rejected.
    pub fn new(
        graph_id: impl Into<String>,
        mut nodes: Vec<Node>,
        edges: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self> {
        for node in &nodes {
            validate_size(node)?;
        }
        nodes.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in nodes.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::invalid(
                    format!("node {:?}", pair[0].id),
                    "duplicate node id",
                ));
            }
        }
        let index: HashMap<String, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.id.clone(), i))
            .collect();

        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            let locus = || format!("edge [{a:?}, {b:?}]");
            let ia = *index
                .get(&a)
                .ok_or_else(|| Error::invalid(locus(), format!("unknown node {a:?}")))?;
            let ib = *index
                .get(&b)
                .ok_or_else(|| Error::invalid(locus(), format!("unknown node {b:?}")))?;
            if ia == ib {
                return Err(Error::invalid(locus(), "self-loop"));
            }
            if !seen.insert((ia.min(ib), ia.max(ib))) {
                return Err(Error::invalid(locus(), "duplicate edge"));
            }
        }

        Ok(Self {
            graph_id: graph_id.into(),
            nodes,
            edges: seen.into_iter().collect(),
            index,
        })
    }

    /// Build a graph from dense-indexed data. Ids are generated as
    /// zero-padded integers so that id order equals index order. Duplicate
    /// and reversed edges are collapsed.
    pub fn from_indexed(
        graph_id: impl Into<String>,
        sizes: &[Size],
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let width = sizes.len().saturating_sub(1).to_string().len();
        let nodes = sizes
            .iter()
            .enumerate()
            .map(|(i, s)| Node::new(format!("{i:0width$}"), s.w, s.h))
            .collect::<Vec<_>>();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= sizes.len() || b >= sizes.len() {
                return Err(Error::invalid(
                    format!("edge ({a}, {b})"),
                    "endpoint out of range",
                ));
            }
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        }
        let edges = set
            .into_iter()
            .map(|(a, b)| (nodes[a].id.clone(), nodes[b].id.clone()))
            .collect::<Vec<_>>();
        Self::new(graph_id, nodes, edges)
    }

    pub fn graph_id(&self) -> &str {
        &self.graph_id
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Edges as dense-index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn sizes(&self) -> Vec<Size> {
        self.nodes.iter().map(Node::size).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Copy of the graph with different node sizes (same ids and edges).
    pub fn with_sizes(&self, sizes: &[Size]) -> Result<Self> {
        if sizes.len() != self.n() {
            return Err(Error::EmbeddingSize {
                expected: self.n(),
                found: sizes.len(),
            });
        }
        let mut out = self.clone();
        for (node, s) in out.nodes.iter_mut().zip(sizes) {
            node.width = s.w;
            node.height = s.h;
            validate_size(node)?;
        }
        Ok(out)
    }
}

fn validate_size(node: &Node) -> Result<()> {
    let ok = |v: f64| v.is_finite() && v > 0.0;
    if !ok(node.width) || !ok(node.height) {
        return Err(Error::invalid(
            format!("node {:?}", node.id),
            format!(
                "width and height must be positive (got {} x {})",
                node.width, node.height
            ),
        ));
    }
    Ok(())
}

/// Center positions for every node of a graph, indexed densely.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    positions: Vec<Point>,
}

impl Embedding {
    pub fn new(graph: &SizedGraph, positions: Vec<Point>) -> Result<Self> {
        if positions.len() != graph.n() {
            return Err(Error::EmbeddingSize {
                expected: graph.n(),
                found: positions.len(),
            });
        }
        if let Some(i) = positions.iter().position(|p| !p.is_finite()) {
            return Err(Error::invalid(
                format!("node {:?}", graph.nodes()[i].id),
                "non-finite coordinate",
            ));
        }
        Ok(Self { positions })
    }

    pub fn from_map(graph: &SizedGraph, map: &HashMap<String, Point>) -> Result<Self> {
        let positions = graph
            .nodes()
            .iter()
            .map(|n| {
                map.get(&n.id)
                    .copied()
                    .ok_or_else(|| Error::MissingPosition(n.id.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        if map.len() != graph.n() {
            let extra = map
                .keys()
                .find(|k| graph.index_of(k).is_none())
                .cloned()
                .unwrap_or_default();
            return Err(Error::invalid(
                format!("position {extra:?}"),
                "no such node in the graph",
            ));
        }
        Self::new(graph, positions)
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn into_positions(self) -> Vec<Point> {
        self.positions
    }

    pub fn get(&self, i: usize) -> Point {
        self.positions[i]
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn to_map(&self, graph: &SizedGraph) -> HashMap<String, Point> {
        graph
            .nodes()
            .iter()
            .zip(&self.positions)
            .map(|(n, p)| (n.id.clone(), *p))
            .collect()
    }
}

/// The unit every metric consumes: one graph, its initial layout and the
/// overlap-free layout produced from it.
#[derive(Debug, Clone, Copy)]
pub struct AdjustmentPair<'a> {
    pub graph: &'a SizedGraph,
    pub initial: &'a Embedding,
    pub adjusted: &'a Embedding,
}

impl<'a> AdjustmentPair<'a> {
    pub fn new(
        graph: &'a SizedGraph,
        initial: &'a Embedding,
        adjusted: &'a Embedding,
    ) -> Result<Self> {
        for e in [initial, adjusted] {
            if e.len() != graph.n() {
                return Err(Error::EmbeddingSize {
                    expected: graph.n(),
                    found: e.len(),
                });
            }
        }
        Ok(Self {
            graph,
            initial,
            adjusted,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}
