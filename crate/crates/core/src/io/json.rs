use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Embedding, Node, Point, SizedGraph};

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    #[serde(default)]
    graph_id: String,
    nodes: Vec<NodeDoc>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    id: String,
    w: f64,
    h: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<f64>,
}

#[derive(Debug, Deserialize)]
struct PairDoc {
    initial: GraphDoc,
    adjusted: GraphDoc,
}

/// Parse a graph document. The embedding is present when every node
/// carries `x` and `y`.
pub fn read_json(text: &str) -> Result<(SizedGraph, Option<Embedding>)> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    from_doc(doc)
}

fn from_doc(doc: GraphDoc) -> Result<(SizedGraph, Option<Embedding>)> {
    let mut positions = HashMap::with_capacity(doc.nodes.len());
    let mut missing = None;
    for node in &doc.nodes {
        match (node.x, node.y) {
            (Some(x), Some(y)) => {
                if !(x.is_finite() && y.is_finite()) {
                    return Err(Error::invalid(
                        format!("node {:?}", node.id),
                        "position must be finite",
                    ));
                }
                positions.insert(node.id.clone(), Point::new(x, y));
            }
            (None, None) => missing = missing.or(Some(node.id.clone())),
            _ => {
                return Err(Error::invalid(
                    format!("node {:?}", node.id),
                    "x and y must be given together",
                ))
            }
        }
    }
    if let (Some(id), false) = (&missing, positions.is_empty()) {
        return Err(Error::invalid(
            format!("node {id:?}"),
            "has no position while other nodes do",
        ));
    }
    let nodes = doc
        .nodes
        .iter()
        .map(|n| Node::new(n.id.clone(), n.w, n.h))
        .collect();
    let graph = SizedGraph::new(doc.graph_id, nodes, doc.edges)?;
    let embedding = if positions.is_empty() && graph.n() > 0 {
        None
    } else {
        Some(Embedding::from_map(&graph, &positions)?)
    };
    Ok((graph, embedding))
}

/// Canonical document: nodes in id order, edges sorted, positions written
/// when an embedding is given.
pub fn write_json(graph: &SizedGraph, embedding: Option<&Embedding>) -> Result<String> {
    if let Some(e) = embedding {
        if e.len() != graph.n() {
            return Err(Error::EmbeddingSize {
                expected: graph.n(),
                found: e.len(),
            });
        }
    }
    let nodes = graph
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let p = embedding.map(|e| e.get(i));
            NodeDoc {
                id: n.id.clone(),
                w: n.width,
                h: n.height,
                x: p.map(|p| p.x),
                y: p.map(|p| p.y),
            }
        })
        .collect();
    let edges = graph
        .edges()
        .iter()
        .map(|&(u, v)| (graph.nodes()[u].id.clone(), graph.nodes()[v].id.clone()))
        .collect();
    let doc = GraphDoc {
        graph_id: graph.graph_id().to_string(),
        nodes,
        edges,
    };
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

/// Parse `{"initial": <graph>, "adjusted": <graph>}`. Both sides must
/// describe the same graph and carry positions.
pub fn read_paired_json(text: &str) -> Result<(SizedGraph, Embedding, Embedding)> {
    let doc: PairDoc = serde_json::from_str(text)?;
    let (g0, e0) = from_doc(doc.initial)?;
    let (g1, e1) = from_doc(doc.adjusted)?;
    pair_up(g0, e0, g1, e1)
}

/// Check that two parsed documents describe one graph with two embeddings.
pub fn pair_up(
    initial_graph: SizedGraph,
    initial: Option<Embedding>,
    adjusted_graph: SizedGraph,
    adjusted: Option<Embedding>,
) -> Result<(SizedGraph, Embedding, Embedding)> {
    if initial_graph.nodes() != adjusted_graph.nodes() {
        return Err(Error::invalid(
            "adjusted",
            "node ids or sizes differ from the initial graph",
        ));
    }
    if initial_graph.edges() != adjusted_graph.edges() {
        return Err(Error::invalid(
            "adjusted",
            "edges differ from the initial graph",
        ));
    }
    let first_id = || {
        initial_graph
            .nodes()
            .first()
            .map(|n| n.id.clone())
            .unwrap_or_default()
    };
    let initial = initial.ok_or_else(|| Error::MissingPosition(first_id()))?;
    let adjusted = adjusted.ok_or_else(|| Error::MissingPosition(first_id()))?;
    Ok((initial_graph, initial, adjusted))
}
