//! Reading and writing graphs: a JSON document format and a Graphviz DOT
//! subset.

mod dot;
mod json;

pub use dot::read_dot;
pub use json::{pair_up, read_json, read_paired_json, write_json};

use std::path::Path;

use crate::error::Result;
use crate::model::{Embedding, SizedGraph};

/// Read a graph file, choosing the format from the extension (`.dot` and
/// `.gv` are DOT, anything else JSON).
pub fn read_graph_file(path: impl AsRef<Path>) -> Result<(SizedGraph, Option<Embedding>)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    if is_dot(path) {
        let (g, e) = read_dot(&text)?;
        Ok((g, Some(e)))
    } else {
        read_json(&text)
    }
}

pub fn write_json_file(
    path: impl AsRef<Path>,
    graph: &SizedGraph,
    embedding: Option<&Embedding>,
) -> Result<()> {
    std::fs::write(path, write_json(graph, embedding)?)?;
    Ok(())
}

fn is_dot(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("dot") || e.eq_ignore_ascii_case("gv"))
}
