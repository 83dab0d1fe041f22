//! Python bindings: graphs, layouts, overlap removal and metrics.
//!
//! Positions cross the boundary as lists of `(x, y)` tuples in the graph's
//! node order (`Graph.node_ids`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use noverlap::corpus::{self, GraphModel, DEFAULT_LAYOUT_ITERATIONS};
use noverlap::geometry::count_overlaps as core_count_overlaps;
use noverlap::io::{read_json, write_json};
use noverlap::metrics::{compute_metrics, MetricOptions};
use noverlap::{
    AdjustParams, AdjustmentPair, Algorithm, Embedding, Metric, Node, Point, SizedGraph,
};

type Positions = Vec<(f64, f64)>;

fn err(e: noverlap::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected graph whose nodes are sized rectangles.
#[pyclass(name = "Graph", module = "pynoverlap", frozen)]
struct PyGraph {
    inner: SizedGraph,
}

#[pymethods]
impl PyGraph {
    /// `nodes` is a list of `(id, width, height)`, `edges` a list of id pairs.
    #[new]
    #[pyo3(signature = (nodes, edges, graph_id = String::new()))]
    fn new(
        nodes: Vec<(String, f64, f64)>,
        edges: Vec<(String, String)>,
        graph_id: String,
    ) -> PyResult<Self> {
        let nodes = nodes
            .into_iter()
            .map(|(id, w, h)| Node::new(id, w, h))
            .collect();
        let inner = SizedGraph::new(graph_id, nodes, edges).map_err(err)?;
        Ok(Self { inner })
    }

    /// Parse a JSON graph document. Returns the graph and its positions
    /// (or `None` when the document has none).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<(Self, Option<Positions>)> {
        let (inner, emb) = read_json(text).map_err(err)?;
        Ok((Self { inner }, emb.map(|e| to_tuples(&e))))
    }

    #[pyo3(signature = (positions = None))]
    fn to_json(&self, positions: Option<Vec<(f64, f64)>>) -> PyResult<String> {
        let emb = positions.map(|p| embedding(&self.inner, p)).transpose()?;
        write_json(&self.inner, emb.as_ref()).map_err(err)
    }

    #[getter]
    fn graph_id(&self) -> &str {
        self.inner.graph_id()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn node_ids(&self) -> Vec<String> {
        self.inner.nodes().iter().map(|n| n.id.clone()).collect()
    }

    #[getter]
    fn sizes(&self) -> Vec<(f64, f64)> {
        self.inner.sizes().iter().map(|s| (s.w, s.h)).collect()
    }

    /// Edges as pairs of node indices, smaller index first.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(id={:?}, n={}, m={})",
            self.inner.graph_id(),
            self.inner.n(),
            self.inner.m()
        )
    }
}

/// Outcome of one overlap removal run.
#[pyclass(name = "AdjustResult", module = "pynoverlap", frozen, get_all)]
struct PyAdjustResult {
    positions: Vec<(f64, f64)>,
    fallback_used: bool,
    outer_iterations: usize,
    wall_time_ms: f64,
}

#[pymethods]
impl PyAdjustResult {
    fn __repr__(&self) -> String {
        format!(
            "AdjustResult(outer_iterations={}, fallback_used={}, wall_time_ms={:.3})",
            self.outer_iterations,
            if self.fallback_used { "True" } else { "False" },
            self.wall_time_ms
        )
    }
}

fn embedding(graph: &SizedGraph, positions: Vec<(f64, f64)>) -> PyResult<Embedding> {
    let pts = positions
        .into_iter()
        .map(|(x, y)| Point::new(x, y))
        .collect();
    Embedding::new(graph, pts).map_err(err)
}

fn to_tuples(e: &Embedding) -> Vec<(f64, f64)> {
    e.positions().iter().map(|p| (p.x, p.y)).collect()
}

/// Generate a graph from one of the corpus models.
#[pyfunction]
#[pyo3(signature = (model, n, seed = 0))]
fn generate(model: &str, n: usize, seed: u64) -> PyResult<PyGraph> {
    let model: GraphModel = model.parse().map_err(err)?;
    let inner = corpus::generate(model, n, seed).map_err(err)?;
    Ok(PyGraph { inner })
}

/// Force-directed initial layout.
#[pyfunction]
#[pyo3(signature = (graph, seed = 0, iterations = DEFAULT_LAYOUT_ITERATIONS))]
fn layout(graph: &PyGraph, seed: u64, iterations: usize) -> PyResult<Vec<(f64, f64)>> {
    if iterations == 0 {
        return Err(PyValueError::new_err("iterations must be positive"));
    }
    Ok(to_tuples(&corpus::initial_layout(
        &graph.inner,
        seed,
        iterations,
    )))
}

/// Remove node overlaps with the named algorithm.
#[pyfunction]
#[pyo3(signature = (graph, positions, algorithm, seed = 0, padding = 0.0, max_iterations = 1000))]
fn adjust(
    py: Python<'_>,
    graph: &PyGraph,
    positions: Vec<(f64, f64)>,
    algorithm: &str,
    seed: u64,
    padding: f64,
    max_iterations: usize,
) -> PyResult<PyAdjustResult> {
    let algorithm: Algorithm = algorithm.parse().map_err(err)?;
    let initial = embedding(&graph.inner, positions)?;
    let params = AdjustParams {
        seed,
        padding,
        max_outer_iterations: max_iterations,
        ..AdjustParams::new(algorithm)
    };
    let out = py
        .detach(|| noverlap::adjust(&graph.inner, &initial, &params))
        .map_err(err)?;
    Ok(PyAdjustResult {
        positions: to_tuples(&out.adjusted),
        fallback_used: out.fallback_used,
        outer_iterations: out.outer_iterations,
        wall_time_ms: out.wall_time.as_secs_f64() * 1000.0,
    })
}

/// Quality metrics of an adjustment, keyed by abbreviation. Undefined
/// values are `None`.
#[pyfunction]
#[pyo3(signature = (graph, initial, adjusted, all_metrics = false))]
fn metrics(
    graph: &PyGraph,
    initial: Vec<(f64, f64)>,
    adjusted: Vec<(f64, f64)>,
    all_metrics: bool,
) -> PyResult<Vec<(String, Option<f64>)>> {
    let a = embedding(&graph.inner, initial)?;
    let b = embedding(&graph.inner, adjusted)?;
    let pair = AdjustmentPair::new(&graph.inner, &a, &b).map_err(err)?;
    let report = compute_metrics(&pair, &MetricOptions::default());
    let chosen: &[Metric] = if all_metrics {
        &Metric::ALL
    } else {
        &Metric::SELECTED
    };
    Ok(chosen
        .iter()
        .map(|&m| (m.abbreviation().to_string(), report.get(m)))
        .collect())
}

/// Number of overlapping node pairs.
#[pyfunction]
fn count_overlaps(graph: &PyGraph, positions: Vec<(f64, f64)>) -> PyResult<usize> {
    let e = embedding(&graph.inner, positions)?;
    Ok(core_count_overlaps(&graph.inner, &e))
}

#[pyfunction]
fn algorithms() -> Vec<&'static str> {
    Algorithm::ALL.iter().map(|a| a.name()).collect()
}

#[pyfunction]
fn metric_names() -> Vec<&'static str> {
    Metric::ALL.iter().map(|m| m.abbreviation()).collect()
}

#[pymodule]
fn pynoverlap(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyAdjustResult>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(layout, m)?)?;
    m.add_function(wrap_pyfunction!(adjust, m)?)?;
    m.add_function(wrap_pyfunction!(metrics, m)?)?;
    m.add_function(wrap_pyfunction!(count_overlaps, m)?)?;
    m.add_function(wrap_pyfunction!(algorithms, m)?)?;
    m.add_function(wrap_pyfunction!(metric_names, m)?)?;
    Ok(())
}
