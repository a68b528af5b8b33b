//! Python bindings. Graphs are passed as `(n, edges)`; rationals come back
//! as strings such as `"4/3"` or `"inf"`.

use factorlab::constructions::{all_connected, petersen};
use factorlab::independent::{caro_wei, independence_number};
use factorlab::resilience::{iso_toughness, toughness, Mode};
use factorlab::theorems::{audit as run_audit, TheoremSpec};
use factorlab::treeconn::{omega as omega_m, spanning_eulerian, tree_packing, EulerMode, PackingResult};
use factorlab::factors::find_near_f_factor;
use factorlab::{Budget, MultiGraph, VertexFn};
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

type Edges = Vec<(usize, usize)>;

fn py_err(e: factorlab::Error) -> PyErr {
    if e.is_scale() {
        PyOverflowError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn graph(n: usize, edges: Edges) -> PyResult<MultiGraph> {
    MultiGraph::new(n, edges).map_err(py_err)
}

/// Exact toughness and a minimising cut set.
#[pyfunction]
fn toughness_exact(n: usize, edges: Edges) -> PyResult<(String, Option<Vec<usize>>)> {
    let r = toughness(&graph(n, edges)?, Mode::Exact, &Budget::from_env()).map_err(py_err)?;
    Ok((r.value.to_string(), r.witness.map(|w| w.iter().collect())))
}

/// Exact isolated toughness.
#[pyfunction]
fn iso_toughness_exact(n: usize, edges: Edges) -> PyResult<String> {
    let r = iso_toughness(&graph(n, edges)?, Mode::Exact, &Budget::from_env()).map_err(py_err)?;
    Ok(r.value.to_string())
}

/// `(alpha, caro_wei)`.
#[pyfunction]
fn independence(n: usize, edges: Edges) -> PyResult<(usize, String)> {
    let g = graph(n, edges)?;
    let (alpha, _) = independence_number(&g).map_err(py_err)?;
    Ok((alpha, caro_wei(&g).to_string()))
}

/// Edges of a near f-factor for constant `f`, or `None`.
#[pyfunction]
#[pyo3(signature = (n, edges, f, forced=None))]
fn near_factor(n: usize, edges: Edges, f: i64, forced: Option<usize>) -> PyResult<Option<Edges>> {
    let g = graph(n, edges)?;
    let c = find_near_f_factor(&g, &VertexFn::constant_int(n, f), forced).map_err(py_err)?;
    Ok(c.map(|c| c.edges))
}

/// `m` edge-disjoint spanning trees, or `None` with the graph refuted.
#[pyfunction]
fn spanning_trees(n: usize, edges: Edges, m: usize) -> PyResult<Option<Vec<Edges>>> {
    Ok(match tree_packing(&graph(n, edges)?, m) {
        PackingResult::Packing(p) => Some(p.trees),
        PackingResult::Refuted(_) => None,
    })
}

#[pyfunction]
fn omega(n: usize, edges: Edges, m: usize) -> PyResult<String> {
    Ok(omega_m(&graph(n, edges)?, m).to_string())
}

/// Spanning Eulerian subgraph edges; `None` means none exists.
#[pyfunction]
fn eulerian(n: usize, edges: Edges) -> PyResult<Option<Edges>> {
    let c = spanning_eulerian(&graph(n, edges)?, EulerMode::Auto, &Budget::from_env()).map_err(py_err)?;
    Ok(c.map(|c| c.edges))
}

/// Audits `theorem` (e.g. `"T-A:r=2"`) on the graph; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (theorem, n, edges, graph_id="input"))]
fn audit(theorem: &str, n: usize, edges: Edges, graph_id: &str) -> PyResult<String> {
    let spec: TheoremSpec = theorem.parse().map_err(py_err)?;
    let report = run_audit(&graph(n, edges)?, graph_id, &spec.id, &spec.params, &Budget::from_env()).map_err(py_err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn petersen_edges() -> Edges {
    petersen().edges().to_vec()
}

/// Connected graphs on at most `n` vertices up to isomorphism.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<(usize, Edges)>> {
    let gs = all_connected(n).map_err(py_err)?;
    Ok(gs.into_iter().map(|g| (g.n(), g.edges().to_vec())).collect())
}

#[pymodule]
fn factorlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(toughness_exact, m)?)?;
    m.add_function(wrap_pyfunction!(iso_toughness_exact, m)?)?;
    m.add_function(wrap_pyfunction!(independence, m)?)?;
    m.add_function(wrap_pyfunction!(near_factor, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_trees, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(petersen_edges, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    Ok(())
}
