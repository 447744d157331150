//! Python bindings: build generalized non-coprime graphs, evaluate the
//! closed-form predictions against the graph oracles, and run the cyclic
//! sweep from Python.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ncgraph::closedform::{classify_formula, CyclicInstance, Tri};
use ncgraph::graphcore::{self, classify_shape};
use ncgraph::groups::GroupCatalog;
use ncgraph::harness::{sweep_cyclic, SweepConfig};
use ncgraph::ncg::{self, NcGraph};
use ncgraph::NcError;

fn err(e: NcError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn graph_dict<'py>(py: Python<'py>, g: &NcGraph) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", g.group_order)?;
    d.set_item("h", g.subgroup_order)?;
    let vertices: Vec<(usize, u64, bool)> = g
        .vertices
        .iter()
        .map(|v| (v.element, v.order, v.in_h))
        .collect();
    d.set_item("vertices", vertices)?;
    let mut edges = g.graph.edges();
    edges.sort_unstable();
    d.set_item("edges", edges)?;
    Ok(d)
}

/// Γ_{Z_n, Z_h} as a dict with keys n, h, vertices [(id, order, in_h)]
/// and edges [(i, j)].
#[pyfunction]
fn build_gncg<'py>(py: Python<'py>, n: u64, h: u64) -> PyResult<Bound<'py, PyDict>> {
    let g = ncg::build_cyclic_gncg(n as usize, h as usize).map_err(err)?;
    graph_dict(py, &g)
}

/// Γ_{G, H} for a builtin catalog group and a subgroup order.
#[pyfunction]
fn build_catalog_gncg<'py>(
    py: Python<'py>,
    name: &str,
    h: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let catalog = GroupCatalog::builtin();
    let group = catalog
        .get(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown catalog group {name:?}")))?;
    let sub = if h == group.order() as u64 {
        group.full_subgroup()
    } else {
        group
            .all_subgroups()
            .map_err(err)?
            .into_iter()
            .find(|s| s.order() == h)
            .ok_or_else(|| {
                PyValueError::new_err(format!("no subgroup of order {h} in {name}"))
            })?
    };
    let g = ncg::build_gncg(group, &sub).map_err(err)?;
    graph_dict(py, &g)
}

/// Closed-form predictions next to oracle verdicts for a cyclic instance.
#[pyfunction]
fn classify<'py>(py: Python<'py>, n: u64, h: u64) -> PyResult<Bound<'py, PyDict>> {
    let inst = CyclicInstance::new(n, h).map_err(err)?;
    let pred = classify_formula(&inst);
    let built = ncg::build_cyclic_gncg(n as usize, h as usize).map_err(err)?;
    let g = &built.graph;
    let shape = classify_shape(g);
    let d = PyDict::new(py);
    let pair = |name: &str,
                p: bool,
                o: bool,
                d: &Bound<'py, PyDict>|
     -> PyResult<()> { d.set_item(name, (p, o)) };
    pair("star", pred.star, shape.star, &d)?;
    pair("path", pred.path, shape.path, &d)?;
    pair("cycle", pred.cycle, shape.cycle, &d)?;
    pair("triangle_free", pred.triangle_free, shape.triangle_free, &d)?;
    pair(
        "complete_bipartite",
        pred.complete_bipartite,
        shape.complete_bipartite,
        &d,
    )?;
    pair("complete", pred.complete, shape.complete, &d)?;
    pair("unicyclic", pred.unicyclic, shape.unicyclic, &d)?;
    pair("eulerian", pred.eulerian, shape.eulerian, &d)?;
    pair("connected", pred.connected, g.is_connected(), &d)?;
    pair("split", pred.split, graphcore::is_split(g), &d)?;
    pair("claw_free", pred.claw_free, graphcore::is_claw_free(g), &d)?;
    pair("chordal", pred.chordal, graphcore::is_chordal(g), &d)?;
    let oracle_perfect = graphcore::is_perfect(g).map_err(err)?;
    let predicted_perfect = match pred.perfect {
        Tri::True => Some(true),
        Tri::False => Some(false),
        Tri::Unclassified => None,
    };
    d.set_item("perfect", (predicted_perfect, oracle_perfect))?;
    d.set_item(
        "max_degree",
        (
            pred.max_degree.paper_value,
            pred.max_degree.corrected_value,
            (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as u64,
        ),
    )?;
    d.set_item(
        "min_degree",
        (
            pred.min_degree,
            (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0) as u64,
        ),
    )?;
    Ok(d)
}

/// Perfectness by the twin-reduce + prune + odd-hole oracle.
#[pyfunction]
fn is_perfect(n: u64, h: u64) -> PyResult<bool> {
    let built = ncg::build_cyclic_gncg(n as usize, h as usize).map_err(err)?;
    graphcore::is_perfect(&built.graph).map_err(err)
}

/// Run the cyclic sweep and return the summary plus discrepancy rows.
#[pyfunction]
fn sweep<'py>(py: Python<'py>, max_n: u64) -> PyResult<Bound<'py, PyDict>> {
    let report = sweep_cyclic(&SweepConfig::new(max_n)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("rows", report.rows.len())?;
    d.set_item("pass", report.summary.pass)?;
    d.set_item("fail", report.summary.fail)?;
    d.set_item("unclassified", report.summary.unclassified)?;
    d.set_item("skipped", report.summary.skipped)?;
    d.set_item("info", report.summary.info)?;
    let discrepancies: Vec<(u64, u64, String, String, String)> = report
        .discrepancies
        .iter()
        .map(|r| {
            (
                r.n,
                r.h,
                r.property.clone(),
                r.predicted.clone(),
                r.oracle.clone(),
            )
        })
        .collect();
    d.set_item("discrepancies", discrepancies)?;
    Ok(d)
}

/// Names of the builtin catalog groups.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    GroupCatalog::builtin()
        .names()
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[pyfunction]
fn is_nilpotent(name: &str) -> PyResult<bool> {
    GroupCatalog::builtin()
        .get(name)
        .map(|g| g.is_nilpotent())
        .ok_or_else(|| PyValueError::new_err(format!("unknown catalog group {name:?}")))
}

#[pyfunction]
fn is_eppo(name: &str) -> PyResult<bool> {
    GroupCatalog::builtin()
        .get(name)
        .map(|g| g.is_eppo())
        .ok_or_else(|| PyValueError::new_err(format!("unknown catalog group {name:?}")))
}

#[pymodule]
fn ncgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(build_gncg, m)?)?;
    m.add_function(wrap_pyfunction!(build_catalog_gncg, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_perfect, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(is_nilpotent, m)?)?;
    m.add_function(wrap_pyfunction!(is_eppo, m)?)?;
    Ok(())
}
