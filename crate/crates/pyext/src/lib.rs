//! Python bindings: the `Graph` type plus the partition, coloring, oracle
//! and classifier entry points, with certificates rendered as plain dicts.

use degpart::coloring::{
    brooks_color, classify_critical_with, color_via_partition, extract_critical_structure_with,
    high_subgraph, omega_d, ClassifierVerdict, ColorOutcome, CriticalOptions,
};
use degpart::error::Error;
use degpart::oracle::checker::{verify_degen_certificate, verify_partition_certificate};
use degpart::oracle::{
    enumerate_graphs as enumerate_core, exact_chi_with, extract_critical_subgraph_with,
    is_vertex_critical_with, ChiOptions,
};
use degpart::partition::{
    borodin_partition as borodin_core, cost_f as cost_core, find_partition_t1, find_partition_t2,
    local_search_f as local_search_core, DegenOutcome, OrderedPartition, PartitionOutcome,
    RVector, Refinement,
};
use degpart::VertexSet;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Precondition(_) | Error::Hypothesis(_) | Error::Parse { .. } => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

/// A simple undirected graph with dense vertex ids.
#[pyclass(frozen)]
struct Graph {
    inner: degpart::Graph,
}

#[pymethods]
impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: degpart::Graph::from_edges(n, &edges).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn complete(t: usize) -> Self {
        Graph { inner: degpart::build_complete(t) }
    }

    #[staticmethod]
    fn edgeless(t: usize) -> Self {
        Graph { inner: degpart::build_edgeless(t) }
    }

    #[staticmethod]
    fn cycle(t: usize) -> Self {
        Graph { inner: degpart::build_cycle(t) }
    }

    /// Builds O_n and returns (graph, roles dict).
    #[staticmethod]
    fn o_n(py: Python<'_>, n: usize) -> PyResult<(Self, Py<PyDict>)> {
        let on = degpart::build_o_n(n).map_err(to_py_err)?;
        let roles = PyDict::new(py);
        roles.set_item("x", on.x)?;
        roles.set_item("y", on.y)?;
        roles.set_item("core", on.core.to_vec())?;
        roles.set_item("handle", on.handle.to_vec())?;
        roles.set_item("x_side", on.x_side.to_vec())?;
        roles.set_item("y_side", on.y_side.to_vec())?;
        Ok((Graph { inner: on.graph }, roles.into()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn degeneracy(&self) -> usize {
        self.inner.full().degeneracy()
    }

    fn max_clique_size(&self) -> usize {
        self.inner.full().max_clique_size()
    }

    fn isomorphic(&self, other: &Graph) -> bool {
        degpart::isomorphic(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

fn rvec(r: Vec<usize>) -> PyResult<RVector> {
    RVector::new(r).map_err(to_py_err)
}

fn parts_to_lists(p: &OrderedPartition) -> Vec<Vec<usize>> {
    p.parts().iter().map(VertexSet::to_vec).collect()
}

fn sets_to_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(VertexSet::to_vec).collect()
}

/// Obstruction-free partition or clique structure, as a dict.
#[pyfunction]
#[pyo3(name = "find_partition_t1")]
fn py_find_partition_t1(
    py: Python<'_>,
    g: &Graph,
    r: Vec<usize>,
    d: usize,
) -> PyResult<Py<PyDict>> {
    let r = rvec(r)?;
    let cert = find_partition_t1(&g.inner, &r, d).map_err(to_py_err)?;
    let report = verify_partition_certificate(&g.inner, &cert);
    let out = PyDict::new(py);
    out.set_item("verified", report.passed())?;
    match &cert.outcome {
        PartitionOutcome::CliqueStructure(qs) => {
            out.set_item("outcome", "clique_structure")?;
            out.set_item("q", qs.q.to_vec())?;
            out.set_item("cliques", sets_to_lists(&qs.cliques))?;
            out.set_item("witnesses", sets_to_lists(&qs.witnesses))?;
            out.set_item("part_order", qs.part_order.clone())?;
            out.set_item("budgets", qs.budgets.clone())?;
        }
        PartitionOutcome::ObstructionFree { partition } => {
            out.set_item("outcome", "partition")?;
            out.set_item("parts", parts_to_lists(partition))?;
        }
    }
    Ok(out.into())
}

/// Degenerate partition or join structure, as a dict.
#[pyfunction]
#[pyo3(name = "find_partition_t2")]
fn py_find_partition_t2(
    py: Python<'_>,
    g: &Graph,
    r: Vec<usize>,
    d: usize,
) -> PyResult<Py<PyDict>> {
    let r = rvec(r)?;
    let cert = find_partition_t2(&g.inner, &r, d).map_err(to_py_err)?;
    let report = verify_degen_certificate(&g.inner, &cert);
    let out = PyDict::new(py);
    out.set_item("verified", report.passed())?;
    match &cert.outcome {
        DegenOutcome::JoinStructure { clique_part, independent_part } => {
            out.set_item("outcome", "join_structure")?;
            out.set_item("clique_part", clique_part.to_vec())?;
            out.set_item("independent_part", independent_part.to_vec())?;
        }
        DegenOutcome::DegeneratePartition { partition, refinement } => {
            out.set_item("outcome", "partition")?;
            out.set_item("parts", parts_to_lists(partition))?;
            match refinement {
                Refinement::SmallMovable => out.set_item("refinement", "small_movable")?,
                Refinement::CliqueNeighborhood { part, component, vertex } => {
                    out.set_item("refinement", "clique_neighborhood")?;
                    out.set_item("refinement_part", *part)?;
                    out.set_item("refinement_component", component.to_vec())?;
                    out.set_item("refinement_vertex", *vertex)?;
                }
            }
        }
    }
    Ok(out.into())
}

/// Two-part split with degree and coloring-number bounds per side.
#[pyfunction]
#[pyo3(name = "borodin_partition")]
fn py_borodin(g: &Graph, r1: usize, r2: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let p = borodin_core(&g.inner, r1, r2).map_err(to_py_err)?;
    Ok((p.part(0).to_vec(), p.part(1).to_vec()))
}

/// Local search on f; returns the parts.
#[pyfunction]
#[pyo3(name = "local_search_f")]
fn py_local_search(g: &Graph, r: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let r = rvec(r)?;
    let p = local_search_core(&g.inner, &r, None).map_err(to_py_err)?;
    Ok(parts_to_lists(&p))
}

/// f(P) for an explicit partition.
#[pyfunction]
#[pyo3(name = "cost_f")]
fn py_cost_f(g: &Graph, parts: Vec<Vec<usize>>, r: Vec<usize>) -> PyResult<i64> {
    let sets: Vec<VertexSet> = parts
        .iter()
        .map(|l| VertexSet::from_vertices(g.inner.n(), l))
        .collect();
    let p = OrderedPartition::from_parts(g.inner.n(), sets).map_err(to_py_err)?;
    cost_core(&g.inner, &p, &rvec(r)?).map_err(to_py_err)
}

/// Partition-based coloring; returns either a coloring or the structure.
#[pyfunction]
#[pyo3(name = "color_via_partition")]
fn py_color_via_partition(
    py: Python<'_>,
    g: &Graph,
    r: Vec<usize>,
    d: usize,
) -> PyResult<Py<PyDict>> {
    let r = rvec(r)?;
    let out = PyDict::new(py);
    match color_via_partition(&g.inner, &r, d).map_err(to_py_err)? {
        ColorOutcome::Colored(col) => {
            out.set_item("outcome", "coloring")?;
            out.set_item("colors", (0..g.inner.n()).map(|v| col.color_of(v)).collect::<Vec<_>>())?;
            out.set_item("color_count", col.color_count())?;
        }
        ColorOutcome::SpecialQ(cert) => {
            let PartitionOutcome::CliqueStructure(qs) = &cert.outcome else {
                unreachable!("special outcome always carries the clique structure");
            };
            out.set_item("outcome", "clique_structure")?;
            out.set_item("q", qs.q.to_vec())?;
            out.set_item("cliques", sets_to_lists(&qs.cliques))?;
        }
    }
    Ok(out.into())
}

/// Brooks coloring of a connected graph with at most `r` colors.
#[pyfunction]
#[pyo3(name = "brooks_color")]
fn py_brooks(g: &Graph, r: usize) -> PyResult<Vec<usize>> {
    let col = brooks_color(&g.inner.full(), r).map_err(to_py_err)?;
    Ok((0..g.inner.n()).map(|v| col.color_of(v)).collect())
}

/// Exact chromatic number (branch and bound; desk scale).
#[pyfunction]
#[pyo3(name = "exact_chi")]
#[pyo3(signature = (g, size_limit = 16))]
fn py_exact_chi(g: &Graph, size_limit: usize) -> PyResult<usize> {
    let opts = ChiOptions { size_limit, time_budget: None };
    Ok(exact_chi_with(&g.inner, &opts).map_err(to_py_err)?.chi)
}

#[pyfunction]
#[pyo3(name = "is_vertex_critical")]
#[pyo3(signature = (g, size_limit = 16))]
fn py_is_critical(g: &Graph, size_limit: usize) -> PyResult<bool> {
    let opts = ChiOptions { size_limit, time_budget: None };
    Ok(is_vertex_critical_with(&g.inner, &opts).map_err(to_py_err)?.is_critical)
}

#[pyfunction]
#[pyo3(name = "extract_critical_subgraph")]
#[pyo3(signature = (g, size_limit = 16))]
fn py_extract_critical(g: &Graph, size_limit: usize) -> PyResult<Graph> {
    let opts = ChiOptions { size_limit, time_budget: None };
    Ok(Graph { inner: extract_critical_subgraph_with(&g.inner, &opts).map_err(to_py_err)? })
}

/// `ω_d(G)`: clique number over the vertices of degree above d.
#[pyfunction]
#[pyo3(name = "omega_d")]
fn py_omega_d(g: &Graph, d: usize) -> usize {
    omega_d(&g.inner, d)
}

/// Vertices of degree at least chi.
#[pyfunction]
#[pyo3(name = "high_vertices")]
fn py_high_vertices(g: &Graph, chi: usize) -> Vec<usize> {
    high_subgraph(&g.inner, chi).support().to_vec()
}

/// Critical structure extraction; returns a dict with Q, cliques, witnesses.
#[pyfunction]
#[pyo3(name = "extract_critical_structure")]
fn py_extract_structure(py: Python<'_>, g: &Graph, k: usize) -> PyResult<Py<PyDict>> {
    let cs = extract_critical_structure_with(&g.inner, k, &CriticalOptions::default())
        .map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("q", cs.q.to_vec())?;
    out.set_item("cliques", sets_to_lists(&cs.cliques))?;
    out.set_item("witnesses", sets_to_lists(&cs.witnesses))?;
    out.set_item("chi", cs.chi)?;
    out.set_item("omega_h", cs.omega_h)?;
    Ok(out.into())
}

/// Classifier verdict label: IsCompleteKChi, IsO5, HypothesisNotMet, or
/// TheoremViolation.
#[pyfunction]
#[pyo3(name = "classify_critical")]
fn py_classify(g: &Graph, p: usize) -> String {
    match classify_critical_with(&g.inner, p, &CriticalOptions::default()) {
        ClassifierVerdict::HypothesisNotMet { reason } => {
            format!("HypothesisNotMet: {reason}")
        }
        verdict => verdict.label().to_string(),
    }
}

/// All graphs on n vertices up to isomorphism (n <= 8).
#[pyfunction]
#[pyo3(name = "enumerate_graphs")]
#[pyo3(signature = (n, connected_only = false))]
fn py_enumerate(n: usize, connected_only: bool) -> PyResult<Vec<Graph>> {
    Ok(enumerate_core(n, connected_only)
        .map_err(to_py_err)?
        .into_iter()
        .map(|inner| Graph { inner })
        .collect())
}

#[pymodule]
fn degpart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(py_find_partition_t1, m)?)?;
    m.add_function(wrap_pyfunction!(py_find_partition_t2, m)?)?;
    m.add_function(wrap_pyfunction!(py_borodin, m)?)?;
    m.add_function(wrap_pyfunction!(py_local_search, m)?)?;
    m.add_function(wrap_pyfunction!(py_cost_f, m)?)?;
    m.add_function(wrap_pyfunction!(py_color_via_partition, m)?)?;
    m.add_function(wrap_pyfunction!(py_brooks, m)?)?;
    m.add_function(wrap_pyfunction!(py_exact_chi, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_critical, m)?)?;
    m.add_function(wrap_pyfunction!(py_extract_critical, m)?)?;
    m.add_function(wrap_pyfunction!(py_omega_d, m)?)?;
    m.add_function(wrap_pyfunction!(py_high_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(py_extract_structure, m)?)?;
    m.add_function(wrap_pyfunction!(py_classify, m)?)?;
    m.add_function(wrap_pyfunction!(py_enumerate, m)?)?;
    Ok(())
}
