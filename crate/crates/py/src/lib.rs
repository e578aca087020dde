//! Python bindings: graphs, family constructors, spectra, separator
//! certificates, sweeps and the inequality checks.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fiedler_core::embeddings::{self, SeparatorCertificate};
use fiedler_core::families::{self, FamilySpec};
use fiedler_core::separators::{self, MaximalOuterplanarGraph};
use fiedler_core::spectra::{self, DEFAULT_TOL};
use fiedler_core::verify::{self, CheckKind};
use fiedler_core::{io, Error, Graph, VertexSet};

create_exception!(fiedler, FiedlerError, PyValueError);

fn err(e: Error) -> PyErr {
    FiedlerError::new_err(e.to_string())
}

fn parse_spec(spec: &str) -> PyResult<FamilySpec> {
    spec.parse().map_err(err)
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "fiedler", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::from_edge_list(n, &edges).map_err(err)? })
    }

    /// Builds a family instance from a spec such as `"doublewheel:10"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_spec(spec)?.build().map_err(err)? })
    }

    /// Parses an edge-list (`n m` header) or triangulation (`n` header) text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: io::parse_graph_file(text).map_err(err)?.graph() })
    }

    fn to_edge_list(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(err(Error::InvalidVertex { vertex: v, n: self.inner.vertex_count() }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn laplacian(&self) -> Vec<Vec<f64>> {
        let l = self.inner.laplacian();
        (0..l.order()).map(|i| l.matrix().row(i).to_vec()).collect()
    }

    fn join(&self, other: &PyGraph) -> PyGraph {
        PyGraph { inner: self.inner.join(&other.inner) }
    }

    fn components_after_removal(&self, separator: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
        let x = VertexSet::new(separator);
        self.inner.check_vertex_set(&x).map_err(err)?;
        let parts = self.inner.components_after_removal(&x);
        Ok(parts.components().iter().map(|c| c.as_slice().to_vec()).collect())
    }

    fn vertex_connectivity(&self) -> PyResult<usize> {
        self.inner.vertex_connectivity().map_err(err)
    }

    #[pyo3(signature = (tol = DEFAULT_TOL))]
    fn fiedler_value(&self, tol: f64) -> PyResult<f64> {
        spectra::fiedler_value(&self.inner, tol).map_err(err)
    }

    #[pyo3(signature = (tol = DEFAULT_TOL))]
    fn spectrum(&self, tol: f64) -> PyResult<Vec<f64>> {
        Ok(spectra::laplacian_spectrum(&self.inner, false, tol).map_err(err)?.eigenvalues)
    }

    #[pyo3(signature = (tol = DEFAULT_TOL))]
    fn fiedler_vector(&self, tol: f64) -> PyResult<Vec<f64>> {
        spectra::fiedler_vector(&self.inner, tol).map_err(err)
    }

    fn rayleigh_quotient(&self, x: Vec<f64>) -> PyResult<f64> {
        spectra::rayleigh_quotient(&self.inner.laplacian(), &x).map_err(err)
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// Separator certificate: an explicit zero-sum embedding whose Rayleigh
/// quotient equals `cross_edges / remaining`.
#[pyclass(name = "Certificate", module = "fiedler", frozen)]
struct PyCertificate {
    inner: SeparatorCertificate,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn separator(&self) -> Vec<usize> {
        self.inner.separator.as_slice().to_vec()
    }

    #[getter]
    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.partition.components().iter().map(|c| c.as_slice().to_vec()).collect()
    }

    #[getter]
    fn cross_edges(&self) -> usize {
        self.inner.cross_edges
    }

    #[getter]
    fn remaining(&self) -> usize {
        self.inner.remaining
    }

    #[getter]
    fn bound(&self) -> f64 {
        self.inner.bound
    }

    #[getter]
    fn bound_fraction(&self) -> String {
        self.inner.bound_fraction()
    }

    #[getter]
    fn quotient(&self) -> f64 {
        self.inner.quotient
    }

    #[getter]
    fn origin(&self) -> Option<String> {
        self.inner.origin.clone()
    }

    #[getter]
    fn coordinates(&self) -> Vec<(f64, f64)> {
        self.inner.embedding.points.iter().map(|p| (p.x, p.y)).collect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// `{"lambda2", "quotient_minus_bound", "upper_bound_holds", "matches_bound", "ok"}`.
    #[pyo3(signature = (graph, tol = DEFAULT_TOL))]
    fn soundness<'py>(&self, py: Python<'py>, graph: &PyGraph, tol: f64) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.soundness(&graph.inner, tol).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("lambda2", s.lambda2)?;
        d.set_item("quotient_minus_bound", s.quotient_minus_bound)?;
        d.set_item("upper_bound_holds", s.upper_bound_holds)?;
        d.set_item("matches_bound", s.matches_bound)?;
        d.set_item("ok", s.ok())?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(separator={}, bound={}, quotient={})",
            self.inner.separator,
            self.inner.bound_fraction(),
            self.inner.quotient
        )
    }
}

#[pyfunction]
fn family(spec: &str) -> PyResult<PyGraph> {
    PyGraph::family(spec)
}

#[pyfunction]
#[pyo3(signature = (graph, tol = DEFAULT_TOL))]
fn fiedler_value(graph: &PyGraph, tol: f64) -> PyResult<f64> {
    graph.fiedler_value(tol)
}

#[pyfunction]
#[pyo3(signature = (graph, tol = DEFAULT_TOL))]
fn spectrum(graph: &PyGraph, tol: f64) -> PyResult<Vec<f64>> {
    graph.spectrum(tol)
}

/// Closed-form prediction for a family spec.
#[pyfunction]
fn closed_form<'py>(py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyDict>> {
    let cf = families::predicted_lambda2(&parse_spec(spec)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("family", cf.family.to_string())?;
    d.set_item("lambda2", cf.lambda2_predicted)?;
    d.set_item("full_spectrum", cf.full_spectrum_predicted.clone())?;
    d.set_item("valid", cf.is_valid())?;
    d.set_item("min_n", cf.validity.min_n)?;
    d.set_item("even_only", cf.validity.even_only)?;
    d.set_item("limit", cf.limit)?;
    Ok(d)
}

#[pyfunction]
fn certify(graph: &PyGraph, separator: Vec<usize>) -> PyResult<PyCertificate> {
    let cert = embeddings::certify(&graph.inner, &VertexSet::new(separator)).map_err(err)?;
    Ok(PyCertificate { inner: cert })
}

/// Certificate from an automatic separator: `"tree"` (centroid plus
/// refinement) or `"bfs"` (BFS-layer refinement).
#[pyfunction]
fn certify_auto(graph: &PyGraph, mode: &str) -> PyResult<PyCertificate> {
    let r = match mode {
        "tree" => separators::tree_separator(&graph.inner),
        "bfs" => separators::bfs_separator(&graph.inner),
        other => return Err(PyValueError::new_err(format!("unknown mode `{other}`, expected tree or bfs"))),
    }
    .map_err(err)?;
    let cert = embeddings::certify(&graph.inner, &r.separator).map_err(err)?;
    let origin = format!("{mode} separator, {} refinement pass(es)", r.iterations);
    Ok(PyCertificate { inner: cert.with_origin(origin) })
}

/// Certificate for a triangulated convex `n`-gon given by its diagonals,
/// with the separator from the dual-tree construction.
#[pyfunction]
fn certify_triangulation(n: usize, diagonals: Vec<(usize, usize)>) -> PyResult<(PyGraph, PyCertificate)> {
    let p = MaximalOuterplanarGraph::new(n, &diagonals).map_err(err)?;
    let sep = separators::outerplanar_separator(&p).map_err(err)?;
    let g = p.to_graph();
    let cert = embeddings::certify(&g, &sep.separator).map_err(err)?.with_origin(sep.describe());
    Ok((PyGraph { inner: g }, PyCertificate { inner: cert }))
}

#[pyfunction]
fn tree_centroid(tree: &PyGraph) -> PyResult<usize> {
    separators::tree_centroid(&tree.inner).map_err(err)
}

#[pyfunction]
fn three_point_placement(a: f64, b: f64, c: f64) -> PyResult<Vec<(f64, f64)>> {
    let pts = embeddings::three_point_placement(a, b, c).map_err(err)?;
    Ok(pts.iter().map(|p| (p.x, p.y)).collect())
}

#[pyfunction]
fn balanced_circle_placement(weights: Vec<f64>) -> PyResult<Vec<(f64, f64)>> {
    let pts = embeddings::balanced_circle_placement(&weights).map_err(err)?;
    Ok(pts.iter().map(|p| (p.x, p.y)).collect())
}

/// Sweep rows as CSV text (header `family,n,lambda2,closed_form,abs_gap,scaled_gap`).
#[pyfunction]
#[pyo3(signature = (family, ns, include_exceptions = false, tol = DEFAULT_TOL))]
fn sweep_csv(family: &str, ns: Vec<usize>, include_exceptions: bool, tol: f64) -> PyResult<String> {
    let template = parse_spec(family).or_else(|_| parse_spec(&format!("{family}:1")))?;
    let rows = verify::sweep(&template, ns, include_exceptions, tol).map_err(err)?;
    verify::sweep_to_csv(&rows).map_err(err)
}

type CheckRow = (String, String, f64, f64, bool);

/// Check rows as `(check, graph, left, right, pass)` tuples.
#[pyfunction]
#[pyo3(signature = (checks = Vec::new(), tol = DEFAULT_TOL))]
fn run_checks(checks: Vec<String>, tol: f64) -> PyResult<Vec<CheckRow>> {
    let kinds: Vec<CheckKind> = if checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        checks.iter().map(|c| c.parse().map_err(err)).collect::<PyResult<_>>()?
    };
    let reports = verify::run_checks(&kinds, tol).map_err(err)?;
    Ok(reports.into_iter().map(|r| (r.check, r.graph, r.left, r.right, r.pass)).collect())
}

#[pymodule]
#[pyo3(name = "fiedler")]
fn fiedler_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FiedlerError", m.py().get_type::<FiedlerError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(fiedler_value, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(certify_auto, m)?)?;
    m.add_function(wrap_pyfunction!(certify_triangulation, m)?)?;
    m.add_function(wrap_pyfunction!(tree_centroid, m)?)?;
    m.add_function(wrap_pyfunction!(three_point_placement, m)?)?;
    m.add_function(wrap_pyfunction!(balanced_circle_placement, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    Ok(())
}
