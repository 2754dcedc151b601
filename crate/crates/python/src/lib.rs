//! Python bindings: `import pathfactor`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pathfactor as pf;

fn to_py(e: pf::Error) -> PyErr {
    if e.is_defect() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn parse_policy(policy: &str) -> PyResult<pf::TieBreakPolicy> {
    policy.parse().map_err(PyValueError::new_err)
}

fn names(path: &[pf::VertexId]) -> Vec<String> {
    path.iter().map(ToString::to_string).collect()
}

fn parse_vertices(paths: Vec<Vec<String>>) -> PyResult<Vec<Vec<pf::VertexId>>> {
    paths
        .into_iter()
        .map(|p| {
            p.iter()
                .map(|s| s.parse().map_err(PyValueError::new_err))
                .collect()
        })
        .collect()
}

/// A bipartite multigraph with sides Y and X.
#[pyclass(name = "Graph", module = "pathfactor", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: pf::Bigraph,
}

#[pymethods]
impl PyGraph {
    /// `edges` is a list of `(y, x)` index pairs.
    #[new]
    fn new(y_count: usize, x_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = pf::Bigraph::new(y_count, x_count, edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (text, allow_multi = false))]
    fn from_text(text: &str, allow_multi: bool) -> PyResult<Self> {
        let inner = pf::parse_graph(text, allow_multi).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// `"k34"` or `"counterexample"`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let inner = pf::fixture(name).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn generate(k: usize, seed: u64) -> PyResult<Self> {
        let inner = pf::generate(&pf::GenConfig::new(k, seed)).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    fn to_text(&self) -> String {
        pf::serialize_graph(&self.inner)
    }

    /// The `k` with `|Y| = 4k`, `|X| = 3k`; raises if not (3,4)-biregular.
    fn k(&self) -> PyResult<usize> {
        pf::check_biregular(&self.inner).map_err(|e| to_py(e.into()))
    }

    #[getter]
    fn y_count(&self) -> usize {
        self.inner.y_count()
    }

    #[getter]
    fn x_count(&self) -> usize {
        self.inner.x_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(y_count={}, x_count={}, edges={})",
            self.inner.y_count(),
            self.inner.x_count(),
            self.inner.edge_count()
        )
    }
}

/// Paths in canonical form, vertices named like `"y3"` / `"x0"`.
#[pyclass(name = "PathFactor", module = "pathfactor", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPathFactor {
    inner: pf::PathFactor,
}

#[pymethods]
impl PyPathFactor {
    #[new]
    fn new(paths: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(PyPathFactor {
            inner: pf::PathFactor::from_paths(parse_vertices(paths)?),
        })
    }

    #[getter]
    fn paths(&self) -> Vec<Vec<String>> {
        self.inner.paths().iter().map(|p| names(p)).collect()
    }

    #[getter]
    fn lengths(&self) -> Vec<usize> {
        self.inner.lengths().collect()
    }

    fn max_path_len(&self) -> usize {
        self.inner.max_path_len()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __len__(&self) -> usize {
        self.inner.path_count()
    }

    fn __repr__(&self) -> String {
        format!("PathFactor(paths={}, edges={})", self.inner.path_count(), self.inner.edge_count())
    }
}

/// Path factor with every endpoint in Y. `policy` is `"lex"` or `"random:<seed>"`.
#[pyfunction]
#[pyo3(signature = (graph, policy = "lex", checked = false))]
fn solve(graph: &PyGraph, policy: &str, checked: bool) -> PyResult<PyPathFactor> {
    let opts = pf::SolveOptions {
        checked,
        trace: false,
    };
    let out = pf::solve_with(&graph.inner, parse_policy(policy)?, opts).map_err(to_py)?;
    Ok(PyPathFactor { inner: out.factor })
}

/// Like `solve`, also returning the step and augmentation trace lines.
#[pyfunction]
#[pyo3(signature = (graph, policy = "lex"))]
fn solve_traced(graph: &PyGraph, policy: &str) -> PyResult<(PyPathFactor, Vec<String>)> {
    let opts = pf::SolveOptions {
        checked: false,
        trace: true,
    };
    let out = pf::solve_with(&graph.inner, parse_policy(policy)?, opts).map_err(to_py)?;
    Ok((PyPathFactor { inner: out.factor }, out.trace))
}

/// The pseudo path factor before augmentation: `(paths, uncovered_y)`.
#[pyfunction]
#[pyo3(signature = (graph, policy = "lex"))]
fn build_pseudo_factor(graph: &PyGraph, policy: &str) -> PyResult<(Vec<Vec<String>>, Vec<String>)> {
    let pseudo = pf::build_pseudo_factor(&graph.inner, parse_policy(policy)?).map_err(to_py)?;
    let paths = pseudo.paths().iter().map(|p| names(p)).collect();
    let uncovered = pseudo.uncovered().map(|y| y.to_string()).collect();
    Ok((paths, uncovered))
}

/// Violations as `(rule, message)` pairs; empty means valid.
#[pyfunction]
fn validate_path_factor(graph: &PyGraph, paths: Vec<Vec<String>>) -> PyResult<Vec<(String, String)>> {
    let report = pf::validate_paths(&graph.inner, &parse_vertices(paths)?);
    Ok(report
        .violations
        .into_iter()
        .map(|v| (v.rule.as_str().to_string(), v.message))
        .collect())
}

/// Exhaustive search (k <= 2). `None` when no factor exists.
#[pyfunction]
fn brute_force_factor(graph: &PyGraph) -> PyResult<Option<PyPathFactor>> {
    let found = pf::brute_force_factor(&graph.inner).map_err(to_py)?;
    Ok(found.map(|inner| PyPathFactor { inner }))
}

#[pyfunction]
#[pyo3(signature = (k, trials, seed = 0, jobs = 1, policy = "lex"))]
fn run_experiment<'py>(
    py: Python<'py>,
    k: usize,
    trials: usize,
    seed: u64,
    jobs: usize,
    policy: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = pf::ExperimentConfig {
        jobs,
        policy: parse_policy(policy)?,
        ..pf::ExperimentConfig::new(k, trials, seed)
    };
    let summary = py
        .detach(|| pf::run_experiment(&cfg))
        .map_err(to_py)?;
    let hist: BTreeMap<usize, usize> = summary.path_length_histogram;
    let d = PyDict::new(py);
    d.set_item("trials", summary.trials)?;
    d.set_item("k", summary.k)?;
    d.set_item("path_length_histogram", hist)?;
    d.set_item("max_path_seen", summary.max_path_seen)?;
    d.set_item("pct_all_paths_le_8", summary.pct_all_paths_le_8)?;
    d.set_item("mean_solve_time", summary.mean_solve_time.as_secs_f64())?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "pathfactor")]
fn pathfactor_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPathFactor>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_traced, m)?)?;
    m.add_function(wrap_pyfunction!(build_pseudo_factor, m)?)?;
    m.add_function(wrap_pyfunction!(validate_path_factor, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_factor, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}
