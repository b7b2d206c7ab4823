//! Python bindings. Flowers and profile sets cross the boundary in their
//! JSON file forms; graphs are wrapped in a small class.

use std::sync::Arc;

use pseudoflower::dot;
use pseudoflower::extension;
use pseudoflower::generators::{self, DaisySpec};
use pseudoflower::io;
use pseudoflower::profiles::{self, Side};
use pseudoflower::{Graph as CoreGraph, ProfileError, SeparationSystem, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pseudoflower_py, GuardError, PyValueError, "The separation system exceeds the size guard.");

#[derive(Debug)]
pub enum Failure {
    Value(String),
    Guard(String),
}

impl From<Failure> for PyErr {
    fn from(f: Failure) -> PyErr {
        match f {
            Failure::Value(m) => PyValueError::new_err(m),
            Failure::Guard(m) => GuardError::new_err(m),
        }
    }
}

fn value(e: impl std::fmt::Display) -> Failure {
    Failure::Value(e.to_string())
}

type Pair = (Vec<usize>, Vec<usize>);

/// A finite simple graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn py_new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: CoreGraph::from_edges(n, &edges).map_err(value)? })
    }

    /// Parses the edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph { inner: CoreGraph::parse(text).map_err(value)? })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

pub fn separations(g: &CoreGraph, max_order: usize) -> Vec<Pair> {
    pseudoflower::enumerate_separations(g, max_order)
        .into_iter()
        .map(|s| (s.a.to_vec(), s.b.to_vec()))
        .collect()
}

pub fn profiles_json(g: &CoreGraph, k: usize, tangles_only: bool, max_pairs: usize) -> Result<String, Failure> {
    let ps = pseudoflower::enumerate_profiles(g, k, tangles_only, max_pairs).map_err(|e| match e {
        ProfileError::Guard { .. } => Failure::Guard(e.to_string()),
        _ => value(e),
    })?;
    Ok(io::profiles_to_json(k, &ps))
}

/// Whether the flower validates, and the failing clauses.
pub fn validate(g: &CoreGraph, flower: &str) -> Result<(bool, Vec<String>), Failure> {
    let f = io::flower_from_json(flower, g.vertices()).map_err(value)?;
    let report = f.validate(g);
    let failures = report
        .failures()
        .map(|c| match &c.counterexample {
            Some(w) => format!("{}: {w}", c.clause),
            None => c.clause.to_string(),
        })
        .collect();
    Ok((report.valid, failures))
}

fn load(g: &CoreGraph, flower: &str, profiles: &str) -> Result<(pseudoflower::flower::PseudoFlower, Vec<pseudoflower::Profile>), Failure> {
    let f = io::flower_from_json(flower, g.vertices()).map_err(value)?;
    let system = Arc::new(SeparationSystem::new(g, f.k() + 1).map_err(value)?);
    let ps = io::profiles_from_json(profiles, &system).map_err(value)?;
    Ok((f, ps))
}

/// For each profile, the locating cutpoint and side, or `None`.
pub fn locate(g: &CoreGraph, flower: &str, profiles: &str) -> Result<Vec<Option<(String, String)>>, Failure> {
    let (f, ps) = load(g, flower, profiles)?;
    Ok(ps
        .iter()
        .map(|p| {
            profiles::locate(&f, p).ok().map(|l| {
                let side = match l.side {
                    Side::AllFromV => "all_from_v",
                    Side::AllTowardV => "all_toward_v",
                };
                (l.cutpoint, side.to_string())
            })
        })
        .collect())
}

/// The maximalized flower as JSON, and the number of subdivisions.
pub fn maximalize(g: &CoreGraph, flower: &str, profiles: &str) -> Result<(String, usize), Failure> {
    let (f, ps) = load(g, flower, profiles)?;
    let m = extension::maximalize(g, &f, &ps).map_err(value)?;
    Ok((io::flower_to_json(&m.flower), m.steps.len()))
}

pub fn daisy(n: usize, a: usize, d: usize) -> Result<(CoreGraph, String), Failure> {
    let spec = DaisySpec::standard(n, a, d).map_err(value)?;
    let (g, f) = generators::gen_daisy(&spec).map_err(value)?;
    Ok((g, io::flower_to_json(&f)))
}

pub fn anemone(g: &CoreGraph, x: Vec<usize>, groups: Vec<Vec<usize>>) -> Result<String, Failure> {
    let groups: Vec<VertexSet> = groups.into_iter().map(|grp| grp.into_iter().collect()).collect();
    let f = generators::gen_anemone(g, x.into_iter().collect(), &groups).map_err(value)?;
    Ok(io::flower_to_json(&f))
}

pub fn render(g: &CoreGraph, flower: &str) -> Result<String, Failure> {
    let f = io::flower_from_json(flower, g.vertices()).map_err(value)?;
    Ok(dot::render_dot(g, &f))
}

/// All separations of order at most `max_order`, as `(A, B)` pairs.
#[pyfunction]
fn enumerate_separations(graph: PyRef<'_, Graph>, max_order: usize) -> Vec<Pair> {
    separations(&graph.inner, max_order)
}

/// Profiles JSON for the separations of order below `k`.
#[pyfunction]
#[pyo3(signature = (graph, k, tangles_only = false, max_pairs = profiles::DEFAULT_MAX_PAIRS))]
fn enumerate_profiles(graph: PyRef<'_, Graph>, k: usize, tangles_only: bool, max_pairs: usize) -> PyResult<String> {
    Ok(profiles_json(&graph.inner, k, tangles_only, max_pairs)?)
}

#[pyfunction]
fn validate_flower(graph: PyRef<'_, Graph>, flower: &str) -> PyResult<(bool, Vec<String>)> {
    Ok(validate(&graph.inner, flower)?)
}

#[pyfunction]
#[pyo3(name = "locate")]
fn py_locate(graph: PyRef<'_, Graph>, flower: &str, profiles: &str) -> PyResult<Vec<Option<(String, String)>>> {
    Ok(locate(&graph.inner, flower, profiles)?)
}

#[pyfunction]
#[pyo3(name = "maximalize")]
fn py_maximalize(graph: PyRef<'_, Graph>, flower: &str, profiles: &str) -> PyResult<(String, usize)> {
    Ok(maximalize(&graph.inner, flower, profiles)?)
}

/// The standard daisy on `d` copies of a clique base: `(graph, flower_json)`.
#[pyfunction]
#[pyo3(signature = (n, a, d = 3))]
fn gen_daisy(n: usize, a: usize, d: usize) -> PyResult<(Graph, String)> {
    let (g, f) = daisy(n, a, d)?;
    Ok((Graph { inner: g }, f))
}

#[pyfunction]
fn gen_anemone(graph: PyRef<'_, Graph>, x: Vec<usize>, groups: Vec<Vec<usize>>) -> PyResult<String> {
    Ok(anemone(&graph.inner, x, groups)?)
}

#[pyfunction]
fn render_dot(graph: PyRef<'_, Graph>, flower: &str) -> PyResult<String> {
    Ok(render(&graph.inner, flower)?)
}

#[pymodule]
fn pseudoflower_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add("GuardError", m.py().get_type::<GuardError>())?;
    m.add_function(wrap_pyfunction!(enumerate_separations, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(validate_flower, m)?)?;
    m.add_function(wrap_pyfunction!(py_locate, m)?)?;
    m.add_function(wrap_pyfunction!(py_maximalize, m)?)?;
    m.add_function(wrap_pyfunction!(gen_daisy, m)?)?;
    m.add_function(wrap_pyfunction!(gen_anemone, m)?)?;
    m.add_function(wrap_pyfunction!(render_dot, m)?)?;
    Ok(())
}
