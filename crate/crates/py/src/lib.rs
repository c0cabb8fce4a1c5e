//! Python bindings: `nil_py` exposes graphs, monomial ideals, simplicial
//! complexes, Betti tables, and the verification suites.
//!
//! Vertex and variable indices are 0-based on this surface (labels like
//! `"x1"` are available for display); the text formats produced by
//! `to_edge_list` and consumed by `Graph.from_edge_list` stay 1-based
//! like the CLI.
//!
//! Build: `cargo build -p nil-py --release`, then import the produced
//! `libnil_py.so` as `nil_py` (see `python/smoke_test.py`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nil_core::betti::{
    betti_splitting_report, betti_table_hochster_with_jobs, betti_table_taylor,
    shift_check_extra_variable, BettiTable,
};
use nil_core::bits;
use nil_core::enumerate;
use nil_core::graph::{parse_edge_list, to_edge_list_string, FamilySpec, Graph};
use nil_core::matching::matching_number;
use nil_core::monomial::{
    closed_neighborhood_ideal, edge_ideal, path_ideal, Monomial, MonomialIdeal,
};
use nil_core::simplicial::{
    dominance_complex, homological_dimension, reduced_homology_ranks, stanley_reisner_complex,
    stanley_reisner_ideal, SimplicialComplex,
};
use nil_core::verify;

fn err(e: nil_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", frozen)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Build from a family spec string like "cycle:5" or
    /// "whiskered(path:3)".
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let g = FamilySpec::parse(spec).and_then(|s| s.build()).map_err(err)?;
        Ok(PyGraph { inner: g })
    }

    /// Build from an explicit vertex count and 0-based edge pairs.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::new(n, edges).map_err(err)?,
        })
    }

    /// Parse the 1-based edge-list text format ("n m" header).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_edge_list(text).map_err(err)?,
        })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(bits::to_vec(self.inner.closed_neighborhood(v).map_err(err)?))
    }

    fn matching_number(&self) -> usize {
        matching_number(&self.inner)
    }

    fn clique_cover_number(&self) -> PyResult<usize> {
        nil_core::domination::clique_cover_number(&self.inner).map_err(err)
    }

    fn simplicial_vertices(&self) -> Vec<usize> {
        bits::to_vec(self.inner.simplicial_vertices())
    }

    fn minimal_dominating_sets(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(nil_core::domination::minimal_dominating_sets(&self.inner)
            .map_err(err)?
            .into_iter()
            .map(bits::to_vec)
            .collect())
    }

    fn is_chordal(&self) -> bool {
        self.inner.is_chordal()
    }

    fn is_forest(&self) -> bool {
        self.inner.is_forest()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn is_unicyclic(&self) -> bool {
        self.inner.is_unicyclic()
    }

    fn components(&self) -> Vec<PyGraph> {
        self.inner
            .components()
            .into_iter()
            .map(|g| PyGraph { inner: g })
            .collect()
    }

    fn complement(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn whisker_all(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.whisker_all(),
        }
    }

    /// (levels, height) from `root`; the graph must be a tree.
    fn rooted_levels(&self, root: usize) -> PyResult<(Vec<usize>, usize)> {
        self.inner.rooted_levels(root).map_err(err)
    }

    fn ni(&self) -> PyIdeal {
        PyIdeal {
            inner: closed_neighborhood_ideal(&self.inner),
        }
    }

    fn edge_ideal(&self) -> PyIdeal {
        PyIdeal {
            inner: edge_ideal(&self.inner),
        }
    }

    fn path_ideal(&self, t: usize) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: path_ideal(&self.inner, t).map_err(err)?,
        })
    }

    fn dominance_complex(&self) -> PyResult<PyComplex> {
        Ok(PyComplex {
            inner: dominance_complex(&self.inner).map_err(err)?,
        })
    }

    fn to_edge_list(&self) -> String {
        to_edge_list_string(&self.inner)
    }

    fn canonical_key(&self) -> String {
        enumerate::canonical_key(&self.inner)
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph({:?})", self.inner.to_compact_string())
    }
}

#[pyclass(name = "MonomialIdeal", frozen)]
#[derive(Clone)]
struct PyIdeal {
    inner: MonomialIdeal,
}

fn monomial_from_indices(vars: Vec<usize>, n_vars: usize) -> PyResult<Monomial> {
    for &v in &vars {
        if v >= n_vars {
            return Err(PyValueError::new_err(format!(
                "variable {v} out of range 0..{n_vars}"
            )));
        }
    }
    Ok(Monomial::from_indices(vars))
}

#[pymethods]
impl PyIdeal {
    /// Minimalize a generating set given as lists of 0-based variable
    /// indices.
    #[new]
    fn new(n_vars: usize, generators: Vec<Vec<usize>>) -> PyResult<Self> {
        if n_vars > 32 {
            return Err(PyValueError::new_err("at most 32 variables"));
        }
        let gens: PyResult<Vec<Monomial>> = generators
            .into_iter()
            .map(|g| monomial_from_indices(g, n_vars))
            .collect();
        Ok(PyIdeal {
            inner: MonomialIdeal::minimalize(n_vars, gens?),
        })
    }

    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    /// Minimal generators as sorted lists of 0-based variable indices.
    fn generators(&self) -> Vec<Vec<usize>> {
        self.inner
            .gens()
            .iter()
            .map(|g| bits::to_vec(g.support()))
            .collect()
    }

    fn generator_strings(&self) -> Vec<String> {
        let labels = nil_core::graph::default_labels(self.inner.n_vars());
        self.inner
            .gens()
            .iter()
            .map(|g| g.to_string_with(&labels))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.inner.is_unit()
    }

    fn contains(&self, vars: Vec<usize>) -> PyResult<bool> {
        Ok(self
            .inner
            .contains(monomial_from_indices(vars, self.inner.n_vars())?))
    }

    fn colon(&self, vars: Vec<usize>) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self
                .inner
                .colon(monomial_from_indices(vars, self.inner.n_vars())?),
        })
    }

    fn add(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.intersect(&other.inner).map_err(err)?,
        })
    }

    fn scale(&self, vars: Vec<usize>) -> PyResult<PyIdeal> {
        let m = monomial_from_indices(vars, self.inner.n_vars())?;
        Ok(PyIdeal {
            inner: self.inner.scale(m).map_err(err)?,
        })
    }

    fn extended(&self, n_vars: usize) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.extended(n_vars).map_err(err)?,
        })
    }

    /// Partition the generators by divisibility by variable `v`.
    fn split_at(&self, v: usize) -> PyResult<(PyIdeal, PyIdeal)> {
        let (j, k) = self.inner.split_at(v).map_err(err)?;
        Ok((PyIdeal { inner: j }, PyIdeal { inner: k }))
    }

    fn stanley_reisner_complex(&self) -> PyResult<PyComplex> {
        Ok(PyComplex {
            inner: stanley_reisner_complex(&self.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "MonomialIdeal(n_vars={}, gens={})",
            self.inner.n_vars(),
            self.generator_strings().join(" + ")
        )
    }
}

#[pyclass(name = "SimplicialComplex", frozen)]
#[derive(Clone)]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(n_vertices: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        if n_vertices > 32 {
            return Err(PyValueError::new_err("at most 32 vertices"));
        }
        Ok(PyComplex {
            inner: SimplicialComplex::from_faces(
                n_vertices,
                facets.into_iter().map(bits::from_indices),
            ),
        })
    }

    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets().iter().map(|&f| bits::to_vec(f)).collect()
    }

    fn is_face(&self, face: Vec<usize>) -> bool {
        self.inner.is_face(bits::from_indices(face))
    }

    fn dimension(&self) -> Option<i32> {
        self.inner.dimension()
    }

    fn reduced_euler_characteristic(&self) -> PyResult<i64> {
        self.inner.reduced_euler_characteristic().map_err(err)
    }

    fn stanley_reisner_ideal(&self) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: stanley_reisner_ideal(&self.inner).map_err(err)?,
        })
    }

    /// Reduced homology ranks over GF(p), keyed by dimension.
    #[pyo3(signature = (p = 2))]
    fn homology_ranks<'py>(&self, py: Python<'py>, p: u32) -> PyResult<Bound<'py, PyDict>> {
        let profile = reduced_homology_ranks(&self.inner, p).map_err(err)?;
        let dict = PyDict::new(py);
        for (dim, rank) in profile.ranks {
            dict.set_item(dim, rank)?;
        }
        Ok(dict)
    }

    #[pyo3(signature = (p = 2))]
    fn homological_dimension(&self, p: u32) -> PyResult<Option<i32>> {
        homological_dimension(&self.inner, p).map_err(err)
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(n={}, facets={:?})",
            self.inner.n_vertices(),
            self.facets()
        )
    }
}

#[pyclass(name = "BettiTable", frozen)]
#[derive(Clone)]
struct PyBettiTable {
    inner: BettiTable,
}

#[pymethods]
impl PyBettiTable {
    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    fn field_char(&self) -> u32 {
        self.inner.field_char()
    }

    /// Sparse entries as (i, j, count) triples sorted by (i, j).
    fn entries(&self) -> Vec<(usize, usize, u64)> {
        self.inner.entries().collect()
    }

    fn entry(&self, i: usize, j: usize) -> u64 {
        self.inner.entry(i, j)
    }

    fn regularity(&self) -> usize {
        self.inner.regularity()
    }

    fn projective_dimension(&self) -> usize {
        self.inner.projective_dimension()
    }

    fn convolve(&self, other: &PyBettiTable) -> PyBettiTable {
        PyBettiTable {
            inner: self.inner.convolve(&other.inner),
        }
    }

    fn pretty(&self) -> String {
        self.inner.pretty_string()
    }

    fn to_json(&self) -> String {
        self.inner.to_json_value().to_string()
    }

    fn __eq__(&self, other: &PyBettiTable) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "BettiTable(p={}, reg={}, pd={})",
            self.inner.field_char(),
            self.inner.regularity(),
            self.inner.projective_dimension()
        )
    }
}

/// Betti table of R/I by the induced-subcomplex homology engine.
#[pyfunction]
#[pyo3(signature = (ideal, p = 2, jobs = 0))]
fn betti(ideal: &PyIdeal, p: u32, jobs: usize) -> PyResult<PyBettiTable> {
    Ok(PyBettiTable {
        inner: betti_table_hochster_with_jobs(&ideal.inner, p, jobs).map_err(err)?,
    })
}

/// Independent Taylor-complex oracle for the same table.
#[pyfunction]
#[pyo3(signature = (ideal, p = 2))]
fn betti_taylor(ideal: &PyIdeal, p: u32) -> PyResult<PyBettiTable> {
    Ok(PyBettiTable {
        inner: betti_table_taylor(&ideal.inner, p).map_err(err)?,
    })
}

/// Betti-splitting check at a variable; returns a dict with the verdict,
/// the pd recursion flag, and the residual rows.
#[pyfunction]
#[pyo3(signature = (ideal, v, p = 2))]
fn betti_splitting<'py>(
    py: Python<'py>,
    ideal: &PyIdeal,
    v: usize,
    p: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let report = betti_splitting_report(&ideal.inner, v, p).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("variable", report.variable)?;
    dict.set_item("p", report.field_char)?;
    dict.set_item("verdict", report.verdict)?;
    dict.set_item("pd_recursion_holds", report.pd_recursion_holds)?;
    dict.set_item("pd_total", report.pd_total)?;
    dict.set_item("pd_j", report.pd_j)?;
    dict.set_item("pd_k", report.pd_k)?;
    dict.set_item("pd_intersection", report.pd_intersection)?;
    let rows: Vec<(usize, usize, i64)> = report
        .rows
        .iter()
        .map(|r| (r.i, r.j, r.residual))
        .collect();
    dict.set_item("residuals", rows)?;
    Ok(dict)
}

/// Check the one-extra-variable shift identity for an ideal.
#[pyfunction]
#[pyo3(signature = (ideal, p = 2))]
fn shift_check(ideal: &PyIdeal, p: u32) -> PyResult<bool> {
    Ok(shift_check_extra_variable(&ideal.inner, p).map_err(err)?.verdict)
}

/// Run a named verification suite; returns the JSON report as a string.
#[pyfunction]
#[pyo3(signature = (name, n_max = None, p = 2, seed = 2026, jobs = 0))]
fn run_suite(name: &str, n_max: Option<usize>, p: u32, seed: u64, jobs: usize) -> PyResult<String> {
    let report = verify::run_suite(name, n_max, p, seed, jobs).map_err(err)?;
    Ok(report.to_json_value().to_string())
}

/// Tree isomorphism classes on n vertices.
#[pyfunction]
fn trees(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate::trees_dedup(n)
        .map_err(err)?
        .into_iter()
        .map(|g| PyGraph { inner: g })
        .collect())
}

/// Graph isomorphism classes on n vertices.
#[pyfunction]
#[pyo3(signature = (n, connected = false))]
fn graphs(n: usize, connected: bool) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate::graphs_dedup(n, connected)
        .map_err(err)?
        .into_iter()
        .map(|g| PyGraph { inner: g })
        .collect())
}

/// Unicyclic isomorphism classes on n vertices.
#[pyfunction]
fn unicyclic(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate::unicyclic_dedup(n)
        .map_err(err)?
        .into_iter()
        .map(|g| PyGraph { inner: g })
        .collect())
}

#[pymodule]
fn nil_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyBettiTable>()?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(betti_taylor, m)?)?;
    m.add_function(wrap_pyfunction!(betti_splitting, m)?)?;
    m.add_function(wrap_pyfunction!(shift_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(graphs, m)?)?;
    m.add_function(wrap_pyfunction!(unicyclic, m)?)?;
    m.add("SUITE_NAMES", verify::SUITE_NAMES.to_vec())?;
    Ok(())
}
