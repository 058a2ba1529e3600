//! Python bindings exposing the main mixed-graph types and operations.
//!
//! Build with `cargo build --release -p hermix-py`, rename the produced
//! `libhermix_py.so` to `hermix_py.so` somewhere on `PYTHONPATH`, and
//! `import hermix_py`; `python/smoke_test.py` automates this.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hermix::classify::{self, CycleKind, FamilyParams};
use hermix::core::{self, T6};
use hermix::harness;
use hermix::nmatrix;
use hermix::switching;

fn err(e: hermix::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A mixed graph: a simple graph with a subset of edges oriented.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct MixedGraph {
    inner: core::MixedGraph,
}

#[pymethods]
impl MixedGraph {
    /// Builds from (u, v, kind) triples with kind "U" (undirected),
    /// "F" (arc u->v) or "B" (arc v->u).
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize, String)>) -> PyResult<Self> {
        let list: Vec<(usize, usize, T6)> = edges
            .into_iter()
            .map(|(u, v, k)| {
                let gain = match k.as_str() {
                    "U" => Ok(T6::ONE),
                    "F" => Ok(T6::OMEGA),
                    "B" => Ok(T6::OMEGA_BAR),
                    other => Err(PyValueError::new_err(format!(
                        "edge kind {other:?} is not U, F or B"
                    ))),
                }?;
                Ok((u, v, gain))
            })
            .collect::<PyResult<_>>()?;
        Ok(MixedGraph {
            inner: core::MixedGraph::new(n, &list).map_err(err)?,
        })
    }

    /// Parses the line-oriented text format ("n m" header, then "u v K").
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(MixedGraph {
            inner: core::parse_graph(text).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        core::serialize_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    /// The (u,v) matrix entry as an exponent of omega, or None.
    fn gain(&self, u: usize, v: usize) -> Option<u8> {
        self.inner.gain(u, v).map(|g| g.exponent())
    }

    fn converse(&self) -> MixedGraph {
        MixedGraph {
            inner: self.inner.converse(),
        }
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!(
            "MixedGraph(n={}, m={}, \"{}\")",
            self.inner.n(),
            self.inner.m(),
            core::serialize_graph(&self.inner).replace('\n', "; ")
        )
    }

    fn __eq__(&self, other: &MixedGraph) -> bool {
        self.inner == other.inner
    }
}

/// Exact characteristic polynomial coefficients [1, c1, ..., cn]
/// (determinant route).
#[pyfunction]
fn charpoly(g: &MixedGraph) -> PyResult<Vec<i128>> {
    Ok(nmatrix::charpoly_of(&g.inner).map_err(err)?.coeffs().to_vec())
}

/// Same polynomial through the elementary-subgraph expansion (n <= 12).
#[pyfunction]
fn charpoly_subgraphs(g: &MixedGraph) -> PyResult<Vec<i128>> {
    Ok(nmatrix::charpoly_subgraphs(&g.inner)
        .map_err(err)?
        .coeffs()
        .to_vec())
}

/// Human-readable polynomial, e.g. "x^3 - 3*x + 1".
#[pyfunction]
fn charpoly_pretty(g: &MixedGraph) -> PyResult<String> {
    Ok(nmatrix::charpoly_of(&g.inner).map_err(err)?.pretty())
}

/// Numeric eigenvalues, sorted descending.
#[pyfunction]
#[pyo3(signature = (g, tol = 1e-12))]
fn eigenvalues(g: &MixedGraph, tol: f64) -> PyResult<Vec<f64>> {
    Ok(nmatrix::eigenvalues(&nmatrix::build_nmatrix(&g.inner), tol)
        .map_err(err)?
        .eigenvalues)
}

#[pyfunction]
fn spectral_radius(g: &MixedGraph) -> PyResult<f64> {
    let s = nmatrix::eigenvalues_of(&g.inner).map_err(err)?;
    nmatrix::spectral_radius(&s).map_err(err)
}

/// Exact (rank, nullity) of the adjacency matrix.
#[pyfunction]
fn rank(g: &MixedGraph) -> (usize, usize) {
    let r = classify::rank_exact(&g.inner);
    (r.rank, r.nullity)
}

/// Exact decision: all eigenvalues in (-sqrt(alpha2), sqrt(alpha2)) for
/// alpha2 in {2, 3, 4}.
#[pyfunction]
fn radius_strictly_below(g: &MixedGraph, alpha2: u32) -> PyResult<bool> {
    nmatrix::radius_strictly_below(&g.inner, alpha2).map_err(err)
}

/// (below, catalog_tag) at the chosen threshold.
#[pyfunction]
fn classify_radius(g: &MixedGraph, alpha2: u32) -> PyResult<(bool, Option<String>)> {
    let c = classify::small_radius_classify(&g.inner, alpha2).map_err(err)?;
    Ok((c.below, c.catalog_tag))
}

/// Switching-equivalence witness: (theta exponents, used_converse), or None.
#[pyfunction]
fn switching_equivalent(a: &MixedGraph, b: &MixedGraph) -> Option<(Vec<u8>, bool)> {
    match switching::switching_equivalent(&a.inner, &b.inner) {
        switching::Equivalence::Equivalent {
            theta,
            used_converse,
        } => Some((
            theta.theta.iter().map(|t| t.exponent()).collect(),
            used_converse,
        )),
        _ => None,
    }
}

/// Applies a switching function given as omega-exponents.
#[pyfunction]
fn apply_switching(g: &MixedGraph, theta: Vec<i64>) -> PyResult<MixedGraph> {
    let f = switching::SwitchingFunction {
        theta: theta.into_iter().map(T6::new).collect(),
    };
    Ok(MixedGraph {
        inner: switching::apply_switching(&g.inner, &f).map_err(err)?,
    })
}

/// Two-way switching with respect to the vertex set w.
#[pyfunction]
fn two_way_switch(g: &MixedGraph, w: Vec<usize>) -> PyResult<MixedGraph> {
    Ok(MixedGraph {
        inner: switching::two_way_switch(&g.inner, &w).map_err(err)?,
    })
}

/// Whether a connected mixed graph is switching equivalent to its
/// underlying graph.
#[pyfunction]
fn underlying_cospectral(g: &MixedGraph) -> PyResult<bool> {
    switching::underlying_cospectral(&g.inner).map_err(err)
}

/// Twin reduction: (reduced graph, representative map).
#[pyfunction]
fn twin_reduction(g: &MixedGraph) -> (MixedGraph, Vec<usize>) {
    let red = switching::twin_reduction(&g.inner);
    (
        MixedGraph { inner: red.reduced },
        red.representative,
    )
}

/// Family constructors: kind "path" [n], "ytree" [a, b, c], "box"
/// [a, b, c, d], or "cycle"/"cycle+"/"cycle-"/"cycle=" [n].
#[pyfunction]
fn build_family(kind: &str, params: Vec<usize>) -> PyResult<MixedGraph> {
    let bad_arity =
        || PyValueError::new_err(format!("wrong parameter count for {kind:?}"));
    let fp = match kind {
        "path" => FamilyParams::Path {
            n: *params.first().ok_or_else(bad_arity)?,
        },
        "ytree" => match params[..] {
            [a, b, c] => FamilyParams::YTree { a, b, c },
            _ => return Err(bad_arity()),
        },
        "box" => match params[..] {
            [a, b, c, d] => FamilyParams::BoxGraph { a, b, c, d },
            _ => return Err(bad_arity()),
        },
        "cycle" | "cycle+" | "cycle-" | "cycle=" => {
            let n = *params.first().ok_or_else(bad_arity)?;
            let k = match kind {
                "cycle" => CycleKind::Positive,
                "cycle+" => CycleKind::SemiPositive,
                "cycle-" => CycleKind::SemiNegative,
                _ => CycleKind::Negative,
            };
            FamilyParams::Cycle { n, kind: k }
        }
        other => {
            return Err(PyValueError::new_err(format!("unknown family {other:?}")))
        }
    };
    Ok(MixedGraph {
        inner: classify::build_family(&fp).map_err(err)?,
    })
}

/// All 3^m orientations of the underlying graph of g.
#[pyfunction]
fn enumerate_orientations(g: &MixedGraph) -> PyResult<Vec<MixedGraph>> {
    Ok(harness::enumerate_orientations(&g.inner.underlying())
        .map_err(err)?
        .map(|inner| MixedGraph { inner })
        .collect())
}

/// Runs a named verification suite; returns (pass, report text).
#[pyfunction]
fn verify_suite(name: &str, nmax: usize) -> PyResult<(bool, String)> {
    let r = harness::verify_suite(name, nmax).map_err(err)?;
    Ok((r.pass, r.render()))
}

#[pymodule]
fn hermix_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<MixedGraph>()?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_subgraphs, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_pretty, m)?)?;
    m.add_function(wrap_pyfunction!(eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(radius_strictly_below, m)?)?;
    m.add_function(wrap_pyfunction!(classify_radius, m)?)?;
    m.add_function(wrap_pyfunction!(switching_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(apply_switching, m)?)?;
    m.add_function(wrap_pyfunction!(two_way_switch, m)?)?;
    m.add_function(wrap_pyfunction!(underlying_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(twin_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_orientations, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
