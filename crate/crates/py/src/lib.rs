//! Python bindings: the main types and operations, with polynomials as
//! lists of Python ints (constant term first) and matching-number
//! sequences as lists of ints.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bichroma_core::error::Error;
use bichroma_core::{alphan, chromatic, graph, matchings, oracle, poly, reflect};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_poly(coeffs: Vec<BigInt>) -> poly::IntPoly {
    poly::IntPoly::new(coeffs)
}

fn poly_out(p: &poly::IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn counts_out(m: &matchings::MatchingNumbers) -> Vec<BigInt> {
    m.counts().to_vec()
}

fn params_from(tuple: [u64; 6]) -> graph::ThreeCliqueParams {
    graph::ThreeCliqueParams::new(tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5])
}

/// A (j,k)-biclique given by the complement edges inside K_{j,k}.
#[pyclass]
struct Biclique {
    inner: graph::BicliqueSpec,
}

#[pymethods]
impl Biclique {
    #[new]
    fn new(j: usize, k: usize, complement_edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Biclique {
            inner: graph::BicliqueSpec::new(j, k, complement_edges).map_err(err)?,
        })
    }

    /// Build a (3,k)-biclique from the 6-tuple (a,b,c,d,e,f).
    #[staticmethod]
    fn from_params(params: [u64; 6]) -> PyResult<Self> {
        Ok(Biclique {
            inner: graph::from_params(&params_from(params)).map_err(err)?,
        })
    }

    #[getter]
    fn j(&self) -> usize {
        self.inner.j
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn complement_edges(&self) -> Vec<(usize, usize)> {
        self.inner.complement_edges.iter().copied().collect()
    }

    fn is_strict(&self) -> bool {
        self.inner.is_strict()
    }

    fn swap_sides(&self) -> Biclique {
        Biclique {
            inner: self.inner.swap_sides(),
        }
    }

    fn complement_partner(&self) -> Biclique {
        Biclique {
            inner: graph::complement_partner(&self.inner),
        }
    }

    /// Counts of i-matchings of the bipartite complement.
    fn matching_numbers(&self) -> Vec<BigInt> {
        counts_out(&matchings::matching_numbers(&self.inner))
    }

    /// Exact chromatic polynomial, constant term first.
    fn chromatic_polynomial(&self) -> Vec<BigInt> {
        poly_out(&chromatic::chromatic_polynomial(&self.inner))
    }

    /// The monic degree-min(j,k) factor after (x)_max(j,k).
    fn interesting_factor(&self) -> Vec<BigInt> {
        poly_out(&chromatic::interesting_factor(&self.inner))
    }

    /// Number of acyclic orientations, via (−1)^{j+k} P(−1).
    fn acyclic_count(&self) -> BigInt {
        chromatic::acyclic_count(&self.inner)
    }

    /// Removes universal vertices: (removed_left, removed_right, reduced),
    /// where reduced is None when the graph was complete.
    fn strip_universal(&self) -> (usize, usize, Option<Biclique>) {
        let res = graph::strip_universal(&self.inner);
        (
            res.removed_left,
            res.removed_right,
            res.reduced.map(|inner| Biclique { inner }),
        )
    }

    /// Edges of the biclique itself (cliques plus bridging pairs).
    fn graph_edges(&self) -> Vec<(usize, usize)> {
        graph::to_simple_graph(&self.inner)
            .edges
            .iter()
            .copied()
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Biclique(j={}, k={}, complement_edges={} edges)",
            self.inner.j,
            self.inner.k,
            self.inner.complement_edges.len()
        )
    }
}

/// The monic falling factorial (x−shift)(x−shift−1)⋯, m factors.
#[pyfunction]
#[pyo3(signature = (m, shift = 0))]
fn falling_factorial(m: usize, shift: i64) -> Vec<BigInt> {
    poly_out(&poly::falling_factorial(m, shift))
}

/// p(x + c), exactly.
#[pyfunction]
fn shift_poly(coeffs: Vec<BigInt>, c: i64) -> Vec<BigInt> {
    poly_out(&to_poly(coeffs).shift(c))
}

/// (−1)^deg(p) · p(−x + c).
#[pyfunction]
fn reflect_poly(coeffs: Vec<BigInt>, c: i64) -> Vec<BigInt> {
    poly_out(&to_poly(coeffs).reflect(c))
}

/// Exact integer evaluation p(q).
#[pyfunction]
fn eval_poly(coeffs: Vec<BigInt>, q: BigInt) -> BigInt {
    to_poly(coeffs).eval(&q)
}

/// Coefficients c_n with p = Σ c_n (x)_n, as a dict {n: c_n}.
#[pyfunction]
fn to_complete_graph_basis(py: Python<'_>, coeffs: Vec<BigInt>) -> PyResult<Py<PyDict>> {
    let series = poly::to_complete_graph_basis(&to_poly(coeffs));
    let dict = PyDict::new(py);
    for (&n, c) in series.entries() {
        dict.set_item(n, c.clone())?;
    }
    Ok(dict.into())
}

/// Inverse of `to_complete_graph_basis`.
#[pyfunction]
fn from_complete_graph_basis(entries: std::collections::BTreeMap<usize, BigInt>) -> Vec<BigInt> {
    poly_out(&poly::from_complete_graph_basis(&poly::FFSeries::new(
        entries,
    )))
}

/// The j=3 interesting factor straight from the 6-tuple.
#[pyfunction]
fn interesting_factor_3k(params: [u64; 6]) -> Vec<BigInt> {
    poly_out(&chromatic::interesting_factor_3k(&params_from(params)))
}

/// Matching numbers of the K_{j,k}-complement of a graph with the given
/// matching numbers. Requires j ≤ k.
#[pyfunction]
fn complement_matching_numbers(m: Vec<BigInt>, j: usize, k: usize) -> PyResult<Vec<BigInt>> {
    let m = matchings::MatchingNumbers::new(m);
    Ok(counts_out(
        &matchings::complement_matching_numbers(&m, j, k).map_err(err)?,
    ))
}

/// The reflection condition on matching sequences, checked exactly.
#[pyfunction]
fn theorem2_condition(
    m_g: Vec<BigInt>,
    m_h: Vec<BigInt>,
    j: usize,
    k_g: i64,
    k_h: i64,
    c: i64,
) -> bool {
    matchings::theorem2_condition(
        &matchings::MatchingNumbers::new(m_g),
        &matchings::MatchingNumbers::new(m_h),
        j,
        k_g,
        k_h,
        c,
    )
}

/// The unique d with g(x) = h(x+d), or None.
#[pyfunction]
fn find_translation(g: Vec<BigInt>, h: Vec<BigInt>) -> PyResult<Option<i64>> {
    reflect::find_translation(&to_poly(g), &to_poly(h)).map_err(err)
}

/// The unique c with g(x) = (−1)^j h(−x+c), or None.
#[pyfunction]
fn find_reflection(g: Vec<BigInt>, h: Vec<BigInt>) -> PyResult<Option<i64>> {
    reflect::find_reflection(&to_poly(g), &to_poly(h)).map_err(err)
}

type FamilyPair = ([u64; 6], [u64; 6], i64);

#[pyfunction]
fn prop5_pair(r: u64, s: u64, t: u64, u: u64) -> PyResult<FamilyPair> {
    let (g, h, c) = reflect::prop5_pair(r, s, t, u).map_err(err)?;
    Ok((g.as_array(), h.as_array(), c))
}

#[pyfunction]
fn prop6_pair(r: u64, s: u64, t: u64, u: u64) -> PyResult<FamilyPair> {
    let (g, h, c) = reflect::prop6_pair(r, s, t, u).map_err(err)?;
    Ok((g.as_array(), h.as_array(), c))
}

#[pyfunction]
fn prop7_pair(r: u64, s: u64, t: u64, u: u64) -> PyResult<FamilyPair> {
    let (g, h, c) = reflect::prop7_pair(r, s, t, u).map_err(err)?;
    Ok((g.as_array(), h.as_array(), c))
}

/// Generate one family pair and verify both the reflection and the
/// matching condition; returns a dict report.
#[pyfunction]
fn verify_family(py: Python<'_>, prop: u8, r: u64, s: u64, t: u64, u: u64) -> PyResult<Py<PyDict>> {
    let report = reflect::verify_family(prop, r, s, t, u).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("prop", report.prop)?;
    dict.set_item("g_params", report.g_params.as_array())?;
    dict.set_item("h_params", report.h_params.as_array())?;
    dict.set_item("expected_shift", report.expected_shift)?;
    dict.set_item("found_shift", report.found_shift)?;
    dict.set_item("theorem_condition", report.theorem_condition)?;
    dict.set_item("below_convention", report.below_convention)?;
    dict.set_item("verified", report.verified)?;
    Ok(dict.into())
}

/// Shift a monic integer cubic to x² coefficient in {−1,0,1}:
/// returns (reduced_coeffs, n0) with q(x) = reduced(x + n0).
#[pyfunction]
fn reduce_cubic(coeffs: Vec<BigInt>) -> PyResult<(Vec<BigInt>, i64)> {
    let (reduced, n0) = alphan::reduce_cubic(&to_poly(coeffs)).map_err(err)?;
    Ok((poly_out(&reduced.to_poly()), n0))
}

/// Full constructive pipeline for a monic integer cubic, coefficients
/// constant term first. Returns a dict with the biclique parameters, the
/// shifts, and the certified factor.
#[pyfunction]
fn alpha_plus_n(py: Python<'_>, coeffs: Vec<BigInt>) -> PyResult<Py<PyDict>> {
    let res = alphan::alpha_plus_n(&to_poly(coeffs)).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("params", res.params.as_array())?;
    dict.set_item("k", res.params.k())?;
    dict.set_item("case", res.state.case)?;
    dict.set_item("t", res.state.t)?;
    dict.set_item("i", res.state.i)?;
    dict.set_item("n", res.n)?;
    dict.set_item("n0", res.n0)?;
    dict.set_item("N", res.total_shift)?;
    dict.set_item("g", poly_out(&res.factor))?;
    dict.set_item("verified", res.verified)?;
    Ok(dict.into())
}

/// P_G(c+1) = C(c+1,k) · (−1)^{j+k} · P_H(−1), checked exactly.
#[pyfunction]
fn reflection_count_identity(g: &Biclique, h: &Biclique, c: i64) -> PyResult<bool> {
    chromatic::reflection_count_identity(&g.inner, &h.inner, c).map_err(err)
}

/// Deletion–contraction chromatic polynomial of an arbitrary graph
/// (n ≤ 12).
#[pyfunction]
fn chromatic_poly_bruteforce(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Vec<BigInt>> {
    let g = graph::SimpleGraph::new(n, edges).map_err(err)?;
    Ok(poly_out(&oracle::chromatic_poly_bruteforce(&g).map_err(err)?))
}

/// Matching counts by edge-subset enumeration (≤ 20 edges).
#[pyfunction]
fn matchings_bruteforce(j: usize, k: usize, edges: Vec<(usize, usize)>) -> PyResult<Vec<BigInt>> {
    Ok(counts_out(
        &oracle::matchings_bruteforce(j, k, &edges).map_err(err)?,
    ))
}

/// Acyclic orientation count by orientation enumeration (≤ 18 edges).
#[pyfunction]
fn acyclic_orientations_bruteforce(n: usize, edges: Vec<(usize, usize)>) -> PyResult<BigInt> {
    let g = graph::SimpleGraph::new(n, edges).map_err(err)?;
    oracle::acyclic_orientations_bruteforce(&g).map_err(err)
}

#[pymodule]
fn bichroma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Biclique>()?;
    m.add_function(wrap_pyfunction!(falling_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(shift_poly, m)?)?;
    m.add_function(wrap_pyfunction!(reflect_poly, m)?)?;
    m.add_function(wrap_pyfunction!(eval_poly, m)?)?;
    m.add_function(wrap_pyfunction!(to_complete_graph_basis, m)?)?;
    m.add_function(wrap_pyfunction!(from_complete_graph_basis, m)?)?;
    m.add_function(wrap_pyfunction!(interesting_factor_3k, m)?)?;
    m.add_function(wrap_pyfunction!(complement_matching_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_condition, m)?)?;
    m.add_function(wrap_pyfunction!(find_translation, m)?)?;
    m.add_function(wrap_pyfunction!(find_reflection, m)?)?;
    m.add_function(wrap_pyfunction!(prop5_pair, m)?)?;
    m.add_function(wrap_pyfunction!(prop6_pair, m)?)?;
    m.add_function(wrap_pyfunction!(prop7_pair, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_plus_n, m)?)?;
    m.add_function(wrap_pyfunction!(reflection_count_identity, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_poly_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(matchings_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(acyclic_orientations_bruteforce, m)?)?;
    Ok(())
}
