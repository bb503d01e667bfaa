//! Python bindings. Objects cross the boundary as JSON strings in the same
//! schemas the CLI reads and writes.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

use kprom::digraphs;
use kprom::enumerate;
use kprom::harness::{self, SuiteConfig};
use kprom::noncrossing;
use kprom::plabic;
use kprom::promotion::{default_order_bound, promote_power, promotion_order};
use kprom::tableaux::{from_lattice_word, AnyTableau, LatticeWord, Partition};
use kprom::{
    promotion_digraphs as digraphs_of, IncreasingTableau, NoncrossingSetPartition, PlabicGraph,
    PromotionDigraph, StandardTableau,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load<T: DeserializeOwned>(s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(value_err)
}

fn dump<T: Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(value_err)
}

fn shape(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_err)
}

/// Promotion or K-promotion applied `steps` times.
#[pyfunction]
#[pyo3(signature = (tableau, steps = 1))]
fn promote(tableau: &str, steps: usize) -> PyResult<String> {
    let out = match load::<AnyTableau>(tableau)? {
        AnyTableau::Standard(t) => AnyTableau::Standard(promote_power(&t, steps)),
        AnyTableau::Increasing(t) => AnyTableau::Increasing(promote_power(&t, steps)),
    };
    dump(&out)
}

#[pyfunction]
#[pyo3(signature = (tableau, max_iter = None))]
fn order(tableau: &str, max_iter: Option<usize>) -> PyResult<usize> {
    let t = load::<AnyTableau>(tableau)?;
    let bound = max_iter.unwrap_or_else(|| default_order_bound(t.as_dyn().alphabet().size()));
    match &t {
        AnyTableau::Standard(t) => promotion_order(t, bound),
        AnyTableau::Increasing(t) => promotion_order(t, bound),
    }
    .map_err(value_err)
}

/// JSON array of `prom_1, …, prom_{ℓ-1}`.
#[pyfunction]
fn promotion_digraphs(tableau: &str) -> PyResult<String> {
    let ds = match load::<AnyTableau>(tableau)? {
        AnyTableau::Standard(t) => digraphs_of(&t),
        AnyTableau::Increasing(t) => digraphs_of(&t),
    }
    .map_err(value_err)?;
    dump(&ds)
}

#[pyfunction]
fn digraph_dot(digraph: &str) -> PyResult<String> {
    Ok(load::<PromotionDigraph>(digraph)?.to_dot())
}

#[pyfunction]
fn reconstruct_standard(digraphs: &str, parts: Vec<usize>) -> PyResult<String> {
    let ds: Vec<PromotionDigraph> = load(digraphs)?;
    let t = digraphs::reconstruct_standard(&ds, &shape(parts)?).map_err(value_err)?;
    dump(&t)
}

#[pyfunction]
fn reconstruct_rect_increasing(digraphs: &str, rows: usize, cols: usize, q: u32) -> PyResult<String> {
    let ds: Vec<PromotionDigraph> = load(digraphs)?;
    let t = digraphs::reconstruct_rect_increasing(&ds, rows, cols, q).map_err(value_err)?;
    dump(&t)
}

/// Compact lattice word, e.g. `"1 2 1 {1,2}"`.
#[pyfunction]
fn lattice_word(tableau: &str) -> PyResult<String> {
    let t = load::<AnyTableau>(tableau)?;
    Ok(t.as_dyn().lattice_word().map_err(value_err)?.to_string())
}

#[pyfunction]
fn from_lattice(word: &str) -> PyResult<String> {
    let w: LatticeWord = word.parse().map_err(value_err)?;
    dump(&from_lattice_word(&w).map_err(value_err)?)
}

#[pyfunction]
fn tograph(tableau: &str) -> PyResult<String> {
    let t: StandardTableau = load(tableau)?;
    dump(&noncrossing::tograph(&t).map_err(value_err)?)
}

#[pyfunction]
fn pi(tableau: &str) -> PyResult<String> {
    let t: IncreasingTableau = load(tableau)?;
    dump(&noncrossing::pi_bijection(&t).map_err(value_err)?)
}

#[pyfunction]
fn pi_inverse(partition: &str, cols: usize) -> PyResult<String> {
    let p: NoncrossingSetPartition = load(partition)?;
    dump(&noncrossing::pi_inverse(&p, cols).map_err(value_err)?)
}

#[pyfunction]
fn rotate_partition(partition: &str) -> PyResult<String> {
    let p: NoncrossingSetPartition = load(partition)?;
    dump(&noncrossing::rotate_partition(&p))
}

#[pyfunction]
fn partition_to_plabic(partition: &str) -> PyResult<String> {
    let p: NoncrossingSetPartition = load(partition)?;
    dump(&plabic::partition_to_plabic(&p))
}

#[pyfunction]
fn classify(web: &str) -> PyResult<String> {
    dump(&plabic::classify(&load::<PlabicGraph>(web)?))
}

#[pyfunction]
fn trip_digraph(web: &str, i: usize, r: usize) -> PyResult<String> {
    let g: PlabicGraph = load(web)?;
    dump(&plabic::trip_digraph(&g, i, r).map_err(value_err)?.to_digraph())
}

#[pyfunction]
fn enumerate_syt(parts: Vec<usize>) -> PyResult<Vec<String>> {
    enumerate::enumerate_syt(&shape(parts)?)
        .map_err(value_err)?
        .map(|t| dump(&t))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (parts, q, packed_only = false))]
fn enumerate_increasing(parts: Vec<usize>, q: u32, packed_only: bool) -> PyResult<Vec<String>> {
    enumerate::enumerate_increasing(&shape(parts)?, q, packed_only)
        .map_err(value_err)?
        .map(|t| dump(&t))
        .collect()
}

#[pyfunction]
fn enumerate_nc_partitions(q: u32) -> PyResult<Vec<String>> {
    enumerate::enumerate_nc_partitions(q)
        .map_err(value_err)?
        .map(|p| dump(&p))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (n, k, max_interior = 8))]
fn enumerate_flamingo(n: usize, k: usize, max_interior: usize) -> PyResult<Vec<String>> {
    enumerate::enumerate_flamingo(n, k, max_interior)
        .map_err(value_err)?
        .iter()
        .map(dump)
        .collect()
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    harness::CHECK_IDS.to_vec()
}

/// Runs one harness check; `config` is a JSON object of suite bounds
/// (missing keys take their defaults). Returns JSON reports.
#[pyfunction]
#[pyo3(signature = (check_id, config = None))]
fn run_check(py: Python<'_>, check_id: &str, config: Option<&str>) -> PyResult<Vec<String>> {
    let cfg: SuiteConfig = match config {
        Some(c) => load(c)?,
        None => SuiteConfig::default(),
    };
    if !harness::CHECK_IDS.contains(&check_id) {
        return Err(PyKeyError::new_err(check_id.to_string()));
    }
    let reports = py
        .detach(|| harness::run_check(check_id, &cfg))
        .map_err(value_err)?;
    reports.iter().map(dump).collect()
}

#[pymodule]
fn kprom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(promote, m)?)?;
    m.add_function(wrap_pyfunction!(order, m)?)?;
    m.add_function(wrap_pyfunction!(promotion_digraphs, m)?)?;
    m.add_function(wrap_pyfunction!(digraph_dot, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct_standard, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct_rect_increasing, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_word, m)?)?;
    m.add_function(wrap_pyfunction!(from_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(tograph, m)?)?;
    m.add_function(wrap_pyfunction!(pi, m)?)?;
    m.add_function(wrap_pyfunction!(pi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_partition, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_plabic, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(trip_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_syt, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_increasing, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_nc_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_flamingo, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    Ok(())
}
