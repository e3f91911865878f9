//! Python bindings: each call runs one job and returns the report as a dict.

use clap::ValueEnum;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use symcoh::cli::{self, Cli, Format, JobSpec, Mode, RouteArg};

create_exception!(pysymcoh, SymcohError, PyException);

fn to_py_err(e: symcoh::Error) -> PyErr {
    SymcohError::new_err((e.reason(), e.to_string(), cli::exit_code(&e)))
}

fn parse_enum<T: ValueEnum>(what: &str, s: &str) -> PyResult<T> {
    T::from_str(s, true).map_err(|_| SymcohError::new_err(("Schema", format!("unknown {what} '{s}'"), 2)))
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Runs a job and returns the report dict. Raises `SymcohError` with
/// `(reason, message, exit_code)` on failure.
#[pyfunction]
#[pyo3(signature = (algebra, mode, field=None, module=None, max_degree=5, route=None, cross_check=false, budget=None))]
#[allow(clippy::too_many_arguments)]
fn run<'py>(
    py: Python<'py>,
    algebra: &str,
    mode: &str,
    field: Option<String>,
    module: Option<String>,
    max_degree: usize,
    route: Option<&str>,
    cross_check: bool,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let args = Cli {
        algebra: algebra.to_string(),
        field,
        module,
        mode: parse_enum::<Mode>("mode", mode)?,
        max_degree,
        route: route.map(|r| parse_enum::<RouteArg>("route", r)).transpose()?,
        cross_check,
        format: Format::Json,
        budget,
    };
    let report = py
        .detach(|| JobSpec::from_cli(&args).and_then(|job| cli::run(&job)))
        .map_err(to_py_err)?;
    loads(py, &cli::render_json(&report))
}

/// Hopf axiom report for an algebra.
#[pyfunction]
#[pyo3(signature = (algebra, field=None))]
fn validate<'py>(py: Python<'py>, algebra: &str, field: Option<String>) -> PyResult<Bound<'py, PyAny>> {
    run(py, algebra, "validate", field, None, 1, None, false, None)
}

/// Rows `{n, dim, rank, generators, is_free}` for kC_p over GF(p).
#[pyfunction]
#[pyo3(signature = (p, max_degree=10))]
fn cp_rank_table<'py>(py: Python<'py>, p: u64, max_degree: usize) -> PyResult<Bound<'py, PyAny>> {
    let rows = symcoh::resolution::cp_rank_table(p, max_degree).map_err(to_py_err)?;
    loads(py, &serde_json::to_string(&rows).expect("rows serialize"))
}

#[pymodule]
fn pysymcoh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SymcohError", m.py().get_type::<SymcohError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(cp_rank_table, m)?)?;
    Ok(())
}
