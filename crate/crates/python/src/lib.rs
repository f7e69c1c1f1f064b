//! Python module `secmat`. Every function takes the text of an input file
//! (`ring x, y; ideal ...;`).

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use ::secmat::document::parse_document;
use ::secmat::gin::GinError;
use ::secmat::groebner::{buchberger, leading_term_ideal, IdealPresentation};
use ::secmat::poly::TermOrder;
use ::secmat::sectional::{self as sec, SectionalError, SectionalOptions};

create_exception!(secmat, ParseError, PyValueError, "Malformed input text.");
create_exception!(secmat, SecmatError, PyException, "A computation was rejected or failed.");
create_exception!(secmat, GenericityError, SecmatError, "Random coordinate changes kept disagreeing.");
create_exception!(secmat, InvariantError, SecmatError, "An internal cross-check failed.");

fn sectional_err(e: SectionalError) -> PyErr {
    match e {
        SectionalError::Gin(g) => gin_err(g),
        SectionalError::Invariant(_)
        | SectionalError::GcdDegreeMismatch { .. }
        | SectionalError::GcdNotShared { .. } => InvariantError::new_err(e.to_string()),
        _ => SecmatError::new_err(e.to_string()),
    }
}

fn gin_err(e: GinError) -> PyErr {
    match e {
        GinError::GenericityNotReached { .. } => GenericityError::new_err(e.to_string()),
        GinError::NotStronglyStable(_) => InvariantError::new_err(e.to_string()),
        GinError::Groebner(_) => SecmatError::new_err(e.to_string()),
    }
}

fn ideal(text: &str) -> PyResult<IdealPresentation> {
    let doc = parse_document(text).map_err(|e| ParseError::new_err(e.to_string()))?;
    Ok(doc.ideal())
}

/// Rows of the sectional matrix, `rows[i - 1][d] = M(i, d)`, up to degree
/// `reg + 1` or `max_degree`.
#[pyfunction]
#[pyo3(signature = (text, seed = 42, max_degree = None))]
fn sectional_matrix(text: &str, seed: u64, max_degree: Option<u32>) -> PyResult<Vec<Vec<u64>>> {
    let options = SectionalOptions {
        max_degree,
        ..SectionalOptions::with_seed(seed)
    };
    let m = sec::sectional_matrix_with(&ideal(text)?, options).map_err(sectional_err)?;
    Ok(m.rows().to_vec())
}

/// `M(i, d)` by linear algebra after cutting with random hyperplanes.
#[pyfunction]
#[pyo3(signature = (text, i, d, seed = 42))]
fn oracle_entry(text: &str, i: usize, d: u32, seed: u64) -> PyResult<u64> {
    sec::sectional_matrix_direct_oracle(&ideal(text)?, i, d, seed).map_err(sectional_err)
}

/// Minimal generators of the DegRevLex generic initial ideal.
#[pyfunction]
#[pyo3(signature = (text, seed = 42))]
fn rgin(text: &str, seed: u64) -> PyResult<Vec<String>> {
    let gin = ::secmat::gin::rgin(&ideal(text)?, seed).map_err(gin_err)?;
    Ok(gin.rgin.display_generators())
}

/// Minimal generators of the leading term ideal for `degrevlex`, `lex` or
/// `deglex`.
#[pyfunction]
#[pyo3(signature = (text, order = "degrevlex"))]
fn leading_terms(text: &str, order: &str) -> PyResult<Vec<String>> {
    let order: TermOrder = order.parse().map_err(|e: ::secmat::poly::PolyError| {
        PyValueError::new_err(e.to_string())
    })?;
    let basis = buchberger(&ideal(text)?, order, None)
        .map_err(|e| SecmatError::new_err(e.to_string()))?;
    let lt = leading_term_ideal(&basis).map_err(|e| SecmatError::new_err(e.to_string()))?;
    Ok(lt.display_generators())
}

/// Saturation test through the generic initial ideal.
#[pyfunction]
#[pyo3(signature = (text, seed = 42))]
fn is_saturated(text: &str, seed: u64) -> PyResult<bool> {
    ::secmat::gin::is_saturated(&ideal(text)?, seed).map_err(gin_err)
}

/// The full analysis report as a JSON string (same schema as
/// `secmat analyze --json`).
#[pyfunction]
#[pyo3(signature = (text, seed = 42, max_degree = None))]
fn analyze_json(text: &str, seed: u64, max_degree: Option<u32>) -> PyResult<String> {
    let report = sec::analyze_with(&ideal(text)?, seed, max_degree).map_err(sectional_err)?;
    Ok(serde_json::to_string(&report).expect("plain data serializes"))
}

/// Violated bounds of a table of entries, as `(name, i, d)` triples.
#[pyfunction]
fn check_bounds(rows: Vec<Vec<u64>>) -> PyResult<Vec<(String, usize, u32)>> {
    let width = rows.first().map_or(0, Vec::len);
    if width == 0 || rows.iter().any(|r| r.len() != width) {
        return Err(PyValueError::new_err("expected a non-empty rectangular table"));
    }
    let m = sec::SectionalMatrix::from_rows(rows);
    Ok(sec::check_bounds(&m)
        .into_iter()
        .map(|v| (format!("{:?}", v.inequality).to_lowercase(), v.i, v.d))
        .collect())
}

/// The `i`-binomial expansion of `h` as `(top, bottom)` pairs.
#[pyfunction]
fn binomial_expansion(h: u64, i: u32) -> PyResult<Vec<(u64, u32)>> {
    sec::binomial_expansion(h, i)
        .map(|e| e.terms)
        .map_err(sectional_err)
}

#[pymodule]
#[pyo3(name = "secmat")]
pub fn secmat_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("SecmatError", m.py().get_type::<SecmatError>())?;
    m.add("GenericityError", m.py().get_type::<GenericityError>())?;
    m.add("InvariantError", m.py().get_type::<InvariantError>())?;
    m.add_function(wrap_pyfunction!(sectional_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_entry, m)?)?;
    m.add_function(wrap_pyfunction!(rgin, m)?)?;
    m.add_function(wrap_pyfunction!(leading_terms, m)?)?;
    m.add_function(wrap_pyfunction!(is_saturated, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(check_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_expansion, m)?)?;
    Ok(())
}
