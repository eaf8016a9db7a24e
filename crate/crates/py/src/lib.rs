//! Python module `catalan_hankel`.
//!
//! Rational values come back as `fractions.Fraction`; rational arguments
//! accept `int`, `Fraction` or a `"p/q"` string. Floats are refused.

use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyString};

use hankel_core::error::Error;
use hankel_core::exact::scalar::parse_scalar;
use hankel_core::exact::{Poly, Scalar};
use hankel_core::hankel::table::hankel_det_formal;
use hankel_core::hankel::PolyKind;
use hankel_core::ortho::{MomentSequence, SequenceFamily};
use hankel_core::staircase::checks::{endpoints, forward, inverse};
use hankel_core::staircase::{Model, PathFamily, PlanePartition};
use hankel_core::suites::{run_suite, Suite};

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_fraction<'py>(py: Python<'py>, v: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((v.numer().clone(), v.denom().clone()))
}

fn scalar_arg(ob: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if ob.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "floats are not exact; pass an int, Fraction or \"p/q\" string",
        ));
    }
    if let Ok(s) = ob.cast::<PyString>() {
        return parse_scalar(s.to_str()?).map_err(value_error);
    }
    match (ob.getattr("numerator"), ob.getattr("denominator")) {
        (Ok(p), Ok(q)) => {
            let (p, q): (BigInt, BigInt) = (p.extract()?, q.extract()?);
            if q == BigInt::from(0) {
                return Err(value_error(Error::DivisionByZero));
            }
            Ok(Scalar::new(p, q))
        }
        _ => Err(PyTypeError::new_err(format!(
            "expected an exact rational, got {}",
            ob.get_type().name()?
        ))),
    }
}

fn opt_scalar(ob: Option<&Bound<'_, PyAny>>) -> PyResult<Option<Scalar>> {
    ob.map(scalar_arg).transpose()
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(value_error)
}

fn sequence(family: &str, b: Option<&Bound<'_, PyAny>>) -> PyResult<MomentSequence> {
    MomentSequence::new(parse::<SequenceFamily>(family)?, opt_scalar(b)?).map_err(value_error)
}

/// Polynomial in `b` and `x` with rational coefficients.
#[pyclass(name = "Poly", module = "catalan_hankel", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly(pub Poly);

#[pymethods]
impl PyPoly {
    /// Parse the canonical rendering, e.g. `"b*x + 1"` or `"(1 + x)^2/1"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPoly(parse(text)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-self.0.clone())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn degree_x(&self) -> Option<usize> {
        self.0.degree_x()
    }

    fn degree_b(&self) -> Option<usize> {
        self.0.degree_b()
    }

    /// Coefficient of `x^i b^j`.
    fn coeff<'py>(&self, py: Python<'py>, i: usize, j: usize) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.coeff(i, j))
    }

    fn eval<'py>(&self, py: Python<'py>, b: &Bound<'py, PyAny>, x: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.eval(&scalar_arg(b)?, &scalar_arg(x)?))
    }

    fn specialize_b(&self, b: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.specialize_b(&scalar_arg(b)?)))
    }

    fn eval_x(&self, x: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.eval_x(&scalar_arg(x)?)))
    }
}

/// Closed-form polynomial `which` (`H`, `Hb`, `H2`, `V` or `h`) of index `n`.
#[pyfunction]
fn poly(which: &str, n: usize) -> PyResult<PyPoly> {
    Ok(PyPoly(parse::<PolyKind>(which)?.member(n)))
}

/// First `count` terms of a moment sequence.
#[pyfunction]
#[pyo3(signature = (family, count, b=None))]
fn sequence_terms<'py>(
    py: Python<'py>,
    family: &str,
    count: usize,
    b: Option<&Bound<'py, PyAny>>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let seq = sequence(family, b)?;
    seq.terms(count).iter().map(|v| to_fraction(py, v)).collect()
}

/// `det(a_{n+i+j})` of size `k` for a moment sequence.
#[pyfunction]
#[pyo3(signature = (family, n, k, b=None))]
fn hankel_det<'py>(
    py: Python<'py>,
    family: &str,
    n: usize,
    k: usize,
    b: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let seq = sequence(family, b)?;
    to_fraction(py, &hankel_core::hankel::hankel_det(&seq, n, k))
}

/// The same determinant with `b` left symbolic.
#[pyfunction]
fn hankel_det_symbolic(family: &str, n: usize, k: usize) -> PyResult<PyPoly> {
    Ok(PyPoly(hankel_det_formal(parse(family)?, n, k)))
}

/// Every plane partition of staircase shape `(n-1, ..., 1)` with entries in `[0, k]`.
#[pyfunction]
fn enumerate_pp(n: usize, k: u32) -> PyResult<Vec<String>> {
    Ok(hankel_core::staircase::enumerate_pp(n, k)
        .map_err(value_error)?
        .map(|p| p.to_string())
        .collect())
}

#[pyfunction]
fn count_pp(n: usize, k: u32) -> PyResult<u64> {
    hankel_core::staircase::count_pp(n, k).map_err(value_error)
}

/// Nonintersecting path count for the `dyck` or `hv` encoding of the `(n, k)` staircase.
#[pyfunction]
fn lgv_count(model: &str, n: usize, k: usize) -> PyResult<BigInt> {
    let model: Model = parse(model)?;
    let (a, e) = endpoints(model, n, k);
    hankel_core::staircase::lgv_count(&a, &e, model).map_err(value_error)
}

/// Path family of a partition given as `"2,1;0"` with entry bound `k`.
#[pyfunction]
fn pp_to_paths(partition: &str, k: u32, model: &str) -> PyResult<String> {
    let p = PlanePartition::parse(partition, k).map_err(value_error)?;
    Ok(forward(parse(model)?, &p).to_string())
}

/// Partition of a path family; `n` is the staircase size.
#[pyfunction]
fn paths_to_pp(family: &str, n: usize, model: &str) -> PyResult<String> {
    let model: Model = parse(model)?;
    let f = PathFamily::parse(family, model).map_err(value_error)?;
    Ok(inverse(model, &f, n).map_err(value_error)?.to_string())
}

/// Run a verification suite and return its report as JSON text.
#[pyfunction]
#[pyo3(signature = (suite, n_max=None, k_max=None, b=None, cap=100_000))]
fn verify(
    py: Python<'_>,
    suite: &str,
    n_max: Option<usize>,
    k_max: Option<usize>,
    b: Option<Vec<Bound<'_, PyAny>>>,
    cap: u64,
) -> PyResult<String> {
    let suite: Suite = parse(suite)?;
    let mut p = suite.default_params();
    p.n_max = n_max.unwrap_or(p.n_max);
    p.k_max = k_max.unwrap_or(p.k_max);
    p.bs = b
        .map(|bs| bs.iter().map(scalar_arg).collect::<PyResult<_>>())
        .transpose()?;
    p.cap = cap;
    let report = py.detach(|| run_suite(suite, &p)).map_err(value_error)?;
    Ok(report.to_json(None).to_string())
}

#[pymodule]
pub fn catalan_hankel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_terms, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_det, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_det_symbolic, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pp, m)?)?;
    m.add_function(wrap_pyfunction!(count_pp, m)?)?;
    m.add_function(wrap_pyfunction!(lgv_count, m)?)?;
    m.add_function(wrap_pyfunction!(pp_to_paths, m)?)?;
    m.add_function(wrap_pyfunction!(paths_to_pp, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
