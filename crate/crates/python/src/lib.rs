// SPDX-License-Identifier: Apache-2.0

//! Python bindings. Field elements cross the boundary in power notation:
//! an exponent `k` for `α^k` and `None` for zero (the string `"zero"` is
//! accepted on input too).

use std::sync::Arc;

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use skewcyclic::bch::{self, SkewBchCode};
use skewcyclic::distance::DistanceOptions;
use skewcyclic::divisors;
use skewcyclic::io::{load_field, parse_poly};
use skewcyclic::{Elem, Error, SkewCyclicCode, SkewPoly, SkewRing};

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[derive(FromPyObject)]
enum PowerArg {
    Exp(i64),
    Token(String),
}

/// An element in power notation; `None` is zero.
type Power = Option<PowerArg>;

fn to_elem(f: &skewcyclic::Field, p: &Power) -> PyResult<Elem> {
    match p {
        Some(PowerArg::Exp(k)) => Ok(f.alpha_pow(*k)),
        None => Ok(Elem::ZERO),
        Some(PowerArg::Token(t)) if t == "zero" => Ok(Elem::ZERO),
        Some(PowerArg::Token(t)) => Err(PyValueError::new_err(format!("bad element {t:?}"))),
    }
}

fn to_elems(f: &skewcyclic::Field, v: &[Power]) -> PyResult<Vec<Elem>> {
    v.iter().map(|p| to_elem(f, p)).collect()
}

fn to_power(f: &skewcyclic::Field, x: Elem) -> Option<u32> {
    f.log(x).ok()
}

fn to_powers(f: &skewcyclic::Field, v: &[Elem]) -> Vec<Option<u32>> {
    v.iter().map(|&x| to_power(f, x)).collect()
}

/// A finite field GF(p^m) given by a preset name or a field file.
#[pyclass(name = "Field", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyField {
    inner: Arc<skewcyclic::Field>,
}

#[pymethods]
impl PyField {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyField {
            inner: load_field(spec).map_err(err)?,
        })
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.inner.characteristic()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    /// Coefficient vector of `α^k` over GF(p), ascending.
    fn digits(&self, k: Power) -> PyResult<Vec<u32>> {
        Ok(self.inner.digits(to_elem(&self.inner, &k)?))
    }

    fn mul(&self, a: Power, b: Power) -> PyResult<Option<u32>> {
        let f = &self.inner;
        Ok(to_power(f, f.mul(to_elem(f, &a)?, to_elem(f, &b)?)))
    }

    fn add(&self, a: Power, b: Power) -> PyResult<Option<u32>> {
        let f = &self.inner;
        Ok(to_power(f, f.add(to_elem(f, &a)?, to_elem(f, &b)?)))
    }

    fn __repr__(&self) -> String {
        format!("Field(GF({}))", self.inner.order())
    }
}

/// `GF(q)[X; θ]` with `θ(x) = x^(p^theta_power)`.
#[pyclass(name = "SkewRing", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySkewRing {
    inner: Arc<SkewRing>,
}

#[pymethods]
impl PySkewRing {
    #[new]
    #[pyo3(signature = (field, theta_power = 1))]
    fn new(field: &PyField, theta_power: u32) -> PyResult<Self> {
        Ok(PySkewRing {
            inner: SkewRing::new(field.inner.clone(), theta_power).map_err(err)?,
        })
    }

    #[getter]
    fn theta_order(&self) -> u32 {
        self.inner.theta().order()
    }

    /// Polynomial from ascending coefficients in power notation.
    fn poly(&self, coeffs: Vec<Power>) -> PyResult<PySkewPoly> {
        let c = to_elems(self.inner.field(), &coeffs)?;
        Ok(self.inner.poly(c).map_err(err)?.into())
    }

    /// Polynomial from text such as `"X^2 + a^3*X + 1"`.
    fn parse(&self, text: &str) -> PyResult<PySkewPoly> {
        let c = parse_poly(self.inner.field(), text, 'X').map_err(err)?;
        Ok(self.inner.poly(c).map_err(err)?.into())
    }

    fn xn_minus_1(&self, n: usize) -> PySkewPoly {
        self.inner.xn_minus_1(n).into()
    }

    /// All monic right divisors of `X^n - 1` of degree `d`.
    #[pyo3(signature = (n, d, budget = divisors::DEFAULT_EXHAUSTION_BUDGET))]
    fn right_divisors(&self, n: usize, d: usize, budget: u64) -> PyResult<Vec<PySkewPoly>> {
        let found = divisors::enumerate_right_divisors(&self.inner, n, d, budget).map_err(err)?;
        Ok(found.into_iter().map(Into::into).collect())
    }
}

#[pyclass(name = "SkewPoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySkewPoly {
    inner: SkewPoly,
}

impl From<SkewPoly> for PySkewPoly {
    fn from(inner: SkewPoly) -> Self {
        PySkewPoly { inner }
    }
}

#[pymethods]
impl PySkewPoly {
    #[getter]
    fn coeffs(&self) -> Vec<Option<u32>> {
        to_powers(self.inner.ring().field(), self.inner.coeffs())
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_add(&other.inner).map_err(err)?.into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_sub(&other.inner).map_err(err)?.into())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_mul(&other.inner).map_err(err)?.into())
    }

    /// `(q, r)` with `self = q·g + r`.
    fn right_divmod(&self, g: &Self) -> PyResult<(Self, Self)> {
        let (q, r) = self.inner.right_divmod(&g.inner).map_err(err)?;
        Ok((q.into(), r.into()))
    }

    /// `(q, r)` with `self = g·q + r`.
    fn left_divmod(&self, g: &Self) -> PyResult<(Self, Self)> {
        let (q, r) = self.inner.left_divmod(&g.inner).map_err(err)?;
        Ok((q.into(), r.into()))
    }

    fn rgcd(&self, g: &Self) -> PyResult<Self> {
        Ok(self.inner.rgcd(&g.inner).map_err(err)?.into())
    }

    fn lclm(&self, g: &Self) -> PyResult<Self> {
        Ok(self.inner.lclm(&g.inner).map_err(err)?.into())
    }

    fn is_central(&self) -> bool {
        self.inner.is_central()
    }

    /// Remainder of the right division by `X - β`.
    fn eval_rem_linear(&self, beta: Power) -> PyResult<Option<u32>> {
        let f = self.inner.ring().field();
        Ok(to_power(f, self.inner.eval_rem_linear(to_elem(f, &beta)?)))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SkewPoly({})", self.inner)
    }
}

/// The θ-cyclic code of length `n` generated by a right divisor of `X^n - 1`.
#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: SkewCyclicCode,
}

#[pymethods]
impl PyCode {
    #[new]
    fn new(n: usize, generator: &PySkewPoly) -> PyResult<Self> {
        Ok(PyCode {
            inner: SkewCyclicCode::new(n, &generator.inner).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn generator(&self) -> PySkewPoly {
        self.inner.generator().clone().into()
    }

    fn encode(&self, message: Vec<Power>) -> PyResult<Vec<Option<u32>>> {
        let f = self.inner.ring().field();
        let w = self.inner.encode(&to_elems(f, &message)?).map_err(err)?;
        Ok(to_powers(f, &w))
    }

    fn is_codeword(&self, word: Vec<Power>) -> PyResult<bool> {
        let f = self.inner.ring().field();
        self.inner.is_codeword(&to_elems(f, &word)?).map_err(err)
    }

    fn theta_shift(&self, word: Vec<Power>) -> PyResult<Vec<Option<u32>>> {
        let f = self.inner.ring().field();
        Ok(to_powers(f, &self.inner.theta_shift(&to_elems(f, &word)?)))
    }

    /// Exact minimum distance; fails if `q^k` exceeds the budget.
    #[pyo3(signature = (budget = skewcyclic::distance::DEFAULT_DISTANCE_BUDGET))]
    fn min_distance(&self, py: Python<'_>, budget: u64) -> PyResult<usize> {
        let options = DistanceOptions {
            budget,
            target: None,
        };
        py.detach(|| self.inner.min_distance_exact(&options))
            .map(|r| r.distance)
            .map_err(err)
    }

    /// Upper bound from `trials` random codewords.
    #[pyo3(signature = (trials, seed = 0))]
    fn min_distance_upper(&self, py: Python<'_>, trials: u64, seed: u64) -> usize {
        py.detach(|| self.inner.min_distance_upper(trials, seed).distance)
    }
}

/// Skew-BCH code over GF(2^n), `n` even, with designed distance `d`.
#[pyclass(name = "BchCode", frozen)]
struct PyBchCode {
    inner: SkewBchCode,
}

#[pyclass(name = "DecodeResult", frozen, get_all)]
struct PyDecodeResult {
    error: PySkewPoly,
    corrected: Vec<Option<u32>>,
    candidates: Vec<PySkewPoly>,
    division_tests: usize,
}

#[pymethods]
impl PyBchCode {
    #[new]
    fn new(field: &PyField, d: usize) -> PyResult<Self> {
        Ok(PyBchCode {
            inner: SkewBchCode::new(field.inner.clone(), d).map_err(err)?,
        })
    }

    #[getter]
    fn code(&self) -> PyCode {
        PyCode {
            inner: self.inner.code().clone(),
        }
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t()
    }

    fn decode(&self, received: Vec<Power>) -> PyResult<PyDecodeResult> {
        let f = self.inner.code().ring().field();
        let n = self.inner.code().length();
        let res = self.inner.decode(&to_elems(f, &received)?).map_err(err)?;
        Ok(PyDecodeResult {
            corrected: to_powers(f, &res.corrected.to_vector(n)),
            error: res.error.into(),
            candidates: res.candidates.into_iter().map(Into::into).collect(),
            division_tests: res.division_tests,
        })
    }

    /// `(successes, trials)` over seeded random error patterns.
    #[pyo3(signature = (trials, max_errors, seed = 0))]
    fn roundtrip(&self, py: Python<'_>, trials: u64, max_errors: usize, seed: u64) -> (u64, u64) {
        let r = py.detach(|| bch::roundtrip(&self.inner, trials, max_errors, seed));
        (r.successes, r.trials)
    }
}

/// `(label, passed)` for each bundled published generator.
#[pyfunction]
fn verify_tables() -> PyResult<Vec<(String, bool)>> {
    let checks = skewcyclic::tables::verify_tables().map_err(err)?;
    Ok(checks
        .into_iter()
        .map(|c| (c.label.clone(), c.passed()))
        .collect())
}

#[pymodule]
fn pyskewcyclic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds all classes and functions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PySkewRing>()?;
    m.add_class::<PySkewPoly>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyBchCode>()?;
    m.add_class::<PyDecodeResult>()?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    Ok(())
}
