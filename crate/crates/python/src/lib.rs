//! Python bindings: exposes the equation model, the exact counters and
//! the bound calculus as the `diagcount_py` module.
//!
//! Conventions: invalid inputs raise `ValueError`, exceeded budgets and
//! overflow guards raise `RuntimeError`, and inapplicable bound rules
//! raise `ValueError` with the rule's own explanation. Long-running
//! counts release the GIL.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use diagcount as core;
use diagcount::{EngineConfig, EngineError, MethodChoice, UpperError};

fn engine_err(e: EngineError) -> PyErr {
    match e {
        EngineError::Equation(inner) => PyValueError::new_err(inner.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn upper_err(e: UpperError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn method_choice(name: &str) -> PyResult<MethodChoice> {
    match name {
        "auto" => Ok(MethodChoice::Auto),
        "brute" => Ok(MethodChoice::Brute),
        "mitm" => Ok(MethodChoice::Mitm),
        other => Err(PyValueError::new_err(format!(
            "method must be auto, brute or mitm, got {other:?}"
        ))),
    }
}

fn config(workers: Option<usize>, memory_cap: Option<u128>, eval_budget: Option<u128>) -> EngineConfig {
    let defaults = EngineConfig::default();
    EngineConfig {
        brute_budget: eval_budget.unwrap_or(defaults.brute_budget),
        mem_cap: memory_cap.unwrap_or(defaults.mem_cap),
        workers,
    }
}

/// A diagonal equation `c1*x1^k + ... + cs*xs^k = 0`.
#[pyclass(name = "DiagonalEquation", frozen)]
#[derive(Clone)]
struct PyEquation {
    inner: core::DiagonalEquation,
}

#[pymethods]
impl PyEquation {
    #[new]
    fn new(coeffs: Vec<i64>, degree: u32) -> PyResult<Self> {
        core::DiagonalEquation::new(coeffs, degree)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Parse from text, e.g. "x1^2 + x2^2 - 4*x3^2 = 0".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_equation(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn coeffs(&self) -> Vec<i64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn s(&self) -> usize {
        self.inner.s()
    }

    /// Canonical form: gcd 1, negatives not in the majority.
    fn normalize(&self) -> Self {
        Self {
            inner: self.inner.normalize(),
        }
    }

    /// Shape summary as a dict.
    fn signature<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
        let sig = self.inner.signature();
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item("s", sig.s)?;
        dict.set_item("k", sig.k)?;
        dict.set_item("positives", sig.positives)?;
        dict.set_item("negatives", sig.negatives)?;
        dict.set_item("coefficient_sum", sig.coefficient_sum)?;
        dict.set_item("zero_sum", sig.zero_sum)?;
        Ok(dict)
    }

    fn pretty(&self) -> String {
        self.inner.pretty()
    }

    fn __str__(&self) -> String {
        self.inner.pretty()
    }

    fn __repr__(&self) -> String {
        format!(
            "DiagonalEquation(coeffs={:?}, degree={})",
            self.inner.coeffs(),
            self.inner.degree()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// An exact count with method and timing metadata.
#[pyclass(name = "CountResult", frozen)]
struct PyCountResult {
    #[pyo3(get)]
    count: u128,
    #[pyo3(get)]
    method: String,
    #[pyo3(get)]
    elapsed_ms: f64,
    #[pyo3(get)]
    box_side: u64,
}

#[pymethods]
impl PyCountResult {
    fn __repr__(&self) -> String {
        format!(
            "CountResult(count={}, method={}, N={})",
            self.count, self.method, self.box_side
        )
    }
}

impl PyCountResult {
    fn of(r: &core::CountResult) -> Self {
        Self {
            count: r.count,
            method: r.method.as_str().to_string(),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            box_side: r.box_side,
        }
    }
}

/// One solution tuple with its largest coordinate and permutation count.
#[pyclass(name = "SeedSolution", frozen)]
struct PySeedSolution {
    #[pyo3(get)]
    values: Vec<u64>,
    #[pyo3(get)]
    sup: u64,
    #[pyo3(get)]
    multiplier: u128,
}

#[pymethods]
impl PySeedSolution {
    fn __repr__(&self) -> String {
        format!(
            "SeedSolution(values={:?}, sup={}, multiplier={})",
            self.values, self.sup, self.multiplier
        )
    }
}

/// A certified lower bound with its derivation trace.
#[pyclass(name = "LowerBound", frozen)]
struct PyLowerBound {
    #[pyo3(get)]
    value: BigUint,
    #[pyo3(get)]
    rule: String,
    /// List of (subequation, rule, factor) steps; factors multiply to value.
    #[pyo3(get)]
    trace: Vec<(String, String, BigUint)>,
    #[pyo3(get)]
    diagnosis: Option<String>,
}

#[pymethods]
impl PyLowerBound {
    fn __repr__(&self) -> String {
        format!("LowerBound(value={}, rule={})", self.value, self.rule)
    }
}

impl PyLowerBound {
    fn of(b: &core::LowerBound) -> Self {
        Self {
            value: b.value.clone(),
            rule: b.rule.as_str().to_string(),
            trace: b
                .trace
                .iter()
                .map(|s| (s.subequation.clone(), s.rule.as_str().to_string(), s.factor.clone()))
                .collect(),
            diagnosis: b.diagnosis.clone(),
        }
    }
}

/// An upper-bound exponent: count << N^(exponent + eps).
#[pyclass(name = "ExponentBound", frozen)]
struct PyExponentBound {
    #[pyo3(get)]
    exponent_numerator: BigInt,
    #[pyo3(get)]
    exponent_denominator: BigInt,
    #[pyo3(get)]
    plus_epsilon: bool,
    #[pyo3(get)]
    rule: String,
    #[pyo3(get)]
    condition: String,
}

#[pymethods]
impl PyExponentBound {
    /// Exponent as a float (exact comparisons should use the rational parts).
    fn exponent(&self) -> f64 {
        let num: f64 = self.exponent_numerator.to_string().parse().unwrap_or(f64::NAN);
        let den: f64 = self
            .exponent_denominator
            .to_string()
            .parse()
            .unwrap_or(f64::NAN);
        num / den
    }

    fn render(&self) -> String {
        let base = if self.exponent_denominator == BigInt::from(1) {
            self.exponent_numerator.to_string()
        } else {
            format!("{}/{}", self.exponent_numerator, self.exponent_denominator)
        };
        if self.plus_epsilon {
            format!("{base}+eps")
        } else {
            base
        }
    }

    fn __repr__(&self) -> String {
        format!("ExponentBound({}, rule={})", self.render(), self.rule)
    }
}

impl PyExponentBound {
    fn of(b: &core::ExponentBound) -> Self {
        Self {
            exponent_numerator: b.exponent.numer().clone(),
            exponent_denominator: b.exponent.denom().clone(),
            plus_epsilon: b.plus_epsilon,
            rule: b.rule.as_str().to_string(),
            condition: b.condition.clone(),
        }
    }
}

/// Exact count of solutions in {1..n}^s.
#[pyfunction]
#[pyo3(signature = (eq, n, method="auto", workers=None, memory_cap=None, eval_budget=None))]
fn count(
    py: Python<'_>,
    eq: &PyEquation,
    n: u64,
    method: &str,
    workers: Option<usize>,
    memory_cap: Option<u128>,
    eval_budget: Option<u128>,
) -> PyResult<PyCountResult> {
    let choice = method_choice(method)?;
    let cfg = config(workers, memory_cap, eval_budget);
    let cube = core::Cube::new(n).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let inner = eq.inner.clone();
    let result = py
        .detach(move || core::count(&inner, cube, choice, &cfg))
        .map_err(engine_err)?;
    Ok(PyCountResult::of(&result))
}

/// Least seed solution in {1..budget}^s, or None.
#[pyfunction]
#[pyo3(signature = (eq, budget, workers=None, memory_cap=None, eval_budget=None))]
fn find_seed(
    py: Python<'_>,
    eq: &PyEquation,
    budget: u64,
    workers: Option<usize>,
    memory_cap: Option<u128>,
    eval_budget: Option<u128>,
) -> PyResult<Option<PySeedSolution>> {
    let cfg = config(workers, memory_cap, eval_budget);
    let inner = eq.inner.clone();
    let seed = py
        .detach(move || core::find_seed(&inner, budget, &cfg))
        .map_err(engine_err)?;
    Ok(seed.map(|s| PySeedSolution {
        values: s.values,
        sup: s.sup,
        multiplier: s.multiplier,
    }))
}

/// Ordered representations n = x1^k + ... + xs^k over the naturals.
#[pyfunction]
#[pyo3(signature = (n, s, k, eval_budget=None))]
fn count_representations(
    py: Python<'_>,
    n: u64,
    s: u32,
    k: u32,
    eval_budget: Option<u128>,
) -> PyResult<u128> {
    let cfg = config(None, None, eval_budget);
    let rep = py
        .detach(move || core::count_representations(n, s, k, &cfg))
        .map_err(engine_err)?;
    Ok(rep.count)
}

/// Strongest certified lower bound at box side n.
#[pyfunction]
#[pyo3(signature = (eq, n, seed_budget=200, workers=None, memory_cap=None, eval_budget=None))]
fn lower_bound(
    py: Python<'_>,
    eq: &PyEquation,
    n: u64,
    seed_budget: u64,
    workers: Option<usize>,
    memory_cap: Option<u128>,
    eval_budget: Option<u128>,
) -> PyResult<PyLowerBound> {
    let cfg = config(workers, memory_cap, eval_budget);
    let inner = eq.inner.clone();
    let bound = py.detach(move || core::best_lower_bound(&inner, n, seed_budget, &cfg));
    Ok(PyLowerBound::of(&bound))
}

/// Best applicable upper exponent for the equation's count.
#[pyfunction]
fn upper_bound(eq: &PyEquation) -> PyResult<PyExponentBound> {
    let inner = eq.inner.normalize();
    let general =
        || core::best_upper_exponent(inner.s() as u64, inner.degree(), core::BoundForm::General);
    let bound = match core::alternating_moment_order(&inner) {
        Some(v) => {
            core::best_upper_exponent(v, inner.degree(), core::BoundForm::AlternatingMoment)
                .or_else(|_| general())
        }
        None => general(),
    }
    .map_err(upper_err)?;
    Ok(PyExponentBound::of(&bound))
}

/// Counts at several box sides; returns (n, count, method, slope) rows.
#[pyfunction]
#[pyo3(signature = (eq, sides, method="auto", workers=None, memory_cap=None, eval_budget=None))]
fn sweep(
    py: Python<'_>,
    eq: &PyEquation,
    sides: Vec<u64>,
    method: &str,
    workers: Option<usize>,
    memory_cap: Option<u128>,
    eval_budget: Option<u128>,
) -> PyResult<Vec<(u64, u128, String, Option<f64>)>> {
    let choice = method_choice(method)?;
    let cfg = config(workers, memory_cap, eval_budget);
    let inner = eq.inner.clone();
    let points = py
        .detach(move || core::count_sweep(&inner, &sides, choice, &cfg))
        .map_err(engine_err)?;
    Ok(points
        .into_iter()
        .map(|p| {
            (
                p.n,
                p.result.count,
                p.result.method.as_str().to_string(),
                p.slope,
            )
        })
        .collect())
}

/// Symmetric-class count for the alternating form on 2^j variables.
#[pyfunction]
fn symmetric_pair_count(j: u32, n: u64) -> PyResult<BigUint> {
    if !(1..=32).contains(&j) {
        return Err(PyValueError::new_err("j must be between 1 and 32"));
    }
    Ok(core::symmetric_pair_count(j, n))
}

/// Exact count of a1*x1^k = a2*x2^k; returns (count, (p, q) or None).
#[pyfunction]
fn two_term_count(a1: u64, a2: u64, k: u32, n: u64) -> PyResult<(u64, Option<(u64, u64)>)> {
    if a1 < 1 || a2 < 1 || k < 1 {
        return Err(PyValueError::new_err("a1, a2 and k must be at least 1"));
    }
    let t = core::two_term_count(a1, a2, k, n);
    Ok((t.count, t.ratio))
}

/// Lattice points (m, n), m > n >= 1, m^2 + n^2 <= r: (exact, pi*r/8).
#[pyfunction]
fn sector_count(r: u64) -> (u64, f64) {
    let s = core::sector_count(r);
    (s.exact, s.estimate)
}

/// Exact count of a1*x1^2 + a2*x2^2 = a3*x3^2 in {1..n}^3.
#[pyfunction]
fn pythagorean_count(a1: u64, a2: u64, a3: u64, n: u64) -> PyResult<u64> {
    core::pythagorean_count(a1, a2, a3, n).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Asymptotic estimate pi*n*ln(n) / (8*sqrt(a1/a3)).
#[pyfunction]
fn pythagorean_upper_estimate(n: u64, a1: u64, a3: u64) -> PyResult<f64> {
    core::pythagorean_upper_estimate(n, a1, a3).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Exact and estimated counts of a1*x1 + a2*x2 = a3*x3 in {1..n}^3.
#[pyfunction]
fn linear_three_count(a1: u64, a2: u64, a3: u64, n: u64) -> PyResult<(u128, f64)> {
    if a1 < 1 || a2 < 1 || a3 < 1 {
        return Err(PyValueError::new_err("coefficients must be at least 1"));
    }
    let r = core::linear_three_count(a1, a2, a3, n);
    Ok((r.exact, r.estimate))
}

#[pyfunction]
fn hua_exponent(j: u32, k: u32) -> PyResult<PyExponentBound> {
    core::hua_exponent(j, k)
        .map(|b| PyExponentBound::of(&b))
        .map_err(upper_err)
}

#[pyfunction]
fn waring_exponent(v: u64, k: u32) -> PyResult<PyExponentBound> {
    core::waring_exponent(v, k)
        .map(|b| PyExponentBound::of(&b))
        .map_err(upper_err)
}

#[pyfunction]
fn cs_exponent(v: u64, k: u32) -> PyResult<PyExponentBound> {
    core::cs_exponent(v, k)
        .map(|b| PyExponentBound::of(&b))
        .map_err(upper_err)
}

/// Binary expansion exponents of an even v, descending.
#[pyfunction]
fn binary_decomposition(v: u64) -> PyResult<Vec<u32>> {
    core::binary_decomposition(v)
        .map(|d| d.exponents)
        .map_err(upper_err)
}

/// Circle-method solvability: "guaranteed" or "unknown".
#[pyfunction]
fn cm_solvability(eq: &PyEquation) -> PyResult<String> {
    core::cm_solvability(&eq.inner.normalize())
        .map(|s| s.as_str().to_string())
        .map_err(upper_err)
}

#[pymodule]
fn diagcount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyEquation>()?;
    m.add_class::<PyCountResult>()?;
    m.add_class::<PySeedSolution>()?;
    m.add_class::<PyLowerBound>()?;
    m.add_class::<PyExponentBound>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(find_seed, m)?)?;
    m.add_function(wrap_pyfunction!(count_representations, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_pair_count, m)?)?;
    m.add_function(wrap_pyfunction!(two_term_count, m)?)?;
    m.add_function(wrap_pyfunction!(sector_count, m)?)?;
    m.add_function(wrap_pyfunction!(pythagorean_count, m)?)?;
    m.add_function(wrap_pyfunction!(pythagorean_upper_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(linear_three_count, m)?)?;
    m.add_function(wrap_pyfunction!(hua_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(waring_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(cs_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(binary_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(cm_solvability, m)?)?;
    Ok(())
}
