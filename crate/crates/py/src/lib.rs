//! Python bindings. Structured results cross the boundary as the same JSON the
//! CLI emits, decoded with the stdlib `json` module.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use qspec_core::checks::{self, Context};
use qspec_core::finring::DEFAULT_MAX_RING_SIZE;
use qspec_core::ideals::DEFAULT_MAX_IDEALS;
use qspec_core::report::IdealEntry;
use qspec_core::{build_ring, parse_ring as parse, CheckOptions, Error, FiniteRing, Report, RingOptions, SpectrumKind};

create_exception!(qspec, CapExceeded, PyRuntimeError, "A resource cap was hit.");

fn to_py(e: Error) -> PyErr {
    if e.is_cap() {
        CapExceeded::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite commutative ring built from a DSL expression.
#[pyclass(frozen, module = "qspec")]
struct Ring {
    ring: Arc<FiniteRing>,
    max_ideals: usize,
}

impl Ring {
    fn context(&self, parallel: bool) -> PyResult<Context> {
        let opts = CheckOptions {
            max_ideals: self.max_ideals,
            parallel,
            ..CheckOptions::default()
        };
        Context::new(&self.ring, opts).map_err(to_py)
    }
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (expr, max_ring_size = DEFAULT_MAX_RING_SIZE, max_ideals = DEFAULT_MAX_IDEALS))]
    fn new(expr: &str, max_ring_size: usize, max_ideals: usize) -> PyResult<Self> {
        let opts = RingOptions {
            max_size: max_ring_size,
            ..RingOptions::default()
        };
        let ring = build_ring(expr, &opts).map_err(to_py)?;
        Ok(Ring { ring, max_ideals })
    }

    #[getter]
    fn expr(&self) -> String {
        self.ring.recipe().to_string()
    }

    #[getter]
    fn size(&self) -> usize {
        self.ring.size()
    }

    fn elements(&self) -> Vec<String> {
        self.ring.names().to_vec()
    }

    fn __len__(&self) -> usize {
        self.ring.size()
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?})", self.ring.recipe())
    }

    /// Ideal lattice with classification flags, one dict per ideal.
    fn ideals<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let ctx = self.context(true)?;
        let entries = IdealEntry::from_lattice(&ctx.data.lattice);
        loads(py, &serde_json::to_string(&entries).expect("serializes"))
    }

    /// Points, radicals and point closures; `kind` is quasi, prime, max or primary.
    #[pyo3(signature = (kind = "quasi"))]
    fn spectrum<'py>(&self, py: Python<'py>, kind: &str) -> PyResult<Bound<'py, PyAny>> {
        let kind: SpectrumKind = kind.parse().map_err(to_py)?;
        let ctx = self.context(true)?;
        loads(py, &serde_json::to_string(&ctx.data.get(kind).to_json()).expect("serializes"))
    }

    /// Specialization graph in DOT.
    #[pyo3(signature = (kind = "quasi"))]
    fn dot(&self, kind: &str) -> PyResult<String> {
        let kind: SpectrumKind = kind.parse().map_err(to_py)?;
        Ok(self.context(true)?.data.get(kind).to_dot())
    }

    /// Full report as JSON text, byte-identical to `qspec check`.
    #[pyo3(signature = (only = None, parallel = true))]
    fn report_json(&self, py: Python<'_>, only: Option<Vec<String>>, parallel: bool) -> PyResult<String> {
        let selection = checks::select(only.as_deref()).map_err(to_py)?;
        let ctx = self.context(parallel)?;
        let results = py.detach(|| checks::run_selected(&ctx, &selection));
        let mut report = Report::new(self.ring.recipe(), &self.ring);
        report.results = results;
        Ok(report.to_json())
    }

    /// Runs registry checks and returns the decoded report.
    #[pyo3(signature = (only = None, parallel = true))]
    fn check<'py>(&self, py: Python<'py>, only: Option<Vec<String>>, parallel: bool) -> PyResult<Bound<'py, PyAny>> {
        let text = self.report_json(py, only, parallel)?;
        loads(py, &text)
    }
}

/// Canonical form of a ring expression.
#[pyfunction]
fn parse_ring(text: &str) -> PyResult<String> {
    parse(text).map(|e| e.to_string()).map_err(to_py)
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    checks::check_names()
}

#[pymodule]
fn qspec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_function(wrap_pyfunction!(parse_ring, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add("SCHEMA", qspec_core::report::SCHEMA)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
