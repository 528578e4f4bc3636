//! Python module `superaffine`. Rationals cross the boundary as
//! `fractions.Fraction`; core errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyList, PyTuple};
use superaffine_core::admissible;
use superaffine_core::{self as core, CanonicalWeight, Verdict, Q};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, x: Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((*x.numer(), *x.denom()))
}

fn fractions<'py>(py: Python<'py>, xs: &[Q]) -> PyResult<Bound<'py, PyList>> {
    let items = xs.iter().map(|&x| fraction(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// `(level, [pairings])` with Fraction entries.
fn weight<'py>(py: Python<'py>, w: &CanonicalWeight) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, [fraction(py, w.level)?.into_any(), fractions(py, &w.pairings)?.into_any()])
}

#[pyclass(name = "RootSystem", module = "superaffine", frozen)]
struct PyRootSystem {
    inner: core::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let spec = core::parse_algebra(name).map_err(err)?;
        Ok(PyRootSystem { inner: core::build_root_system(spec).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.family.to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn h_dual<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.h_dual)
    }

    #[getter]
    fn lacety(&self) -> u32 {
        self.inner.lacety as u32
    }

    #[getter]
    fn marks(&self) -> Vec<i64> {
        self.inner.marks.clone()
    }

    #[getter]
    fn parity(&self) -> Vec<&'static str> {
        self.inner.parity.iter().map(|p| if *p == core::Parity::Odd { "odd" } else { "even" }).collect()
    }

    fn cartan_matrix<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.inner.cartan_matrix().iter().map(|row| fractions(py, row)).collect()
    }

    fn rho_pairings<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, &self.inner.rho_pairings())
    }

    /// `(even, odd)` root counts.
    fn root_counts(&self) -> (usize, usize) {
        self.inner.root_counts()
    }

    fn weyl_order(&self) -> PyResult<usize> {
        Ok(core::generate_weyl(&self.inner).map_err(err)?.order())
    }

    /// `[(u, level, kind)]` for boundary levels with `u ≤ u_max`.
    fn boundary_levels<'py>(&self, py: Python<'py>, u_max: u64) -> PyResult<Vec<(u64, Bound<'py, PyAny>, String)>> {
        admissible::boundary_levels(&self.inner, u_max)
            .into_iter()
            .map(|l| Ok((l.u, fraction(py, l.level)?, l.kind.to_string())))
            .collect()
    }

    fn principal_level<'py>(&self, py: Python<'py>, u: u64) -> PyResult<Bound<'py, PyAny>> {
        admissible::check_principal(&self.inner, u).map_err(err)?;
        fraction(py, admissible::principal_level(&self.inner, u))
    }

    /// Sorted `[(level, [pairings])]` of the irreducible ordinary modules.
    fn classify<'py>(&self, py: Python<'py>, u: u64) -> PyResult<Vec<Bound<'py, PyTuple>>> {
        let ws = py.detach(|| core::classify(&self.inner, u)).map_err(err)?;
        ws.iter().map(|w| weight(py, w)).collect()
    }

    fn expected<'py>(&self, py: Python<'py>, u: u64) -> PyResult<Vec<Bound<'py, PyTuple>>> {
        let ws = core::expected_closed_form(&self.inner, u).map_err(err)?;
        ws.iter().map(|w| weight(py, w)).collect()
    }

    /// Verdict string: "PASS", "COUNT_MISMATCH" or "WEIGHT_MISMATCH".
    fn verify(&self, py: Python<'_>, u: u64) -> PyResult<String> {
        let r = py.detach(|| core::verify(&self.inner, u)).map_err(err)?;
        Ok(r.verdict.to_string())
    }

    fn passes(&self, py: Python<'_>, u: u64) -> PyResult<bool> {
        let r = py.detach(|| core::verify(&self.inner, u)).map_err(err)?;
        Ok(r.verdict == Verdict::Pass)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem({:?})", self.inner.family.to_string())
    }
}

#[pyfunction]
fn desk_roster() -> Vec<String> {
    core::rootdata::desk_roster().iter().map(ToString::to_string).collect()
}

#[pymodule]
fn superaffine(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(desk_roster, m)?)?;
    Ok(())
}
