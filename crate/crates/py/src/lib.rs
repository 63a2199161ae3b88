//! Python module `marked_braids_py`.

use marked_braids as mb;
use mb::homomorphism::HomReport;
use mb::{BraidError, BraidWord, Dialect, Extensions, FiniteGroupTable, GroupPresentation, Verdict};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: BraidError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn resolve_dialect(name: &str, group: Option<&str>) -> PyResult<Dialect> {
    match group {
        Some(g) if name.eq_ignore_ascii_case("gbraid") => {
            Ok(Dialect::gbraid(FiniteGroupTable::by_name(g).map_err(err)?))
        }
        Some(_) => Err(PyValueError::new_err(format!("group given for dialect {name}"))),
        None => name.parse().map_err(err),
    }
}

#[pyclass(name = "BraidWord", module = "marked_braids_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyBraidWord {
    inner: BraidWord,
}

impl From<BraidWord> for PyBraidWord {
    fn from(inner: BraidWord) -> Self {
        PyBraidWord { inner }
    }
}

#[pymethods]
impl PyBraidWord {
    #[new]
    #[pyo3(signature = (text, dialect = "classical", n = 3, group = None))]
    fn new(text: &str, dialect: &str, n: usize, group: Option<&str>) -> PyResult<Self> {
        let d = resolve_dialect(dialect, group)?;
        BraidWord::parse(text, d, n).map(Into::into).map_err(err)
    }

    #[getter]
    fn dialect(&self) -> String {
        self.inner.dialect().to_string()
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BraidWord('{}', '{}', {})", self.inner, self.inner.dialect(), self.inner.strands())
    }

    fn __mul__(&self, other: &PyBraidWord) -> PyResult<PyBraidWord> {
        self.inner.concat(&other.inner).map(Into::into).map_err(err)
    }

    fn inverse(&self) -> PyBraidWord {
        self.inner.inverse().into()
    }

    fn free_reduce(&self) -> PyBraidWord {
        self.inner.free_reduce().into()
    }

    /// 1-based: entry p is the strand arriving at bottom position p.
    fn permutation(&self) -> Vec<usize> {
        self.inner.permutation().as_slice().iter().map(|x| x + 1).collect()
    }

    fn dots_per_strand(&self) -> Vec<u32> {
        self.inner.scan_strands().dots_per_strand
    }

    fn is_good(&self) -> bool {
        mb::is_good(&self.inner)
    }

    fn invariants(&self) -> String {
        mb::InvariantRecord::of(&self.inner).to_string()
    }

    fn render_svg(&self) -> String {
        mb::svg::render_svg(&self.inner)
    }
}

#[pyclass(name = "Verdict", module = "marked_braids_py", frozen)]
pub struct PyVerdict {
    inner: Verdict,
}

#[pymethods]
impl PyVerdict {
    /// "equal", "distinct" or "unknown"
    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner {
            Verdict::Equal(_) => "equal",
            Verdict::Distinct(_) => "distinct",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    #[getter]
    fn depth(&self) -> Option<usize> {
        self.inner.trace().map(|t| t.depth())
    }

    #[getter]
    fn trace(&self) -> Option<String> {
        self.inner.trace().map(|t| t.to_string())
    }

    #[getter]
    fn certificate(&self) -> Option<String> {
        match &self.inner {
            Verdict::Distinct(c) => Some(c.to_string()),
            _ => None,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(name = "HomReport", module = "marked_braids_py", frozen)]
pub struct PyHomReport {
    inner: HomReport,
}

#[pymethods]
impl PyHomReport {
    fn all_equal(&self) -> bool {
        self.inner.all_equal()
    }

    fn count_equal(&self) -> usize {
        self.inner.count_equal()
    }

    fn __len__(&self) -> usize {
        self.inner.lines.len()
    }

    fn max_depth(&self) -> Option<usize> {
        self.inner.max_depth()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyfunction]
fn classical_equal(u: &PyBraidWord, v: &PyBraidWord) -> PyResult<bool> {
    mb::classical_equal(&u.inner, &v.inner).map_err(err)
}

/// Dynnikov coordinates of a classical word with three or more strands.
#[pyfunction]
fn dynnikov(w: &PyBraidWord) -> PyResult<Vec<BigInt>> {
    mb::coordinate_action(&w.inner).map(|c| c.as_slice().to_vec()).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (u, v, budget = mb::DEFAULT_BUDGET, far_commute = None))]
fn equal(u: &PyBraidWord, v: &PyBraidWord, budget: usize, far_commute: Option<bool>) -> PyResult<PyVerdict> {
    let d = u.inner.dialect();
    let ext = far_commute
        .map(|f| Extensions { dot_crossing_far_commute: f })
        .unwrap_or_else(|| Extensions::default_for(d));
    let p = GroupPresentation::new(d, u.inner.strands(), ext).map_err(err)?;
    let inner = mb::equal_semidecide(&u.inner, &v.inner, &p, budget).map_err(err)?;
    Ok(PyVerdict { inner })
}

#[pyfunction]
fn phi(w: &PyBraidWord) -> PyResult<PyBraidWord> {
    mb::phi(&w.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn f_map(w: &PyBraidWord) -> PyResult<PyBraidWord> {
    mb::f_map(&w.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn f_twisted(w: &PyBraidWord) -> PyResult<PyBraidWord> {
    mb::f_twisted(&w.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn g_map(w: &PyBraidWord) -> PyResult<PyBraidWord> {
    mb::g_map(&w.inner).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, budget = mb::DEFAULT_BUDGET))]
fn phi_welldefined_report(n: usize, budget: usize) -> PyResult<PyHomReport> {
    let inner = mb::phi_welldefined_report(n, budget).map_err(err)?;
    Ok(PyHomReport { inner })
}

#[pyfunction]
#[pyo3(signature = (n, budget = mb::DEFAULT_BUDGET, far_commute = true))]
fn f_welldefined_report(n: usize, budget: usize, far_commute: bool) -> PyResult<PyHomReport> {
    let inner = mb::dotted::f_welldefined_report(n, budget, far_commute).map_err(err)?;
    Ok(PyHomReport { inner })
}

#[pyfunction]
#[pyo3(signature = (i, n, budget = mb::DEFAULT_BUDGET))]
fn twisted_lune_check(i: usize, n: usize, budget: usize) -> PyResult<PyVerdict> {
    let inner = mb::twisted_lune_check(i, n, budget).map_err(err)?;
    Ok(PyVerdict { inner })
}

/// Returns (discrepancy count, report text).
#[pyfunction]
fn z2_iso_report(n: usize) -> PyResult<(usize, String)> {
    let r = mb::marked::z2_iso_report(n).map_err(err)?;
    Ok((r.discrepancies(), r.to_string()))
}

/// Returns (passed, step log).
#[pyfunction]
#[pyo3(signature = (w, moves = 100, seed = 0))]
fn move_invariance_harness(w: &PyBraidWord, moves: usize, seed: u64) -> PyResult<(bool, String)> {
    let r = mb::move_invariance_harness(&w.inner, moves, seed).map_err(err)?;
    Ok((r.passed(), r.to_string()))
}

#[pymodule]
pub fn marked_braids_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraidWord>()?;
    m.add_class::<PyVerdict>()?;
    m.add_class::<PyHomReport>()?;
    m.add_function(wrap_pyfunction!(classical_equal, m)?)?;
    m.add_function(wrap_pyfunction!(dynnikov, m)?)?;
    m.add_function(wrap_pyfunction!(equal, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(f_map, m)?)?;
    m.add_function(wrap_pyfunction!(f_twisted, m)?)?;
    m.add_function(wrap_pyfunction!(g_map, m)?)?;
    m.add_function(wrap_pyfunction!(phi_welldefined_report, m)?)?;
    m.add_function(wrap_pyfunction!(f_welldefined_report, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_lune_check, m)?)?;
    m.add_function(wrap_pyfunction!(z2_iso_report, m)?)?;
    m.add_function(wrap_pyfunction!(move_invariance_harness, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dialect_names_resolve() {
        Python::initialize();
        assert_eq!(resolve_dialect("z2", None).unwrap(), Dialect::Z2);
        assert_eq!(resolve_dialect("gbraid", Some("Z3")).unwrap().to_string(), "gbraid:Z3");
        assert!(resolve_dialect("virtual", Some("Z3")).is_err());
        assert!(resolve_dialect("braid", None).is_err());
    }
}
