//! Python bindings: workspaces, check reports and the solvers, with
//! matrices exchanged as nested lists of exact scalar strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cwk_core::coring::{check_frobenius_coring, coring_adjunction, coring_from_cowreath};
use cwk_core::entwine::Cowreath;
use cwk_core::exactlin::{Field, Mat};
use cwk_core::frobsep::{
    check_frobenius_system, search_frobenius, solve_g_separability, solve_separability,
    Feasibility, FrobeniusSearch,
};
use cwk_core::moncat::make_duality_data;
use cwk_core::report::Report;
use cwk_core::workspace::{
    list_fixtures, parse_workspace_with_field, run_battery, serialize_workspace,
};
use cwk_core::wreath::{from_smash_module, smash_from_cowreath, to_smash_module};

fn err(e: cwk_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(name: Option<&str>) -> PyResult<Option<Field>> {
    match name {
        None => Ok(None),
        Some("Q") => Ok(Some(Field::Q)),
        Some(other) => {
            let p = other
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| PyValueError::new_err(format!("bad field `{other}`")))?;
            Ok(Some(Field::prime(p).map_err(err)?))
        }
    }
}

fn mat_to_py(py: Python<'_>, m: &Mat) -> PyResult<Py<PyAny>> {
    let rows = PyList::empty(py);
    for i in 0..m.rows() {
        let row = PyList::empty(py);
        for j in 0..m.cols() {
            row.append(m.get(i, j).canonical())?;
        }
        rows.append(row)?;
    }
    Ok(rows.into_any().unbind())
}

fn report_to_py(py: Python<'_>, report: &Report) -> PyResult<Py<PyAny>> {
    let entries = PyList::empty(py);
    for e in &report.entries {
        let d = PyDict::new(py);
        d.set_item("id", &e.id)?;
        d.set_item("pass", e.pass)?;
        if !e.pass {
            d.set_item("residual", mat_to_py(py, &e.residual)?)?;
        }
        entries.append(d)?;
    }
    let out = PyDict::new(py);
    out.set_item("name", &report.name)?;
    out.set_item("passed", report.passed())?;
    out.set_item("entries", entries)?;
    Ok(out.into_any().unbind())
}

/// A parsed and validated workspace.
#[pyclass]
struct Workspace {
    inner: cwk_core::workspace::Workspace,
}

impl Workspace {
    fn only_cowreath(&self, name: Option<&str>) -> PyResult<Cowreath> {
        match name {
            Some(n) => self
                .inner
                .cowreaths
                .get(n)
                .cloned()
                .ok_or_else(|| PyValueError::new_err(format!("no cowreath `{n}`"))),
            None => {
                let mut it = self.inner.cowreaths.values();
                match (it.next(), it.next()) {
                    (Some(cw), None) => Ok(cw.clone()),
                    _ => Err(PyValueError::new_err(
                        "workspace must declare exactly one cowreath, or pass a name",
                    )),
                }
            }
        }
    }
}

#[pymethods]
impl Workspace {
    /// Parse a workspace from JSON text; `field` overrides the declared one.
    #[new]
    #[pyo3(signature = (text, field=None))]
    fn new(text: &str, field: Option<&str>) -> PyResult<Self> {
        let inner = parse_workspace_with_field(text.as_bytes(), parse_field(field)?).map_err(err)?;
        Ok(Workspace { inner })
    }

    /// Canonical JSON serialization.
    fn to_json(&self) -> String {
        serialize_workspace(&self.inner)
    }

    /// Run every checker the declarations call for; returns a list of
    /// (condition id, passed) pairs.
    fn check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let outcome = run_battery(&self.inner).map_err(err)?;
        let list = PyList::empty(py);
        for (id, pass) in outcome.checks {
            list.append((id, pass))?;
        }
        Ok(list.into_any().unbind())
    }

    /// Names of declared structures by kind.
    fn structures(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let d = PyDict::new(py);
        let names = |keys: Vec<&String>| keys.into_iter().cloned().collect::<Vec<_>>();
        d.set_item("objects", names(self.inner.objects.keys().collect()))?;
        d.set_item("morphisms", names(self.inner.morphisms.keys().collect()))?;
        d.set_item("algebras", names(self.inner.algebras.keys().collect()))?;
        d.set_item("coalgebras", names(self.inner.coalgebras.keys().collect()))?;
        d.set_item("transfer", names(self.inner.transfers.keys().collect()))?;
        d.set_item("cowreaths", names(self.inner.cowreaths.keys().collect()))?;
        d.set_item("modules", names(self.inner.modules.keys().collect()))?;
        d.set_item("entwined", names(self.inner.entwined.keys().collect()))?;
        d.set_item("dualities", names(self.inner.dualities.keys().collect()))?;
        Ok(d.into_any().unbind())
    }

    /// Exact coseparability and right-adjoint separability verdicts.
    #[pyo3(signature = (cowreath=None))]
    fn separability(&self, py: Python<'_>, cowreath: Option<&str>) -> PyResult<Py<PyAny>> {
        let cw = self.only_cowreath(cowreath)?;
        let d = PyDict::new(py);
        match solve_separability(&cw).map_err(err)? {
            Feasibility::Feasible(cm) => {
                d.set_item("coseparable", true)?;
                d.set_item("casimir", mat_to_py(py, &cm.b.mat)?)?;
            }
            Feasibility::Infeasible(cert) => {
                d.set_item("coseparable", false)?;
                d.set_item("rank", cert.system_rank)?;
                d.set_item("augmented_rank", cert.augmented_rank)?;
            }
        }
        match solve_g_separability(&cw).map_err(err)? {
            Feasibility::Feasible(t) => {
                d.set_item("g_separable", true)?;
                d.set_item("t", mat_to_py(py, &t.mat)?)?;
            }
            Feasibility::Infeasible(_) => d.set_item("g_separable", false)?,
        }
        Ok(d.into_any().unbind())
    }

    /// Randomized-but-verified Frobenius search; deterministic per seed.
    #[pyo3(signature = (seed=0, trials=32, cowreath=None))]
    fn frobenius_search(
        &self,
        py: Python<'_>,
        seed: u64,
        trials: u32,
        cowreath: Option<&str>,
    ) -> PyResult<Py<PyAny>> {
        let cw = self.only_cowreath(cowreath)?;
        let dual = make_duality_data(cw.x(), cw.field());
        let d = PyDict::new(py);
        match search_frobenius(&cw, &dual, trials, seed).map_err(err)? {
            FrobeniusSearch::Found(fs) => {
                d.set_item("found", true)?;
                d.set_item("t", mat_to_py(py, &fs.t.mat)?)?;
                d.set_item("B", mat_to_py(py, &fs.b.mat)?)?;
                let report = check_frobenius_system(&fs).map_err(err)?;
                d.set_item("recheck", report_to_py(py, &report)?)?;
            }
            FrobeniusSearch::NotFound { t_space_dim } => {
                d.set_item("found", false)?;
                d.set_item("t_space_dim", t_space_dim)?;
            }
        }
        Ok(d.into_any().unbind())
    }

    /// Transport every declared entwined module to the smash-product side
    /// and back; returns per-module exact-recovery verdicts.
    #[pyo3(signature = (cowreath=None))]
    fn roundtrip(&self, py: Python<'_>, cowreath: Option<&str>) -> PyResult<Py<PyAny>> {
        let cw = self.only_cowreath(cowreath)?;
        let dual = make_duality_data(cw.x(), cw.field());
        let sa = smash_from_cowreath(&cw, &dual).map_err(err)?;
        let d = PyDict::new(py);
        for (name, em) in &self.inner.entwined {
            if em.cw != cw {
                continue;
            }
            let n = to_smash_module(em, &sa).map_err(err)?;
            let back = from_smash_module(&n, &sa).map_err(err)?;
            d.set_item(name, back.mu == em.mu && back.rho == em.rho)?;
        }
        Ok(d.into_any().unbind())
    }

    /// Coring construction, adjunction triangles and cross-level checks.
    #[pyo3(signature = (cowreath=None))]
    fn coring(&self, py: Python<'_>, cowreath: Option<&str>) -> PyResult<Py<PyAny>> {
        let cw = self.only_cowreath(cowreath)?;
        let dual = make_duality_data(cw.x(), cw.field());
        let co = coring_from_cowreath(&cw).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item(
            "coring",
            report_to_py(py, &cwk_core::coring::check_coring(&co).map_err(err)?)?,
        )?;
        let adj = coring_adjunction(&cw, &dual).map_err(err)?;
        d.set_item("adjunction", report_to_py(py, &adj.report)?)?;
        let frob = check_frobenius_coring(&cw, &dual, None).map_err(err)?;
        d.set_item("frobenius", report_to_py(py, &frob)?)?;
        Ok(d.into_any().unbind())
    }
}

/// Names of the bundled fixtures.
#[pyfunction]
fn fixtures() -> Vec<String> {
    list_fixtures(Field::Q).into_iter().map(|e| e.name).collect()
}

/// The named bundled fixture as canonical workspace JSON.
#[pyfunction]
#[pyo3(signature = (name, field=None))]
fn fixture_json(name: &str, field: Option<&str>) -> PyResult<String> {
    let field = parse_field(field)?.unwrap_or(Field::Q);
    list_fixtures(field)
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| serialize_workspace(&e.workspace))
        .ok_or_else(|| PyRuntimeError::new_err(format!("no fixture `{name}`")))
}

#[pymodule]
fn cwk(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Workspace>()?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_json, m)?)?;
    Ok(())
}
