//! Python bindings: `PhiSystem` and `Matroid` classes plus the catalog
//! generators. Scalar queries return plain values; structured reports
//! come back as JSON strings so Python can `json.loads` them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use phimat::correspondence;
use phimat::instance::{emit_matroid, emit_phi, Instance, InstanceKind};
use phimat::matroid::Matroid as CoreMatroid;
use phimat::sets::{GroundSet, Subset, SubsetFamily};
use phimat::whitehead::{PhiSystem as CorePhiSystem, PropositionId, DEFAULT_EXHAUSTIVE_CAP};

fn to_py_err(e: phimat::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ground_from_labels(labels: Vec<String>) -> PyResult<GroundSet> {
    GroundSet::new(labels).map_err(to_py_err)
}

fn family_from_lists(ground: &GroundSet, lists: Vec<Vec<String>>) -> PyResult<SubsetFamily> {
    let mut subsets = Vec::with_capacity(lists.len());
    for labels in lists {
        subsets.push(ground.subset_from_labels(labels).map_err(to_py_err)?);
    }
    SubsetFamily::new(ground, subsets).map_err(to_py_err)
}

fn family_to_lists(fam: &SubsetFamily) -> Vec<Vec<String>> {
    fam.members()
        .map(|s| s.labels().iter().map(|l| l.to_string()).collect())
        .collect()
}

fn subset_of(ground: &GroundSet, labels: Vec<String>) -> PyResult<Subset> {
    ground.subset_from_labels(labels).map_err(to_py_err)
}

fn json_of<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A ground set with designated phi-classes.
#[pyclass]
struct PhiSystem {
    inner: CorePhiSystem,
}

#[pymethods]
impl PhiSystem {
    /// PhiSystem(labels, classes): classes are lists of element labels.
    #[new]
    fn new(labels: Vec<String>, classes: Vec<Vec<String>>) -> PyResult<Self> {
        let ground = ground_from_labels(labels)?;
        let fam = family_from_lists(&ground, classes)?;
        Ok(PhiSystem {
            inner: CorePhiSystem::new(ground, fam).map_err(to_py_err)?,
        })
    }

    /// Parse an instance file; it must have kind phi-system.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        match phimat::parse_instance(text).map_err(to_py_err)? {
            Instance::Phi(inner) => Ok(PhiSystem { inner }),
            Instance::Matroid(_) => Err(PyValueError::new_err("file describes a matroid")),
        }
    }

    fn labels(&self) -> Vec<String> {
        self.inner.ground().labels().to_vec()
    }

    fn phi_classes(&self) -> Vec<Vec<String>> {
        family_to_lists(self.inner.phi_classes())
    }

    /// Common region (closure) of a subset, as its member labels.
    fn closure(&self, set: Vec<String>) -> PyResult<Vec<String>> {
        let u = subset_of(self.inner.ground(), set)?;
        let c = self.inner.common_region(&u).map_err(to_py_err)?;
        Ok(c.labels().iter().map(|l| l.to_string()).collect())
    }

    fn dimension(&self, set: Vec<String>) -> PyResult<usize> {
        let u = subset_of(self.inner.ground(), set)?;
        self.inner.dimension(&u).map_err(to_py_err)
    }

    fn is_prime(&self, set: Vec<String>) -> PyResult<bool> {
        let u = subset_of(self.inner.ground(), set)?;
        self.inner.is_phi_prime(&u).map_err(to_py_err)
    }

    fn is_axial(&self, set: Vec<String>) -> PyResult<bool> {
        let u = subset_of(self.inner.ground(), set)?;
        self.inner.is_phi_axial(&u).map_err(to_py_err)
    }

    fn is_maximal(&self, set: Vec<String>) -> PyResult<bool> {
        let u = subset_of(self.inner.ground(), set)?;
        self.inner.is_phi_maximal(&u).map_err(to_py_err)
    }

    fn primes(&self) -> Vec<Vec<String>> {
        family_to_lists(&self.inner.primes())
    }

    fn axials(&self) -> Vec<Vec<String>> {
        family_to_lists(&self.inner.axials())
    }

    /// Verdicts of the five axioms as a JSON object.
    #[pyo3(signature = (max_size = DEFAULT_EXHAUSTIVE_CAP))]
    fn check_axioms_json(&self, max_size: usize) -> PyResult<String> {
        let report = self.inner.check_axioms_capped(max_size).map_err(to_py_err)?;
        json_of(&report)
    }

    /// One proposition verdict (W.12.21, W.12.23, W.12.37, Lemma1,
    /// W.13.11 or tau) as JSON.
    #[pyo3(signature = (which, max_size = DEFAULT_EXHAUSTIVE_CAP))]
    fn check_proposition_json(&self, which: &str, max_size: usize) -> PyResult<String> {
        let id: PropositionId = which.parse().map_err(PyValueError::new_err)?;
        let report = self
            .inner
            .check_proposition_capped(id, max_size)
            .map_err(to_py_err)?;
        json_of(&report)
    }

    /// Translate to the matroid; returns (Matroid, report_json).
    fn to_matroid(&self) -> PyResult<(Matroid, String)> {
        let (m, report) = correspondence::whitehead_to_matroid(&self.inner).map_err(to_py_err)?;
        Ok((Matroid { inner: m }, json_of(&report)?))
    }

    /// Round trip through the matroid; returns the report as JSON.
    fn roundtrip_json(&self) -> PyResult<String> {
        let report = correspondence::roundtrip_phi(&self.inner).map_err(to_py_err)?;
        json_of(&report)
    }

    /// Canonical instance-file text.
    fn to_text(&self) -> String {
        emit_phi(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "PhiSystem(|E|={}, classes={})",
            self.inner.ground().size(),
            self.inner.phi_classes().len()
        )
    }
}

/// A matroid given by its full independent-set family.
#[pyclass]
struct Matroid {
    inner: CoreMatroid,
}

#[pymethods]
impl Matroid {
    /// Matroid(labels, independents): validates the independence axioms.
    #[new]
    fn new(labels: Vec<String>, independents: Vec<Vec<String>>) -> PyResult<Self> {
        let ground = ground_from_labels(labels)?;
        let fam = family_from_lists(&ground, independents)?;
        Ok(Matroid {
            inner: CoreMatroid::from_independents(ground, fam).map_err(to_py_err)?,
        })
    }

    /// Build from a flat family (must contain the full set, be closed
    /// under intersection, and reproduce itself as the derived flats).
    #[staticmethod]
    fn from_flats(labels: Vec<String>, flats: Vec<Vec<String>>) -> PyResult<Self> {
        let ground = ground_from_labels(labels)?;
        let fam = family_from_lists(&ground, flats)?;
        Ok(Matroid {
            inner: CoreMatroid::from_flats(ground, fam).map_err(to_py_err)?,
        })
    }

    /// Parse an instance file; it must describe a matroid.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        match phimat::parse_instance(text).map_err(to_py_err)? {
            Instance::Matroid(inner) => Ok(Matroid { inner }),
            Instance::Phi(_) => Err(PyValueError::new_err("file describes a phi-system")),
        }
    }

    fn labels(&self) -> Vec<String> {
        self.inner.ground().labels().to_vec()
    }

    fn independents(&self) -> Vec<Vec<String>> {
        family_to_lists(self.inner.independents())
    }

    fn flats(&self) -> Vec<Vec<String>> {
        family_to_lists(self.inner.flats())
    }

    fn bases(&self) -> Vec<Vec<String>> {
        family_to_lists(&self.inner.bases())
    }

    fn rank(&self, set: Vec<String>) -> PyResult<usize> {
        let u = subset_of(self.inner.ground(), set)?;
        self.inner.rank(&u).map_err(to_py_err)
    }

    fn rank_of_ground(&self) -> usize {
        self.inner.rank_of_ground()
    }

    fn closure(&self, set: Vec<String>) -> PyResult<Vec<String>> {
        let u = subset_of(self.inner.ground(), set)?;
        let c = self.inner.closure(&u).map_err(to_py_err)?;
        Ok(c.labels().iter().map(|l| l.to_string()).collect())
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    /// Translate to a phi-system (flats become classes); returns
    /// (PhiSystem, report_json).
    fn to_whitehead(&self) -> PyResult<(PhiSystem, String)> {
        let (sys, report) = correspondence::matroid_to_whitehead(&self.inner).map_err(to_py_err)?;
        Ok((PhiSystem { inner: sys }, json_of(&report)?))
    }

    /// Round trip through the phi-system; returns the report as JSON.
    fn roundtrip_json(&self) -> PyResult<String> {
        let report = correspondence::roundtrip_matroid(&self.inner).map_err(to_py_err)?;
        json_of(&report)
    }

    /// Canonical instance-file text ("independents" or "flats").
    #[pyo3(signature = (kind = "independents"))]
    fn to_text(&self, kind: &str) -> PyResult<String> {
        let kind = match kind {
            "independents" => InstanceKind::MatroidIndependents,
            "flats" => InstanceKind::MatroidFlats,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown kind `{other}` (expected independents or flats)"
                )))
            }
        };
        Ok(emit_matroid(&self.inner, kind))
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid(|E|={}, rank={}, simple={})",
            self.inner.ground().size(),
            self.inner.rank_of_ground(),
            self.inner.is_simple()
        )
    }
}

/// Every subset designated as a class: dimension equals cardinality.
#[pyfunction]
fn free_system(n: usize) -> PyResult<PhiSystem> {
    Ok(PhiSystem {
        inner: phimat::catalog::free_system(n).map_err(to_py_err)?,
    })
}

/// Uniform matroid U_{r,n}.
#[pyfunction]
fn uniform(r: usize, n: usize) -> PyResult<Matroid> {
    Ok(Matroid {
        inner: phimat::catalog::uniform(r, n).map_err(to_py_err)?,
    })
}

/// The seven-point projective plane.
#[pyfunction]
fn fano() -> Matroid {
    Matroid {
        inner: phimat::catalog::fano(),
    }
}

/// Cycle matroid of the complete graph on four vertices.
#[pyfunction]
fn graphic_k4() -> Matroid {
    Matroid {
        inner: phimat::catalog::graphic_k4(),
    }
}

/// Searched system satisfying lambda, mu, nu' and pi with a phi-prime,
/// non-phi-axial witness.
#[pyfunction]
fn non_maximal_example() -> PyResult<PhiSystem> {
    Ok(PhiSystem {
        inner: phimat::catalog::non_maximal_example().map_err(to_py_err)?,
    })
}

/// Parse an instance file into a PhiSystem or Matroid.
#[pyfunction]
fn parse_instance(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    match phimat::parse_instance(text).map_err(to_py_err)? {
        Instance::Phi(inner) => Ok(Py::new(py, PhiSystem { inner })?.into_any()),
        Instance::Matroid(inner) => Ok(Py::new(py, Matroid { inner })?.into_any()),
    }
}

#[pymodule]
fn phimat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PhiSystem>()?;
    m.add_class::<Matroid>()?;
    m.add_function(wrap_pyfunction!(free_system, m)?)?;
    m.add_function(wrap_pyfunction!(uniform, m)?)?;
    m.add_function(wrap_pyfunction!(fano, m)?)?;
    m.add_function(wrap_pyfunction!(graphic_k4, m)?)?;
    m.add_function(wrap_pyfunction!(non_maximal_example, m)?)?;
    m.add_function(wrap_pyfunction!(parse_instance, m)?)?;
    Ok(())
}
