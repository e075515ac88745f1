//! Python bindings: `import ncj`.

use std::collections::BTreeMap;
use std::fmt::Display;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ncj::algebra::SuperAlgebra;
use ncj::catalog::{by_name, module_by_name};
use ncj::constructions::{graded_tensor, mutate, split_null_extension, symmetrize, unit_tensor_embedding, unital_hull};
use ncj::field::Field;
use ncj::identities::{check_flexible, check_generic_poisson, check_jordan, check_noncommutative_jordan, two_products};
use ncj::io;
use ncj::linalg::{Matrix, Subspace};
use ncj::module::{opposite_module, regular, SuperBimodule};
use ncj::peirce::{eigenspace_u1, peirce_multi, verify_peirce_relations};
use ncj::representations::{check_both_routes, decompose, is_abs_irreducible, modules_isomorphic, submodule_generated, Irreducibility};
use ncj::structure::{
    all_inner, commutative_center, derivations, derivations_into, ideal_generated, inner_derivations, is_simple, kronecker_factor,
    nucleus, search_isomorphism_small, supercommutant, Simplicity,
};

fn err(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(s: &str) -> PyResult<Field> {
    Field::parse(s).map_err(err)
}

/// A finite-dimensional superalgebra over ℚ or 𝔽_p given by structure constants.
#[pyclass(name = "Algebra", module = "ncj", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAlgebra {
    pub inner: SuperAlgebra,
}

/// A superbimodule over an algebra.
#[pyclass(name = "Module", module = "ncj", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyModule_ {
    pub inner: SuperBimodule,
}

impl PyAlgebra {
    fn vec(&self, s: &str) -> PyResult<Vec<ncj::field::Scalar>> {
        self.inner.parse_vec(s).map_err(err)
    }

    fn span(&self, s: &Subspace) -> Vec<String> {
        s.vectors().iter().map(|v| self.inner.format_vec(v)).collect()
    }
}

#[pymethods]
impl PyAlgebra {
    /// Looks up a catalog algebra, e.g. `Algebra.catalog("Dt(2,1,0,0)")`.
    #[staticmethod]
    #[pyo3(signature = (name, field = "q"))]
    fn catalog(name: &str, field: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: by_name(name, self::field(field)?).map_err(err)? })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: io::load_algebra(path).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: io::algebra_from_json(s).map_err(err)? })
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_algebra(&self.inner, path).map_err(err)
    }

    fn to_json(&self) -> String {
        io::algebra_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field.to_string()
    }

    #[getter]
    fn parity(&self) -> Vec<u32> {
        self.inner.parity.iter().map(|&p| p.into()).collect()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.basis_names.clone()
    }

    /// Product of two elements written as linear combinations of basis names.
    fn product(&self, x: &str, y: &str) -> PyResult<String> {
        Ok(self.inner.format_vec(&self.inner.mul(&self.vec(x)?, &self.vec(y)?)))
    }

    /// Checks `flexible`, `jordan`, `ncj` or `poisson`; returns (passed, report).
    fn check(&self, identity: &str) -> PyResult<(bool, String)> {
        let a = &self.inner;
        let r = match identity {
            "flexible" => check_flexible(a),
            "jordan" => check_jordan(a),
            "ncj" => check_noncommutative_jordan(a),
            "poisson" => {
                let (c, b) = two_products(a);
                check_generic_poisson(&c, &b)
            }
            other => return Err(err(format!("unknown identity {other:?}"))),
        };
        Ok((r.passed, r.to_string()))
    }

    fn is_simple(&self) -> bool {
        is_simple(&self.inner) == Simplicity::Simple
    }

    fn simplicity(&self) -> String {
        is_simple(&self.inner).to_string()
    }

    /// (dimension, even dimension) of the derivation superalgebra.
    fn derivations(&self) -> (usize, usize) {
        let d = derivations(&self.inner);
        (d.dim(), d.even_dim())
    }

    fn inner_derivations(&self) -> PyResult<usize> {
        Ok(inner_derivations(&self.inner).map_err(err)?.dim())
    }

    fn all_derivations_inner(&self) -> PyResult<bool> {
        all_inner(&self.inner).map_err(err)
    }

    fn mutate(&self, lam: &str) -> PyResult<Self> {
        let l = self.inner.field.parse_scalar(lam).map_err(err)?;
        Ok(PyAlgebra { inner: mutate(&self.inner, &l) })
    }

    fn symmetrize(&self) -> Self {
        PyAlgebra { inner: symmetrize(&self.inner) }
    }

    fn hull(&self) -> Self {
        PyAlgebra { inner: unital_hull(&self.inner) }
    }

    fn tensor(&self, other: &PyAlgebra) -> PyResult<Self> {
        Ok(PyAlgebra { inner: graded_tensor(&self.inner, &other.inner).map_err(err)? })
    }

    /// True/False, or None when the search is out of scope (too large, needs an extension).
    fn isomorphic(&self, other: &PyAlgebra) -> Option<bool> {
        search_isomorphism_small(&self.inner, &other.inner).ok().map(|m| m.is_some())
    }

    /// Peirce spaces for orthogonal idempotents, with the Peirce relations checked.
    fn peirce(&self, idempotents: Vec<String>) -> PyResult<(BTreeMap<String, Vec<String>>, bool)> {
        let es = idempotents.iter().map(|s| self.vec(s)).collect::<PyResult<Vec<_>>>()?;
        let pd = peirce_multi(&self.inner, &es).map_err(err)?;
        let spaces = pd.components.iter().filter(|(_, s)| s.dim() > 0).map(|(k, s)| (k.to_string(), self.span(s))).collect();
        Ok((spaces, es.iter().all(|e| verify_peirce_relations(&self.inner, e).passed)))
    }

    fn eigenspace(&self, idempotent: &str, lam: &str) -> PyResult<Vec<String>> {
        let l = self.inner.field.parse_scalar(lam).map_err(err)?;
        Ok(self.span(&eigenspace_u1(&self.inner, &self.vec(idempotent)?, &l).map_err(err)?))
    }

    fn ideal(&self, generators: Vec<String>) -> PyResult<Vec<String>> {
        let gs = generators.iter().map(|s| self.vec(s)).collect::<PyResult<Vec<_>>>()?;
        Ok(self.span(&ideal_generated(&self.inner, &gs)))
    }

    fn center(&self) -> Vec<String> {
        self.span(&commutative_center(&self.inner))
    }

    fn commutant(&self, elements: Vec<String>) -> PyResult<Vec<String>> {
        let vs = elements.iter().map(|s| self.vec(s)).collect::<PyResult<Vec<_>>>()?;
        Ok(self.span(&supercommutant(&self.inner, &self.inner.span(vs))))
    }

    fn nucleus(&self) -> Vec<String> {
        self.span(&nucleus(&self.inner))
    }

    fn regular_module(&self) -> PyModule_ {
        PyModule_ { inner: regular(&self.inner) }
    }

    fn __eq__(&self, other: &PyAlgebra) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?}, dim={}, field={})", self.inner.name, self.inner.dim, self.inner.field)
    }

    fn __str__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

impl PyModule_ {
    fn span(&self, s: &Subspace) -> Vec<String> {
        s.vectors().iter().map(|v| self.inner.format_vec(v)).collect()
    }
}

#[pymethods]
impl PyModule_ {
    /// Looks up a catalog module, e.g. `Module.catalog("Reg(K10)")`.
    #[staticmethod]
    #[pyo3(signature = (name, field = "q"))]
    fn catalog(name: &str, field: &str) -> PyResult<Self> {
        Ok(PyModule_ { inner: module_by_name(name, self::field(field)?).map_err(err)? })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyModule_ { inner: io::load_module(path).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyModule_ { inner: io::module_from_json(s).map_err(err)? })
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_module(&self.inner, path).map_err(err)
    }

    fn to_json(&self) -> String {
        io::module_to_json(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.mdim
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.basis_names.clone()
    }

    #[getter]
    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra.clone() }
    }

    /// Whether it is a noncommutative Jordan bimodule; both verification routes must agree.
    fn check(&self) -> PyResult<bool> {
        let (r, agree) = check_both_routes(&self.inner);
        if !agree {
            return Err(err("the verification routes disagree"));
        }
        Ok(r.passed)
    }

    fn is_irreducible(&self) -> bool {
        is_abs_irreducible(&self.inner) == Irreducibility::Irreducible
    }

    fn generated(&self, v: &str) -> PyResult<Vec<String>> {
        let v = self.inner.parse_vec(v).map_err(err)?;
        Ok(self.span(&submodule_generated(&self.inner, &v)))
    }

    /// Summands, each labelled "Reg", "Reg^op" or "-".
    fn decompose(&self) -> PyResult<Vec<(Vec<String>, String)>> {
        let reg = regular(&self.inner.algebra);
        let op = opposite_module(&reg);
        decompose(&self.inner)
            .summands
            .iter()
            .map(|s| {
                let p = self.inner.restrict(s).map_err(err)?;
                let kind = if modules_isomorphic(&p, &reg).unwrap_or(false) {
                    "Reg"
                } else if modules_isomorphic(&p, &op).unwrap_or(false) {
                    "Reg^op"
                } else {
                    "-"
                };
                Ok((self.span(s), kind.to_string()))
            })
            .collect()
    }

    fn isomorphic(&self, other: &PyModule_) -> PyResult<bool> {
        modules_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    fn opposite(&self) -> Self {
        PyModule_ { inner: opposite_module(&self.inner) }
    }

    fn split_null_extension(&self) -> PyAlgebra {
        PyAlgebra { inner: split_null_extension(&self.inner.algebra, &self.inner) }
    }

    /// (dimension, even dimension) of the derivations into this module.
    fn derivations(&self) -> PyResult<(usize, usize)> {
        let d = derivations_into(&self.inner.algebra, &self.inner).map_err(err)?;
        Ok((d.dim(), d.even_dim()))
    }

    fn __eq__(&self, other: &PyModule_) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Module({:?}, dim={}, over {:?})", self.inner.name, self.inner.mdim, self.inner.algebra.name)
    }
}

/// Factors U ≅ Z ⊗ D along a unital embedding of D (images of D's basis in U); without an
/// embedding, U is Z ⊗ D for Z = `u` and the embedding is d ↦ 1 ⊗ d. Returns a basis of Z in U.
#[pyfunction]
#[pyo3(signature = (u, d, embed = None))]
fn kronecker(u: &PyAlgebra, d: &PyAlgebra, embed: Option<Vec<String>>) -> PyResult<Vec<String>> {
    let (u, e) = match embed {
        Some(list) => {
            let rows = list.iter().map(|s| u.vec(s)).collect::<PyResult<Vec<_>>>()?;
            if rows.len() != d.inner.dim {
                return Err(err("one image per basis element of d is needed"));
            }
            (u.inner.clone(), Matrix::from_rows(u.inner.field, u.inner.dim, rows))
        }
        None => {
            let t = graded_tensor(&u.inner, &d.inner).map_err(err)?;
            let m = unit_tensor_embedding(&u.inner, &d.inner).ok_or_else(|| err("the coefficient algebra has no unit"))?;
            (t, m)
        }
    };
    let k = kronecker_factor(&u, &e, &d.inner).map_err(err)?;
    Ok(k.z_space.vectors().iter().map(|v| u.format_vec(v)).collect())
}

/// Runs the verification battery and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (filter = None, field = "q"))]
fn verify(filter: Option<&str>, field: &str) -> PyResult<String> {
    let entries = ncj::suite::manifest().map_err(err)?;
    Ok(ncj::suite::run_suite(&entries, filter, self::field(field)?).to_json())
}

#[pymodule]
#[pyo3(name = "ncj")]
pub fn ncj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyModule_>()?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
