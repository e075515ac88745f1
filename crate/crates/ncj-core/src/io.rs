//! JSON algebra and module files. Scalars are strings ("3/2"), never floats.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, SuperAlgebra};
use crate::catalog::{by_name, CatalogError};
use crate::field::{Field, FieldError, Scalar};
use crate::linalg::Matrix;
use crate::module::SuperBimodule;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
    #[error("{location}: grading violated by entry ({i},{j},{k})")]
    Grading { location: String, i: usize, j: usize, k: usize },
    #[error("field: {0}")]
    Field(#[from] FieldError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Invalid { location: location.into(), message: message.into() }
}

/// One nonzero row of a product tensor: e_i·e_j = Σ coeffs[k] e_k.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub parity: Vec<u8>,
    #[serde(default)]
    pub basis_names: Vec<String>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

/// Action of basis element `a` on module basis vector `m`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub a: usize,
    pub m: usize,
    pub coeffs: BTreeMap<usize, String>,
}

/// A catalog name (JSON string) or an inline algebra (JSON object).
#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(untagged)]
pub enum AlgebraRef {
    Catalog(String),
    Inline(Box<AlgebraFile>),
}

// Not derived: untagged buffering cannot read the integer map keys of `coeffs`.
impl<'de> Deserialize<'de> for AlgebraRef {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => Ok(AlgebraRef::Catalog(s)),
            v @ serde_json::Value::Object(_) => {
                serde_json::from_value(v).map(|f| AlgebraRef::Inline(Box::new(f))).map_err(|e| D::Error::custom(format!("algebra: {e}")))
            }
            _ => Err(D::Error::custom("algebra must be a catalog name or an inline algebra object")),
        }
    }
}

/// Either `left`/`right` (a·m and m·a) or `rplus`/`rminus` ((m)R±_a) entries.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub algebra: AlgebraRef,
    pub mdim: usize,
    pub mparity: Vec<u8>,
    #[serde(default)]
    pub basis_names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<ActionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<ActionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rplus: Option<Vec<ActionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rminus: Option<Vec<ActionEntry>>,
}

fn coeff_map(v: impl Iterator<Item = (usize, Scalar)>) -> BTreeMap<usize, String> {
    v.filter(|(_, s)| !s.is_zero()).map(|(k, s)| (k, s.to_string())).collect()
}

fn check_parity(loc: &str, parity: &[u8], dim: usize) -> Result<(), IoError> {
    if parity.len() != dim {
        return Err(invalid(loc, format!("{} entries for dimension {dim}", parity.len())));
    }
    if let Some(i) = parity.iter().position(|&p| p > 1) {
        return Err(invalid(format!("{loc}[{i}]"), "parity must be 0 or 1"));
    }
    Ok(())
}

fn check_names(loc: &str, names: &[String], dim: usize) -> Result<(), IoError> {
    if !names.is_empty() && names.len() != dim {
        return Err(invalid(loc, format!("{} names for dimension {dim}", names.len())));
    }
    Ok(())
}

impl AlgebraFile {
    pub fn from_algebra(a: &SuperAlgebra) -> AlgebraFile {
        let mut products = Vec::new();
        for i in 0..a.dim {
            for j in 0..a.dim {
                let coeffs = coeff_map(a.mul_basis(i, j).iter().cloned());
                if !coeffs.is_empty() {
                    products.push(ProductEntry { i, j, coeffs });
                }
            }
        }
        AlgebraFile {
            name: a.name.clone(),
            field: a.field.to_string(),
            dim: a.dim,
            parity: a.parity.clone(),
            basis_names: a.basis_names.clone(),
            products,
        }
    }

    pub fn to_algebra(&self) -> Result<SuperAlgebra, IoError> {
        let field = Field::parse(&self.field)?;
        let n = self.dim;
        check_parity("parity", &self.parity, n)?;
        check_names("basis_names", &self.basis_names, n)?;
        let mut c = vec![field.zero(); n * n * n];
        for (e, p) in self.products.iter().enumerate() {
            let loc = format!("products[{e}]");
            if p.i >= n || p.j >= n {
                return Err(invalid(loc, format!("index ({},{}) out of range for dimension {n}", p.i, p.j)));
            }
            for (&k, s) in &p.coeffs {
                let kloc = format!("{loc}.coeffs.{k}");
                if k >= n {
                    return Err(invalid(kloc, format!("index {k} out of range for dimension {n}")));
                }
                let v = field.parse_scalar(s).map_err(|e| invalid(&kloc, e.to_string()))?;
                if !v.is_zero() && self.parity[k] != self.parity[p.i] ^ self.parity[p.j] {
                    return Err(IoError::Grading { location: kloc, i: p.i, j: p.j, k });
                }
                c[(p.i * n + p.j) * n + k] += &v;
            }
        }
        Ok(SuperAlgebra::new(&self.name, field, self.parity.clone(), self.basis_names.clone(), c)?)
    }
}

fn action_entries(m: &SuperBimodule, left: bool) -> Vec<ActionEntry> {
    let (n, k) = (m.algebra.dim, m.mdim);
    let mut out = Vec::new();
    for a in 0..n {
        for i in 0..k {
            let coeffs = coeff_map((0..k).map(|j| (j, if left { m.l(a, i, j) } else { m.r(i, a, j) }.clone())));
            if !coeffs.is_empty() {
                out.push(ActionEntry { a, m: i, coeffs });
            }
        }
    }
    out
}

/// Fills a tensor indexed by `idx(a, m, j)` from entries, checking ranges and grading.
fn fill(
    loc: &str,
    entries: &[ActionEntry],
    alg: &SuperAlgebra,
    mparity: &[u8],
    mut put: impl FnMut(usize, usize, usize, Scalar),
) -> Result<(), IoError> {
    let (n, k) = (alg.dim, mparity.len());
    for (e, en) in entries.iter().enumerate() {
        let eloc = format!("{loc}[{e}]");
        if en.a >= n || en.m >= k {
            return Err(invalid(eloc, format!("index (a={}, m={}) out of range", en.a, en.m)));
        }
        for (&j, s) in &en.coeffs {
            let kloc = format!("{eloc}.coeffs.{j}");
            if j >= k {
                return Err(invalid(kloc, format!("index {j} out of range for module dimension {k}")));
            }
            let v = alg.field.parse_scalar(s).map_err(|e| invalid(&kloc, e.to_string()))?;
            if !v.is_zero() && mparity[j] != alg.parity[en.a] ^ mparity[en.m] {
                return Err(IoError::Grading { location: kloc, i: en.a, j: en.m, k: j });
            }
            put(en.a, en.m, j, v);
        }
    }
    Ok(())
}

impl ModuleFile {
    pub fn from_module(m: &SuperBimodule) -> ModuleFile {
        ModuleFile {
            name: m.name.clone(),
            field: None,
            algebra: AlgebraRef::Inline(Box::new(AlgebraFile::from_algebra(&m.algebra))),
            mdim: m.mdim,
            mparity: m.mparity.clone(),
            basis_names: m.basis_names.clone(),
            left: Some(action_entries(m, true)),
            right: Some(action_entries(m, false)),
            rplus: None,
            rminus: None,
        }
    }

    pub fn to_module(&self) -> Result<SuperBimodule, IoError> {
        let alg = match &self.algebra {
            AlgebraRef::Catalog(name) => {
                let field = Field::parse(self.field.as_deref().unwrap_or("q"))?;
                by_name(name, field)?
            }
            AlgebraRef::Inline(f) => {
                let a = f.to_algebra()?;
                if let Some(fd) = &self.field {
                    if Field::parse(fd)? != a.field {
                        return Err(invalid("field", "differs from the inline algebra's field"));
                    }
                }
                a
            }
        };
        let (n, k) = (alg.dim, self.mdim);
        check_parity("mparity", &self.mparity, k)?;
        check_names("basis_names", &self.basis_names, k)?;
        let f = alg.field;
        let two_product = self.rplus.is_some() || self.rminus.is_some();
        if two_product && (self.left.is_some() || self.right.is_some()) {
            return Err(invalid("rplus", "give either left/right or rplus/rminus entries, not both"));
        }
        if two_product {
            let mut rp = vec![Matrix::zeros(f, k, k); n];
            let mut rm = vec![Matrix::zeros(f, k, k); n];
            let empty = Vec::new();
            fill("rplus", self.rplus.as_ref().unwrap_or(&empty), &alg, &self.mparity, |a, i, j, v| {
                let s = rp[a].get(i, j) + &v;
                rp[a].set(i, j, s)
            })?;
            fill("rminus", self.rminus.as_ref().unwrap_or(&empty), &alg, &self.mparity, |a, i, j, v| {
                let s = rm[a].get(i, j) + &v;
                rm[a].set(i, j, s)
            })?;
            return Ok(SuperBimodule::from_plus_minus(&alg, &self.name, self.mparity.clone(), self.basis_names.clone(), &rp, &rm)?);
        }
        let mut left = vec![f.zero(); n * k * k];
        let mut right = vec![f.zero(); k * n * k];
        let empty = Vec::new();
        fill("left", self.left.as_ref().unwrap_or(&empty), &alg, &self.mparity, |a, i, j, v| left[(a * k + i) * k + j] += &v)?;
        fill("right", self.right.as_ref().unwrap_or(&empty), &alg, &self.mparity, |a, i, j, v| {
            right[(i * n + a) * k + j] += &v
        })?;
        Ok(SuperBimodule::new(&alg, &self.name, self.mparity.clone(), self.basis_names.clone(), left, right)?)
    }
}

pub fn algebra_to_json(a: &SuperAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("serializable")
}

pub fn algebra_from_json(s: &str) -> Result<SuperAlgebra, IoError> {
    serde_json::from_str::<AlgebraFile>(s)?.to_algebra()
}

pub fn module_to_json(m: &SuperBimodule) -> String {
    serde_json::to_string_pretty(&ModuleFile::from_module(m)).expect("serializable")
}

pub fn module_from_json(s: &str) -> Result<SuperBimodule, IoError> {
    serde_json::from_str::<ModuleFile>(s)?.to_module()
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn write(path: &Path, s: &str) -> Result<(), IoError> {
    std::fs::write(path, format!("{s}\n")).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<SuperAlgebra, IoError> {
    algebra_from_json(&read(path.as_ref())?)
}

pub fn save_algebra(a: &SuperAlgebra, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &algebra_to_json(a))
}

pub fn load_module(path: impl AsRef<Path>) -> Result<SuperBimodule, IoError> {
    module_from_json(&read(path.as_ref())?)
}

pub fn save_module(m: &SuperBimodule, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &module_to_json(m))
}
