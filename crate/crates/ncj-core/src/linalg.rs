//! Dense exact linear algebra over row vectors (maps act on the right: v ↦ vM).

use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
}

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vadd(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(s: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

pub fn vneg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// a += s·b
pub fn axpy(a: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(s * y);
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    pub data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Builds from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r);
        }
        Matrix { rows: n, cols, field, data }
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { data: vadd(&self.data, &o.data), ..self.clone() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { data: vsub(&self.data, &o.data), ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { data: vscale(s, &self.data), ..self.clone() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { data: vneg(&self.data), ..self.clone() }
    }

    /// Matrix product `self · o` (apply self first in the right-action convention).
    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut r = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let (lo, hi) = (i * o.cols, (i + 1) * o.cols);
                axpy(&mut r.data[lo..hi], a, o.row(k));
            }
        }
        r
    }

    /// Row vector times matrix: v ↦ vM.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut r = zero_vec(self.field, self.cols);
        for (k, a) in v.iter().enumerate() {
            axpy(&mut r, a, self.row(k));
        }
        r
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = &inv * m.get(r, j);
                m.set(r, j, v);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = -m.get(i, c);
                    let (lo, hi) = (i * m.cols, (i + 1) * m.cols);
                    axpy(&mut m.data[lo..hi], &f, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Horizontal concatenation.
    pub fn hstack(field: Field, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    m.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        m
    }

    /// Commutator XY − sYX for a sign s = ±1.
    pub fn commutator(&self, o: &Matrix, odd_sign: bool) -> Matrix {
        let xy = self.mul(o);
        let yx = o.mul(self);
        if odd_sign {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        }
    }
}

/// Kernel of v ↦ vM.
pub fn nullspace(m: &Matrix) -> Subspace {
    // vM = 0 ⇔ Mᵀ vᵀ = 0: solve the column nullspace of Mᵀ.
    let t = m.transpose();
    let (r, piv) = t.rref();
    let n = m.rows;
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = zero_vec(m.field, n);
        v[f] = m.field.one();
        for (ri, &pc) in piv.iter().enumerate() {
            v[pc] = -r.get(ri, f);
        }
        basis.push(v);
    }
    Subspace::span(m.field, n, basis)
}

/// Some x with xM = b, if one exists.
pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
    if b.len() != m.cols {
        return Err(LinalgError::Dimension { expected: m.cols, got: b.len() });
    }
    // Solve Mᵀ xᵀ = bᵀ via the augmented system.
    let t = m.transpose();
    let mut aug = Matrix::zeros(m.field, t.rows, t.cols + 1);
    for i in 0..t.rows {
        for j in 0..t.cols {
            aug.set(i, j, t.get(i, j).clone());
        }
        aug.set(i, t.cols, b[i].clone());
    }
    let (r, piv) = aug.rref();
    if piv.last() == Some(&t.cols) {
        return Ok(None);
    }
    let mut x = zero_vec(m.field, m.rows);
    for (ri, &pc) in piv.iter().enumerate() {
        x[pc] = r.get(ri, t.cols).clone();
    }
    Ok(Some(x))
}

/// A linear subspace of F^n stored as its reduced row-echelon basis, so equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        self.basis.fmt(f)
    }
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let m = Matrix::from_rows(field, ambient, vectors);
        let (r, piv) = m.rref();
        let k = piv.len();
        let basis = Matrix { rows: k, cols: ambient, field, data: r.data[..k * ambient].to_vec() };
        Subspace { ambient_dim: ambient, basis, pivots: piv }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, vec![])
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, (0..ambient).map(|i| unit_vec(field, ambient, i)).collect())
    }

    pub fn field(&self) -> Field {
        self.basis.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            axpy(&mut r, &-c, self.basis.row(i));
        }
        if is_zero_vec(&r) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    fn check(&self, o: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != o.ambient_dim {
            Err(LinalgError::Ambient(self.ambient_dim, o.ambient_dim))
        } else {
            Ok(())
        }
    }

    pub fn contains_subspace(&self, o: &Subspace) -> Result<bool, LinalgError> {
        self.check(o)?;
        Ok(o.vectors().iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(o)?;
        let mut v = self.vectors();
        v.extend(o.vectors());
        Ok(Subspace::span(self.field(), self.ambient_dim, v))
    }

    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(o)?;
        let mut rows = self.vectors();
        rows.extend(o.vectors());
        let stacked = Matrix::from_rows(self.field(), self.ambient_dim, rows);
        let k = nullspace(&stacked);
        let a = self.dim();
        let vs = k
            .vectors()
            .into_iter()
            .map(|c| {
                let mut v = zero_vec(self.field(), self.ambient_dim);
                for (i, ci) in c[..a].iter().enumerate() {
                    axpy(&mut v, ci, self.basis.row(i));
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.field(), self.ambient_dim, vs))
    }

    pub fn equals(&self, o: &Subspace) -> Result<bool, LinalgError> {
        self.check(o)?;
        Ok(self == o)
    }

    /// Basis vectors of `self` that are independent modulo `o` (a basis of self/(self ∩ o)).
    pub fn quotient_basis(&self, o: &Subspace) -> Result<Vec<Vector>, LinalgError> {
        self.check(o)?;
        let mut ech = Echelon::new(self.field(), self.ambient_dim);
        for v in o.vectors() {
            ech.insert(v);
        }
        Ok(self.vectors().into_iter().filter(|v| ech.insert(v.clone())).collect())
    }

    /// Image under v ↦ vM.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(self.field(), m.cols, self.vectors().iter().map(|v| m.apply(v)).collect())
    }

    /// Parity of each basis row if every row is homogeneous for the coordinate parities.
    pub fn parities(&self, coord_parity: &[u8]) -> Option<Vec<u8>> {
        self.vectors()
            .iter()
            .map(|v| {
                let mut seen = None;
                for (s, &p) in v.iter().zip(coord_parity) {
                    if !s.is_zero() {
                        match seen {
                            None => seen = Some(p),
                            Some(q) if q != p => return None,
                            _ => {}
                        }
                    }
                }
                seen
            })
            .collect()
    }

    pub fn is_graded(&self, coord_parity: &[u8]) -> bool {
        self.parities(coord_parity).is_some()
    }

    /// Is the subspace mapped into itself by v ↦ vM?
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.vectors().iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Matrix of an operator restricted to this (invariant) subspace, in echelon-basis coordinates.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let rows: Option<Vec<Vector>> = self.vectors().iter().map(|v| self.coordinates(&m.apply(v))).collect();
        rows.map(|r| Matrix::from_rows(self.field(), self.dim(), r))
    }
}

/// Incremental semi-echelon basis for span-closure computations.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(field: Field, len: usize) -> Echelon {
        Echelon { field, len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let f = -&v[*p];
                axpy(&mut v, &f, r);
            }
        }
        v
    }

    /// Adds v if it is independent of the current rows; returns whether it was added.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.len);
        let v = self.reduce(v);
        match v.iter().position(|s| !s.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].inv().unwrap();
                self.rows.push((p, vscale(&inv, &v)));
                true
            }
        }
    }

    pub fn contains(&self, v: Vector) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.field, self.len, self.rows.iter().map(|(_, r)| r.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(Q, 3)).dim(), 0);
        assert_eq!(nullspace(&Matrix::zeros(Q, 2, 2)).dim(), 2);
        let k = nullspace(&Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]));
        assert_eq!(k, Subspace::span(Q, 2, vec![vec![Q.int(1), Q.int(-1)]]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q.int(3), Q.ratio(-1, 2)];
        assert_eq!(solve_linear(&Matrix::identity(Q, 2), &b).unwrap(), Some(b.clone()));
        let m = Matrix::from_ints(Q, &[&[1, 0], &[0, 0]]);
        assert_eq!(solve_linear(&m, &[Q.int(0), Q.int(1)]).unwrap(), None);
        let m = Matrix::from_ints(Q, &[&[2, 0], &[0, 3]]);
        assert_eq!(solve_linear(&m, &[Q.int(1), Q.int(1)]).unwrap(), Some(vec![Q.ratio(1, 2), Q.ratio(1, 3)]));
        assert!(solve_linear(&m, &[Q.int(1)]).is_err());
    }

    #[test]
    fn lattice_examples() {
        let e = |i| unit_vec(Q, 3, i);
        let a = Subspace::span(Q, 3, vec![e(0)]);
        let b = Subspace::span(Q, 3, vec![e(1)]);
        assert!(a.equals(&a).unwrap());
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let v = Subspace::span(Q, 2, vec![vec![Q.int(1), Q.int(1)]]);
        let w = Subspace::span(Q, 2, vec![vec![Q.int(1), Q.int(-1)]]);
        assert!(v.intersect(&w).unwrap().is_zero());
        assert!(a.sum(&Subspace::zero(Q, 2)).is_err());
        let ab = a.sum(&b).unwrap();
        assert_eq!(ab.quotient_basis(&a).unwrap(), vec![e(1)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let i = m.inverse().unwrap();
        assert_eq!(m.mul(&i), Matrix::identity(Q, 2));
        assert!(Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
