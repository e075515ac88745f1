//! Superbimodules: left and right action tensors of an algebra on a graded space.

use crate::algebra::{AlgebraError, SuperAlgebra};
use crate::field::Scalar;
use crate::linalg::{axpy, zero_vec, Matrix, Vector};

#[derive(Clone, Debug)]
pub struct SuperBimodule {
    pub algebra: SuperAlgebra,
    pub name: String,
    pub mdim: usize,
    pub mparity: Vec<u8>,
    pub basis_names: Vec<String>,
    /// l[a][m][m']: a·m = Σ l[a][m][m'] m'
    left: Vec<Scalar>,
    /// r[m][a][m']: m·a = Σ r[m][a][m'] m'
    right: Vec<Scalar>,
}

impl PartialEq for SuperBimodule {
    fn eq(&self, o: &Self) -> bool {
        self.algebra == o.algebra && self.mparity == o.mparity && self.left == o.left && self.right == o.right
    }
}

impl SuperBimodule {
    pub fn new(
        algebra: &SuperAlgebra,
        name: &str,
        mparity: Vec<u8>,
        names: Vec<String>,
        left: Vec<Scalar>,
        right: Vec<Scalar>,
    ) -> Result<SuperBimodule, AlgebraError> {
        let (n, m) = (algebra.dim, mparity.len());
        if mparity.iter().any(|&p| p > 1) {
            return Err(AlgebraError::BadParity);
        }
        for t in [&left, &right] {
            if t.len() != n * m * m {
                return Err(AlgebraError::Dimension { expected: n * m * m, got: t.len() });
            }
            if t.iter().any(|s| s.field() != algebra.field) {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        for a in 0..n {
            for i in 0..m {
                for k in 0..m {
                    let want = algebra.parity[a] ^ mparity[i];
                    if mparity[k] != want
                        && (!left[(a * m + i) * m + k].is_zero() || !right[(i * n + a) * m + k].is_zero())
                    {
                        return Err(AlgebraError::Invalid(format!(
                            "module grading violated: algebra e{a} with module m{i} hits m{k}"
                        )));
                    }
                }
            }
        }
        let names = if names.len() == m { names } else { (0..m).map(|i| format!("m{i}")).collect() };
        Ok(SuperBimodule {
            algebra: algebra.clone(),
            name: name.into(),
            mdim: m,
            mparity,
            basis_names: names,
            left,
            right,
        })
    }

    /// From the operator families R⁺_a, R⁻_a (one matrix per algebra basis element):
    /// R = R⁺ + R⁻, L = R⁺ − R⁻, and a·m = (−1)^{am} m L_a.
    pub fn from_plus_minus(
        algebra: &SuperAlgebra,
        name: &str,
        mparity: Vec<u8>,
        names: Vec<String>,
        rplus: &[Matrix],
        rminus: &[Matrix],
    ) -> Result<SuperBimodule, AlgebraError> {
        let (n, m) = (algebra.dim, mparity.len());
        let f = algebra.field;
        let mut left = vec![f.zero(); n * m * m];
        let mut right = vec![f.zero(); n * m * m];
        for a in 0..n {
            let r = rplus[a].add(&rminus[a]);
            let l = rplus[a].sub(&rminus[a]);
            for i in 0..m {
                let sign = algebra.parity[a] & mparity[i] == 1;
                for k in 0..m {
                    right[(i * n + a) * m + k] = r.get(i, k).clone();
                    let v = l.get(i, k);
                    left[(a * m + i) * m + k] = if sign { -v } else { v.clone() };
                }
            }
        }
        SuperBimodule::new(algebra, name, mparity, names, left, right)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    /// Parses a combination of module basis names, as for algebra elements.
    pub fn parse_vec(&self, s: &str) -> Result<Vector, AlgebraError> {
        crate::algebra::parse_combination(self.algebra.field, &self.basis_names, s)
    }

    pub fn format_vec(&self, v: &[Scalar]) -> String {
        crate::algebra::format_combination(&self.basis_names, v)
    }

    pub fn l(&self, a: usize, i: usize, k: usize) -> &Scalar {
        &self.left[(a * self.mdim + i) * self.mdim + k]
    }

    pub fn r(&self, i: usize, a: usize, k: usize) -> &Scalar {
        &self.right[(i * self.algebra.dim + a) * self.mdim + k]
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.algebra.field, self.mdim)
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::linalg::unit_vec(self.algebra.field, self.mdim, i)
    }

    /// a·m for algebra vector a and module vector m.
    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vector {
        let mut r = self.zero();
        for (ai, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (mi, y) in m.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for k in 0..self.mdim {
                    let s = self.l(ai, mi, k);
                    if !s.is_zero() {
                        r[k] += &(&xy * s);
                    }
                }
            }
        }
        r
    }

    /// m·a
    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Vector {
        let mut r = self.zero();
        for (mi, y) in m.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (ai, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let xy = x * y;
                for k in 0..self.mdim {
                    let s = self.r(mi, ai, k);
                    if !s.is_zero() {
                        r[k] += &(&xy * s);
                    }
                }
            }
        }
        r
    }

    /// R_a on M: m ↦ m·a (basis element a).
    pub fn r_op(&self, a: usize) -> Matrix {
        let f = self.algebra.field;
        let mut mat = Matrix::zeros(f, self.mdim, self.mdim);
        for i in 0..self.mdim {
            for k in 0..self.mdim {
                mat.set(i, k, self.r(i, a, k).clone());
            }
        }
        mat
    }

    /// L_a on M: m ↦ (−1)^{am} a·m (basis element a).
    pub fn l_op(&self, a: usize) -> Matrix {
        let f = self.algebra.field;
        let mut mat = Matrix::zeros(f, self.mdim, self.mdim);
        for i in 0..self.mdim {
            let neg = self.algebra.parity[a] & self.mparity[i] == 1;
            for k in 0..self.mdim {
                let v = self.l(a, i, k);
                mat.set(i, k, if neg { -v } else { v.clone() });
            }
        }
        mat
    }

    pub fn rplus_op(&self, a: usize) -> Matrix {
        self.r_op(a).add(&self.l_op(a)).scale(&self.algebra.field.half())
    }

    pub fn rminus_op(&self, a: usize) -> Matrix {
        self.r_op(a).sub(&self.l_op(a)).scale(&self.algebra.field.half())
    }

    /// Linear extension of a basis-indexed operator family to an algebra vector.
    pub fn op_of(&self, x: &[Scalar], f: impl Fn(usize) -> Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.algebra.field, self.mdim, self.mdim);
        for (a, s) in x.iter().enumerate() {
            if !s.is_zero() {
                let t = f(a);
                axpy(&mut m.data, s, &t.data);
            }
        }
        m
    }

    pub fn r_of(&self, x: &[Scalar]) -> Matrix {
        self.op_of(x, |a| self.r_op(a))
    }

    pub fn l_of(&self, x: &[Scalar]) -> Matrix {
        self.op_of(x, |a| self.l_op(a))
    }

    pub fn rplus_of(&self, x: &[Scalar]) -> Matrix {
        self.op_of(x, |a| self.rplus_op(a))
    }

    pub fn rminus_of(&self, x: &[Scalar]) -> Matrix {
        self.op_of(x, |a| self.rminus_op(a))
    }

    /// Every L_a and R_a for basis elements a.
    pub fn action_operators(&self) -> Vec<Matrix> {
        let mut ops = Vec::with_capacity(2 * self.algebra.dim);
        for a in 0..self.algebra.dim {
            ops.push(self.l_op(a));
            ops.push(self.r_op(a));
        }
        ops
    }

    /// The parity involution σ = diag((−1)^{p(m)}).
    pub fn parity_operator(&self) -> Matrix {
        let f = self.algebra.field;
        let mut s = Matrix::zeros(f, self.mdim, self.mdim);
        for i in 0..self.mdim {
            s.set(i, i, if self.mparity[i] == 1 { -f.one() } else { f.one() });
        }
        s
    }

    /// Restriction to an invariant graded subspace, in its echelon basis.
    pub fn restrict(&self, s: &crate::linalg::Subspace) -> Result<SuperBimodule, AlgebraError> {
        let par = s.parities(&self.mparity).ok_or(AlgebraError::NotHomogeneous)?;
        let n = self.algebra.dim;
        let k = s.dim();
        let f = self.algebra.field;
        let mut left = vec![f.zero(); n * k * k];
        let mut right = vec![f.zero(); n * k * k];
        let vs = s.vectors();
        for a in 0..n {
            let ea = self.algebra.basis(a);
            for (i, v) in vs.iter().enumerate() {
                let l = s
                    .coordinates(&self.act_left(&ea, v))
                    .ok_or_else(|| AlgebraError::Invalid("subspace is not a submodule".into()))?;
                let r = s
                    .coordinates(&self.act_right(v, &ea))
                    .ok_or_else(|| AlgebraError::Invalid("subspace is not a submodule".into()))?;
                for j in 0..k {
                    left[(a * k + i) * k + j] = l[j].clone();
                    right[(i * n + a) * k + j] = r[j].clone();
                }
            }
        }
        SuperBimodule::new(&self.algebra, &format!("sub({})", self.name), par, vec![], left, right)
    }
}

/// Reg(A): A acting on itself.
pub fn regular(a: &SuperAlgebra) -> SuperBimodule {
    let n = a.dim;
    let f = a.field;
    let mut left = vec![f.zero(); n * n * n];
    let mut right = vec![f.zero(); n * n * n];
    for x in 0..n {
        for m in 0..n {
            for (k, s) in a.mul_basis(x, m) {
                left[(x * n + m) * n + k] = s.clone();
            }
            for (k, s) in a.mul_basis(m, x) {
                right[(m * n + x) * n + k] = s.clone();
            }
        }
    }
    SuperBimodule::new(a, &format!("Reg({})", a.name), a.parity.clone(), a.basis_names.clone(), left, right).unwrap()
}

/// M^op: parity flipped, a·m unchanged, m·a twisted by (−1)^{p(a)}.
pub fn opposite_module(m: &SuperBimodule) -> SuperBimodule {
    let n = m.algebra.dim;
    let k = m.mdim;
    let left = m.left.clone();
    let mut right = m.right.clone();
    for i in 0..k {
        for a in 0..n {
            if m.algebra.parity[a] == 1 {
                for j in 0..k {
                    let idx = (i * n + a) * k + j;
                    right[idx] = -&right[idx];
                }
            }
        }
    }
    let par = m.mparity.iter().map(|p| p ^ 1).collect();
    let names = m.basis_names.iter().map(|s| format!("{s}'")).collect();
    SuperBimodule::new(&m.algebra, &format!("{}^op", m.name), par, names, left, right).unwrap()
}

pub fn direct_sum(m: &SuperBimodule, o: &SuperBimodule) -> SuperBimodule {
    assert!(m.algebra == o.algebra, "modules over different algebras");
    let n = m.algebra.dim;
    let (a, b) = (m.mdim, o.mdim);
    let d = a + b;
    let f = m.algebra.field;
    let mut left = vec![f.zero(); n * d * d];
    let mut right = vec![f.zero(); n * d * d];
    for x in 0..n {
        for (src, off, size) in [(m, 0, a), (o, a, b)] {
            for i in 0..size {
                for j in 0..size {
                    left[(x * d + off + i) * d + off + j] = src.l(x, i, j).clone();
                    right[((off + i) * n + x) * d + off + j] = src.r(i, x, j).clone();
                }
            }
        }
    }
    let mut par = m.mparity.clone();
    par.extend(&o.mparity);
    let mut names = m.basis_names.clone();
    names.extend(o.basis_names.iter().cloned());
    SuperBimodule::new(&m.algebra, &format!("{} + {}", m.name, o.name), par, names, left, right).unwrap()
}

/// All actions zero.
pub fn zero_module(a: &SuperAlgebra, mparity: Vec<u8>) -> SuperBimodule {
    let n = a.dim;
    let k = mparity.len();
    let z = vec![a.field.zero(); n * k * k];
    SuperBimodule::new(a, "zero", mparity, vec![], z.clone(), z).unwrap()
}
