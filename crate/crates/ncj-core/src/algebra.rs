//! Superalgebras given by structure constants eᵢ·eⱼ = Σₖ c[i][j][k] eₖ.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::linalg::{axpy, is_zero_vec, nullspace, unit_vec, vscale, vsub, zero_vec, Matrix, Subspace, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("grading violated: e{i}·e{j} has a component on e{k}")]
    Grading { i: usize, j: usize, k: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("parity entries must be 0 or 1")]
    BadParity,
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    L,
    R,
    Rplus,
    Rminus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Circle,
    Bracket,
    Bullet,
}

#[derive(Clone)]
pub struct SuperAlgebra {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub basis_names: Vec<String>,
    c: Vec<Scalar>,
    table: Vec<Vec<(usize, Scalar)>>,
}

/// Structure equality: field, parities and constants; names are labels only.
impl PartialEq for SuperAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.parity == o.parity && self.c == o.c
    }
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {}, over {})", self.name, self.dim, self.field)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.mul_basis(i, j);
                if !p.is_empty() {
                    writeln!(f, "  {}·{} = {}", self.basis_names[i], self.basis_names[j], self.format_sparse(p))?;
                }
            }
        }
        Ok(())
    }
}

/// Accumulates structure constants before validation.
pub struct TableBuilder {
    field: Field,
    dim: usize,
    c: Vec<Scalar>,
}

impl TableBuilder {
    pub fn new(field: Field, dim: usize) -> TableBuilder {
        TableBuilder { field, dim, c: vec![field.zero(); dim * dim * dim] }
    }

    /// eᵢ·eⱼ += s·eₖ
    pub fn add(&mut self, i: usize, j: usize, k: usize, s: Scalar) -> &mut Self {
        let idx = (i * self.dim + j) * self.dim + k;
        self.c[idx] += &s;
        self
    }

    /// eᵢ·eⱼ += v
    pub fn add_vec(&mut self, i: usize, j: usize, v: &[Scalar]) -> &mut Self {
        for (k, s) in v.iter().enumerate() {
            if !s.is_zero() {
                self.add(i, j, k, s.clone());
            }
        }
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn build(self, name: &str, parity: Vec<u8>, names: Vec<String>) -> Result<SuperAlgebra, AlgebraError> {
        SuperAlgebra::new(name, self.field, parity, names, self.c)
    }
}

impl SuperAlgebra {
    pub fn new(
        name: &str,
        field: Field,
        parity: Vec<u8>,
        names: Vec<String>,
        c: Vec<Scalar>,
    ) -> Result<SuperAlgebra, AlgebraError> {
        let n = parity.len();
        if parity.iter().any(|&p| p > 1) {
            return Err(AlgebraError::BadParity);
        }
        if c.len() != n * n * n {
            return Err(AlgebraError::Dimension { expected: n * n * n, got: c.len() });
        }
        if c.iter().any(|s| s.field() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        let names = if names.len() == n { names } else { (0..n).map(|i| format!("b{i}")).collect() };
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut row = Vec::new();
                for k in 0..n {
                    let s = &c[(i * n + j) * n + k];
                    if !s.is_zero() {
                        if parity[k] != parity[i] ^ parity[j] {
                            return Err(AlgebraError::Grading { i, j, k });
                        }
                        row.push((k, s.clone()));
                    }
                }
                table.push(row);
            }
        }
        Ok(SuperAlgebra { name: name.to_string(), field, dim: n, parity, basis_names: names, c, table })
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn with_basis_names(mut self, names: &[&str]) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|b| b == name)
    }

    /// Basis vector by name; panics on unknown names (catalog use).
    pub fn e(&self, name: &str) -> Vector {
        let i = self.index_of(name).unwrap_or_else(|| panic!("no basis element {name} in {}", self.name));
        self.basis(i)
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.field, self.dim)
    }

    /// Sparse product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        assert_eq!(u.len(), self.dim, "vector length");
        assert_eq!(v.len(), self.dim, "vector length");
        let mut r = self.zero();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, s) in self.mul_basis(i, j) {
                    r[*k] += &(&ab * s);
                }
            }
        }
        r
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector, AlgebraError> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(AlgebraError::Dimension { expected: self.dim, got: w.len() });
            }
        }
        Ok(self.mul(u, v))
    }

    /// Parity of a homogeneous element (zero counts as even).
    pub fn parity_of(&self, v: &[Scalar]) -> Option<u8> {
        let mut seen = None;
        for (s, &p) in v.iter().zip(&self.parity) {
            if !s.is_zero() {
                match seen {
                    None => seen = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// Even and odd components.
    pub fn split(&self, v: &[Scalar]) -> [Vector; 2] {
        let mut parts = [self.zero(), self.zero()];
        for (i, s) in v.iter().enumerate() {
            parts[self.parity[i] as usize][i] = s.clone();
        }
        parts
    }

    fn homogeneous_parts(&self, v: &[Scalar]) -> Vec<(u8, Vector)> {
        match self.parity_of(v) {
            Some(p) => vec![(p, v.to_vec())],
            None => {
                let [e, o] = self.split(v);
                vec![(0, e), (1, o)]
            }
        }
    }

    /// (y)L_x = (−1)^{p(x)p(y)} x·y, extended linearly over homogeneous parts of both.
    pub fn left(&self, y: &[Scalar], x: &[Scalar]) -> Vector {
        let mut r = self.zero();
        for (py, yp) in self.homogeneous_parts(y) {
            for (px, xp) in self.homogeneous_parts(x) {
                let p = self.mul(&xp, &yp);
                if px & py == 1 {
                    axpy(&mut r, &-self.field.one(), &p);
                } else {
                    axpy(&mut r, &self.field.one(), &p);
                }
            }
        }
        r
    }

    /// Operator matrix (rows are images of basis vectors) of L_x, R_x, R⁺_x or R⁻_x.
    pub fn mult_operator(&self, x: &[Scalar], kind: OperatorKind) -> Result<Matrix, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::Dimension { expected: self.dim, got: x.len() });
        }
        if self.parity_of(x).is_none() {
            return Err(AlgebraError::NotHomogeneous);
        }
        Ok(self.operator(x, kind))
    }

    /// As `mult_operator`, extended linearly to inhomogeneous x.
    pub fn operator(&self, x: &[Scalar], kind: OperatorKind) -> Matrix {
        let rows = |f: &dyn Fn(&[Scalar]) -> Vector| {
            Matrix::from_rows(self.field, self.dim, (0..self.dim).map(|i| f(&self.basis(i))).collect())
        };
        match kind {
            OperatorKind::R => rows(&|y| self.mul(y, x)),
            OperatorKind::L => rows(&|y| self.left(y, x)),
            OperatorKind::Rplus => rows(&|y| self.circle(y, x)),
            OperatorKind::Rminus => rows(&|y| vscale(&self.field.half(), &self.bracket(y, x))),
        }
    }

    pub fn op_basis(&self, i: usize, kind: OperatorKind) -> Matrix {
        self.operator(&self.basis(i), kind)
    }

    /// uv − (−1)^{uv} vu
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut r = self.zero();
        for (pu, up) in self.homogeneous_parts(u) {
            for (pv, vp) in self.homogeneous_parts(v) {
                let a = self.mul(&up, &vp);
                let b = self.mul(&vp, &up);
                let t = if pu & pv == 1 { crate::linalg::vadd(&a, &b) } else { vsub(&a, &b) };
                axpy(&mut r, &self.field.one(), &t);
            }
        }
        r
    }

    /// (uv + (−1)^{uv} vu)/2
    pub fn circle(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        vscale(&self.field.half(), &self.bullet(u, v))
    }

    /// uv + (−1)^{uv} vu
    pub fn bullet(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut r = self.zero();
        for (pu, up) in self.homogeneous_parts(u) {
            for (pv, vp) in self.homogeneous_parts(v) {
                let a = self.mul(&up, &vp);
                let b = self.mul(&vp, &up);
                let t = if pu & pv == 1 { vsub(&a, &b) } else { crate::linalg::vadd(&a, &b) };
                axpy(&mut r, &self.field.one(), &t);
            }
        }
        r
    }

    pub fn derived_product(&self, u: &[Scalar], v: &[Scalar], kind: ProductKind) -> Vector {
        match kind {
            ProductKind::Circle => self.circle(u, v),
            ProductKind::Bracket => self.bracket(u, v),
            ProductKind::Bullet => self.bullet(u, v),
        }
    }

    /// (uv)w − u(vw)
    pub fn associator(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
        vsub(&self.mul(&self.mul(u, v), w), &self.mul(u, &self.mul(v, w)))
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        e.len() == self.dim
            && !is_zero_vec(e)
            && e.iter().zip(&self.parity).all(|(s, &p)| p == 0 || s.is_zero())
            && self.mul(e, e) == e
    }

    /// The two-sided unit, if any.
    pub fn unit(&self) -> Option<Vector> {
        // Unknown u; equations u·eᵢ = eᵢ and eᵢ·u = eᵢ for all i.
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, 2 * n * n);
        let mut b = zero_vec(self.field, 2 * n * n);
        for k in 0..n {
            for i in 0..n {
                for (t, s) in self.mul_basis(k, i) {
                    m.set(k, i * n + t, s.clone());
                }
                for (t, s) in self.mul_basis(i, k) {
                    m.set(k, n * n + i * n + t, s.clone());
                }
            }
        }
        for i in 0..n {
            b[i * n + i] = self.field.one();
            b[n * n + i * n + i] = self.field.one();
        }
        crate::linalg::solve_linear(&m, &b).ok().flatten()
    }

    pub fn is_supercommutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| is_zero_vec(&self.bracket(&self.basis(i), &self.basis(j)))))
    }

    pub fn is_associative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                (0..self.dim).all(|k| is_zero_vec(&self.associator(&self.basis(i), &self.basis(j), &self.basis(k))))
            })
        })
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 0).count()
    }

    /// Subspace spanned by vectors.
    pub fn span(&self, vs: Vec<Vector>) -> Subspace {
        Subspace::span(self.field, self.dim, vs)
    }

    pub fn span_names(&self, names: &[&str]) -> Subspace {
        self.span(names.iter().map(|n| self.e(n)).collect())
    }

    /// Span of all products x·y with x ∈ a, y ∈ b.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.vectors() {
            for y in b.vectors() {
                vs.push(self.mul(&x, &y));
            }
        }
        self.span(vs)
    }

    /// Induced algebra on a graded, multiplication-closed subspace (echelon basis order).
    pub fn subalgebra(&self, s: &Subspace, name: &str) -> Result<SuperAlgebra, AlgebraError> {
        let par = s.parities(&self.parity).ok_or(AlgebraError::NotHomogeneous)?;
        let vs = s.vectors();
        let mut tb = TableBuilder::new(self.field, vs.len());
        for (i, x) in vs.iter().enumerate() {
            for (j, y) in vs.iter().enumerate() {
                let coords = s
                    .coordinates(&self.mul(x, y))
                    .ok_or_else(|| AlgebraError::Invalid(format!("subspace not closed at ({i},{j})")))?;
                tb.add_vec(i, j, &coords);
            }
        }
        let names = vs.iter().map(|v| self.format_vec(v)).collect();
        tb.build(name, par, names)
    }

    /// Left kernel of a family of linear conditions, as a helper for analyses.
    pub fn kernel_of(&self, blocks: &[Matrix]) -> Subspace {
        nullspace(&Matrix::hstack(self.field, self.dim, blocks))
    }

    fn format_sparse(&self, p: &[(usize, Scalar)]) -> String {
        let terms: Vec<String> = p.iter().map(|(k, s)| term(s, &self.basis_names[*k])).collect();
        terms.join(" + ")
    }

    pub fn format_vec(&self, v: &[Scalar]) -> String {
        format_combination(&self.basis_names, v)
    }

    /// Parses `e1 + e2`, `2*x - 1/2*y`, `(3/2)e11` or `0` over the basis names.
    pub fn parse_vec(&self, s: &str) -> Result<Vector, AlgebraError> {
        parse_combination(self.field, &self.basis_names, s)
    }
}

fn term(s: &Scalar, name: &str) -> String {
    if s.is_one() {
        name.to_string()
    } else {
        format!("({s}){name}")
    }
}

/// Inverse of [`parse_combination`].
pub fn format_combination(names: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v.iter().zip(names).filter(|(s, _)| !s.is_zero()).map(|(s, n)| term(s, n)).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// A linear combination of named basis vectors, e.g. `e1 + e2`, `2*x - 1/2*y`, `(3/2)e11`, `0`.
pub fn parse_combination(field: Field, names: &[String], s: &str) -> Result<Vector, AlgebraError> {
    let bad = |msg: String| AlgebraError::Invalid(format!("element {s:?}: {msg}"));
    let mut v = vec![field.zero(); names.len()];
    let mut rest = s.trim();
    if rest == "0" {
        return Ok(v);
    }
    let mut sign = field.one();
    let mut first = true;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if !first {
            return Err(bad("expected + or -".into()));
        }
        first = false;
        // the term runs to the next top-level sign not inside parentheses
        let mut depth = 0;
        let end = rest
            .char_indices()
            .find(|&(i, c)| {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                depth == 0 && i > 0 && (c == '+' || c == '-')
            })
            .map_or(rest.len(), |(i, _)| i);
        let t = rest[..end].trim();
        rest = rest[end..].trim_start();
        let (coef, name) = if let Some(inner) = t.strip_prefix('(') {
            let close = inner.find(')').ok_or_else(|| bad("unbalanced parenthesis".into()))?;
            (Some(&inner[..close]), inner[close + 1..].trim().trim_start_matches('*').trim())
        } else if let Some((c, n)) = t.split_once('*') {
            (Some(c.trim()), n.trim())
        } else {
            (None, t)
        };
        let c = match coef {
            Some(c) => field.parse_scalar(c).map_err(|e| bad(e.to_string()))?,
            None => field.one(),
        };
        let k = names.iter().position(|n| n == name).ok_or_else(|| bad(format!("no basis element {name:?}")))?;
        v[k] += &(&sign * &c);
        sign = field.one();
    }
    Ok(v)
}

/// Builds a vector from (name, scalar) pairs.
pub fn vec_of(a: &SuperAlgebra, terms: &[(&str, Scalar)]) -> Vector {
    let mut v = a.zero();
    for (n, s) in terms {
        let i = a.index_of(n).unwrap_or_else(|| panic!("no basis element {n}"));
        v[i] += s;
    }
    v
}
