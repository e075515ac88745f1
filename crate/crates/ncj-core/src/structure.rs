//! Ideals, simplicity, centers, nucleus, derivations, isomorphisms and Kronecker
//! factorization.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, SuperAlgebra, TableBuilder};
use crate::constructions::graded_tensor;
use crate::field::{Field, Scalar};
use crate::identities::{check_jordan, CheckReport, Witness};
use crate::linalg::{is_zero_vec, nullspace, unit_vec, vscale, vsub, Echelon, Matrix, Subspace, Vector};
use crate::module::{regular, SuperBimodule};
use crate::peirce::peirce_decompose;
use crate::poly::{charpoly, roots};
use crate::representations::{closure, is_abs_irreducible, Irreducibility};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("field mismatch")]
    Field,
    #[error("search is limited to dimension ≤ 4 (got {0})")]
    TooLarge(usize),
    #[error("requires field extension: {0}")]
    RequiresExtension(String),
    #[error("input is not a Jordan superalgebra: {0}")]
    NotJordan(String),
    #[error("embedding rejected: {0}")]
    Embedding(String),
    #[error("centralizer is not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("derivations are not closed under the bracket")]
    NotClosed,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Closure of span(S) under every L_a and R_a.
pub fn ideal_generated(a: &SuperAlgebra, s: &[Vector]) -> Subspace {
    closure(a.field, a.dim, &regular(a).action_operators(), s)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Simplicity {
    /// A² ≠ 0 and the regular module is absolutely irreducible (graded ideals).
    Simple,
    /// A proper nonzero graded ideal, or `None` when A² = 0.
    NotSimple(Option<Subspace>),
    Undecided,
}

impl fmt::Display for Simplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplicity::Simple => write!(f, "simple (absolutely)"),
            Simplicity::NotSimple(None) => write!(f, "not simple: A² = 0"),
            Simplicity::NotSimple(Some(s)) => write!(f, "not simple: ideal of dim {}", s.dim()),
            Simplicity::Undecided => write!(f, "undecided"),
        }
    }
}

pub fn is_simple(a: &SuperAlgebra) -> Simplicity {
    if a.dim == 0 || a.is_zero_algebra() {
        return Simplicity::NotSimple(None);
    }
    match is_abs_irreducible(&regular(a)) {
        Irreducibility::Irreducible => Simplicity::Simple,
        Irreducibility::Reducible(s) => Simplicity::NotSimple(Some(s)),
        Irreducibility::Undecided => Simplicity::Undecided,
    }
}

/// Stacks linear maps f_k (given on the basis) and returns the common kernel.
fn common_kernel(a: &SuperAlgebra, maps: impl Iterator<Item = Box<dyn Fn(&Vector) -> Vector>>) -> Subspace {
    let mut blocks = Vec::new();
    for f in maps {
        let rows = (0..a.dim).map(|i| f(&a.basis(i))).collect();
        blocks.push(Matrix::from_rows(a.field, a.dim, rows));
    }
    if blocks.is_empty() {
        return Subspace::full(a.field, a.dim);
    }
    a.kernel_of(&blocks)
}

/// {a : [a, s] = 0 for s in S}.
pub fn supercommutant(a: &SuperAlgebra, s: &Subspace) -> Subspace {
    let alg = a.clone();
    let maps = s.vectors().into_iter().flat_map(|v| {
        // split so the sign of the bracket is taken per homogeneous component
        let alg = alg.clone();
        alg.split(&v).into_iter().filter(|p| !is_zero_vec(p)).map(move |p| {
            let alg = alg.clone();
            Box::new(move |x: &Vector| bracket_mixed(&alg, x, &p)) as Box<dyn Fn(&Vector) -> Vector>
        }).collect::<Vec<_>>()
    });
    common_kernel(a, maps)
}

/// Bracket with a homogeneous right argument, extended linearly in the left one.
fn bracket_mixed(a: &SuperAlgebra, x: &Vector, s: &Vector) -> Vector {
    let mut out = a.zero();
    for part in a.split(x) {
        if !is_zero_vec(&part) {
            crate::linalg::axpy(&mut out, &a.field.one(), &a.bracket(&part, s));
        }
    }
    out
}

pub fn commutative_center(a: &SuperAlgebra) -> Subspace {
    supercommutant(a, &Subspace::full(a.field, a.dim))
}

/// {n : (n,x,y) = (x,n,y) = (x,y,n) = 0 for all x, y}.
pub fn nucleus(a: &SuperAlgebra) -> Subspace {
    let mut maps: Vec<Box<dyn Fn(&Vector) -> Vector>> = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let (x, y) = (a.basis(i), a.basis(j));
            for pos in 0..3 {
                let (al, x, y) = (a.clone(), x.clone(), y.clone());
                maps.push(Box::new(move |n: &Vector| match pos {
                    0 => al.associator(n, &x, &y),
                    1 => al.associator(&x, n, &y),
                    _ => al.associator(&x, &y, n),
                }));
            }
        }
    }
    common_kernel(a, maps.into_iter())
}

/// A graded space of linear maps A → M, one matrix per basis element.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
    pub parity: Vec<u8>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 0).count()
    }

    /// The span as a subspace of flattened matrices.
    pub fn subspace(&self, field: Field, len: usize) -> Subspace {
        Subspace::span(field, len, self.basis.iter().map(|m| m.data.clone()).collect())
    }
}

/// Linear d: A → M with (ab)d = a·(bd) + (−1)^{bd}(ad)·b, solved per parity.
pub fn derivations_into(a: &SuperAlgebra, m: &SuperBimodule) -> Result<DerivationSpace, StructureError> {
    if m.algebra != *a {
        return Err(StructureError::Embedding("module over a different algebra".into()));
    }
    let f = a.field;
    let (n, k) = (a.dim, m.mdim);
    let mut out = DerivationSpace { basis: vec![], parity: vec![] };
    for p in 0..2u8 {
        // unknowns D[i][r] with parity(i) + p = parity(r)
        let vars: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..k).map(move |r| (i, r))).filter(|&(i, r)| a.parity[i] ^ p == m.mparity[r]).collect();
        if vars.is_empty() {
            continue;
        }
        let index = |i: usize, r: usize| vars.iter().position(|&v| v == (i, r));
        let mut cols: Vec<Vector> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let sign = if a.parity[y] & p == 1 { -f.one() } else { f.one() };
                for out_r in 0..k {
                    let mut col = vec![f.zero(); vars.len()];
                    // (xy)d
                    for (q, s) in a.mul_basis(x, y) {
                        if let Some(v) = index(*q, out_r) {
                            col[v] += s;
                        }
                    }
                    // − x·(yd)
                    for r in 0..k {
                        let c = m.l(x, r, out_r);
                        if !c.is_zero() {
                            if let Some(v) = index(y, r) {
                                col[v] -= c;
                            }
                        }
                    }
                    // − (−1)^{yd} (xd)·y
                    for r in 0..k {
                        let c = m.r(r, y, out_r);
                        if !c.is_zero() {
                            if let Some(v) = index(x, r) {
                                col[v] -= &(&sign * c);
                            }
                        }
                    }
                    if !is_zero_vec(&col) {
                        cols.push(col);
                    }
                }
            }
        }
        let sols = if cols.is_empty() {
            Subspace::full(f, vars.len())
        } else {
            let mut sys = Matrix::zeros(f, vars.len(), cols.len());
            for (c, col) in cols.iter().enumerate() {
                for (r, s) in col.iter().enumerate() {
                    if !s.is_zero() {
                        sys.set(r, c, s.clone());
                    }
                }
            }
            nullspace(&sys)
        };
        for sol in sols.vectors() {
            let mut d = Matrix::zeros(f, n, k);
            for (v, &(i, r)) in vars.iter().enumerate() {
                d.set(i, r, sol[v].clone());
            }
            out.basis.push(d);
            out.parity.push(p);
        }
    }
    Ok(out)
}

pub fn derivations(a: &SuperAlgebra) -> DerivationSpace {
    derivations_into(a, &regular(a)).expect("regular module")
}

/// Span of D(a,b) = [R_a, R_b] over basis pairs of a Jordan superalgebra.
pub fn inner_derivations(j: &SuperAlgebra) -> Result<DerivationSpace, StructureError> {
    let rep = check_jordan(j);
    if !rep.passed {
        return Err(StructureError::NotJordan(rep.to_string()));
    }
    let f = j.field;
    let rs: Vec<Matrix> = (0..j.dim).map(|i| j.op_basis(i, crate::algebra::OperatorKind::R)).collect();
    let mut out = DerivationSpace { basis: vec![], parity: vec![] };
    for p in 0..2u8 {
        let mut ech = Echelon::new(f, j.dim * j.dim);
        for x in 0..j.dim {
            for y in x..j.dim {
                if j.parity[x] ^ j.parity[y] != p {
                    continue;
                }
                let odd = j.parity[x] & j.parity[y] == 1;
                let d = rs[x].commutator(&rs[y], odd);
                if ech.insert(d.data.clone()) {
                    out.basis.push(d);
                    out.parity.push(p);
                }
            }
        }
    }
    Ok(out)
}

pub fn all_inner(j: &SuperAlgebra) -> Result<bool, StructureError> {
    let len = j.dim * j.dim;
    let inner = inner_derivations(j)?.subspace(j.field, len);
    let all = derivations(j).subspace(j.field, len);
    Ok(inner.equals(&all).expect("same ambient"))
}

/// Der(A) with the supercommutator, in the computed basis (even elements first).
pub fn derivation_algebra(a: &SuperAlgebra) -> Result<SuperAlgebra, StructureError> {
    let der = derivations(a);
    bracket_algebra(a.field, &der, &format!("Der({})", a.name))
}

fn bracket_algebra(f: Field, der: &DerivationSpace, name: &str) -> Result<SuperAlgebra, StructureError> {
    let n = der.dim();
    if n == 0 {
        return Ok(TableBuilder::new(f, 0).build(name, vec![], vec![])?);
    }
    let len = der.basis[0].data.len();
    let space = der.subspace(f, len);
    let coords_basis = Matrix::from_rows(f, len, der.basis.iter().map(|m| m.data.clone()).collect());
    let mut tb = TableBuilder::new(f, n);
    for i in 0..n {
        for j in 0..n {
            let odd = der.parity[i] & der.parity[j] == 1;
            let c = der.basis[i].commutator(&der.basis[j], odd);
            let s = space.coordinates(&c.data).ok_or(StructureError::NotClosed)?;
            // echelon coordinates → coordinates in der.basis
            let v = crate::linalg::solve_linear(&coords_basis, &space_vector(&space, &s)).ok().flatten().ok_or(StructureError::NotClosed)?;
            tb.add_vec(i, j, &v);
        }
    }
    let names = (0..n).map(|i| format!("d{i}")).collect();
    Ok(tb.build(name, der.parity.clone(), names)?)
}

fn space_vector(s: &Subspace, coords: &[Scalar]) -> Vector {
    let mut v = vec![s.field().zero(); s.ambient_dim];
    for (c, b) in coords.iter().zip(s.vectors()) {
        crate::linalg::axpy(&mut v, c, &b);
    }
    v
}

/// `map` (rows: images of A's basis in B) is an injective even algebra homomorphism.
pub fn verify_homomorphism(a: &SuperAlgebra, b: &SuperAlgebra, map: &Matrix) -> CheckReport {
    let name = "algebra homomorphism";
    let fail = |msg: String, idx: Vec<usize>, res: Vector| {
        let labels = idx.iter().map(|&i| a.basis_names[i].clone()).chain([msg]).collect();
        CheckReport::fail(name, Witness { indices: idx, labels, residual: res })
    };
    if a.field != b.field {
        return fail("field mismatch".into(), vec![], vec![]);
    }
    if map.rows != a.dim || map.cols != b.dim {
        return fail(format!("map is {}×{}, expected {}×{}", map.rows, map.cols, a.dim, b.dim), vec![], vec![]);
    }
    for i in 0..a.dim {
        if !is_zero_vec(map.row(i)) && b.parity_of(map.row(i)) != Some(a.parity[i]) {
            return fail("not even".into(), vec![i], map.row(i).to_vec());
        }
    }
    if map.rank() != a.dim {
        return fail("not injective".into(), vec![], vec![]);
    }
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = map.apply(&a.mul(&a.basis(i), &a.basis(j)));
            let rhs = b.mul(map.row(i), map.row(j));
            if lhs != rhs {
                return fail("not multiplicative".into(), vec![i, j], vsub(&lhs, &rhs));
            }
        }
    }
    CheckReport::pass(name)
}

pub fn verify_isomorphism(a: &SuperAlgebra, b: &SuperAlgebra, map: &Matrix) -> CheckReport {
    if a.dim != b.dim {
        let w = Witness { indices: vec![], labels: vec![format!("dimensions {} and {}", a.dim, b.dim)], residual: vec![] };
        return CheckReport::fail("algebra isomorphism", w);
    }
    let r = verify_homomorphism(a, b, map);
    if r.passed {
        CheckReport::pass("algebra isomorphism")
    } else {
        r
    }
}

/// The algebra in the basis given by the rows of an invertible P.
pub fn transport(a: &SuperAlgebra, p: &Matrix) -> Option<SuperAlgebra> {
    let inv = p.inverse()?;
    let rows = p.row_vecs();
    let mut parity = Vec::new();
    for r in &rows {
        parity.push(a.parity_of(r)?);
    }
    let mut tb = TableBuilder::new(a.field, a.dim);
    for (i, x) in rows.iter().enumerate() {
        for (j, y) in rows.iter().enumerate() {
            tb.add_vec(i, j, &inv.apply(&a.mul(x, y)));
        }
    }
    let names = rows.iter().map(|r| a.format_vec(r)).collect();
    tb.build(&a.name, parity, names).ok()
}

fn even_basis(a: &SuperAlgebra) -> Vec<Vector> {
    (0..a.dim).filter(|&i| a.parity[i] == 0).map(|i| a.basis(i)).collect()
}

fn odd_basis(a: &SuperAlgebra) -> Vec<Vector> {
    (0..a.dim).filter(|&i| a.parity[i] == 1).map(|i| a.basis(i)).collect()
}

/// Matrix of v ↦ f(v) on span(basis), in basis coordinates (rows: images).
fn restricted(a: &SuperAlgebra, basis: &[Vector], f: impl Fn(&Vector) -> Vector) -> Option<Matrix> {
    let s = a.span(basis.to_vec());
    let rows: Option<Vec<Vector>> = basis.iter().map(|v| coords_in(&s, basis, &f(v))).collect();
    Some(Matrix::from_rows(a.field, basis.len(), rows?))
}

/// Coordinates of v in the given (not necessarily echelon) basis of s.
fn coords_in(s: &Subspace, basis: &[Vector], v: &Vector) -> Option<Vector> {
    if !s.contains(v) {
        return None;
    }
    let f = s.field();
    let m = Matrix::from_rows(f, s.ambient_dim, basis.to_vec());
    crate::linalg::solve_linear(&m, v).ok().flatten()
}

fn combine(f: Field, basis: &[Vector], c: &[Scalar]) -> Vector {
    let mut v = vec![f.zero(); basis[0].len()];
    for (s, b) in c.iter().zip(basis) {
        crate::linalg::axpy(&mut v, s, b);
    }
    v
}

/// Even idempotents other than 0: from eigenvectors of multiplication by a few
/// elements of the (at most 2-dim) even part.
fn even_idempotents(a: &SuperAlgebra) -> Vec<Vector> {
    let f = a.field;
    let ev = even_basis(a);
    let mut out: Vec<Vector> = Vec::new();
    let push = |e: Vector, out: &mut Vec<Vector>| {
        if !is_zero_vec(&e) && a.is_idempotent(&e) && !out.contains(&e) {
            out.push(e);
        }
    };
    if ev.is_empty() || ev.len() > 2 {
        return out;
    }
    let mut gens = ev.clone();
    if ev.len() == 2 {
        for (s, t) in [(1, 1), (1, 2), (1, -1), (2, 1)] {
            gens.push(combine(f, &ev, &[f.int(s), f.int(t)]));
        }
    }
    for b in gens {
        let Some(lb) = restricted(a, &ev, |v| a.mul(&b, v)) else { continue };
        for (lam, _) in roots(&charpoly(&lb), f).roots {
            let shifted = lb.sub(&Matrix::scalar(f, ev.len(), &lam));
            for c in nullspace(&shifted).vectors() {
                let v = combine(f, &ev, &c);
                let w = a.mul(&v, &v);
                let k = (0..a.dim).find(|&i| !v[i].is_zero()).unwrap();
                if let Some(s) = w[k].div(&v[k]) {
                    if !s.is_zero() && vscale(&s, &v) == w {
                        push(vscale(&s.inv().unwrap(), &v), &mut out);
                    }
                }
            }
        }
    }
    out
}

/// Candidate normal-form bases (rows) for small algebras, plus reasons a normal form
/// needs an extension of the field.
fn normal_bases(a: &SuperAlgebra) -> (Vec<Matrix>, Vec<String>) {
    let f = a.field;
    let mut out = Vec::new();
    let mut notes = Vec::new();
    let unit = a.unit();
    match a.dim {
        0 => return (vec![Matrix::zeros(f, 0, 0)], notes),
        1 => {
            let x = a.basis(0);
            let c = a.mul(&x, &x)[0].clone();
            let x = if c.is_zero() { x } else { vscale(&c.inv().unwrap(), &x) };
            out.push(Matrix::from_rows(f, 1, vec![x]));
            return (out, notes);
        }
        2 if unit.is_some() => {
            let u = unit.unwrap();
            for k in 0..2 {
                let s = a.basis(k);
                if a.span(vec![u.clone(), s.clone()]).dim() < 2 {
                    continue;
                }
                let p = Matrix::from_rows(f, 2, vec![u.clone(), s.clone()]);
                let inv = p.inverse().unwrap();
                let sq = inv.apply(&a.mul(&s, &s));
                // s' = s − (c1/2)·1 has s'² = d·1
                let s1 = vsub(&s, &vscale(&(&sq[1] * &f.half()), &u));
                let d = inv.apply(&a.mul(&s1, &s1))[0].clone();
                let s2 = if d.is_zero() {
                    s1
                } else {
                    match d.sqrt() {
                        Some(r) => vscale(&r.inv().unwrap(), &s1),
                        None => {
                            notes.push(format!("√({d})"));
                            s1
                        }
                    }
                };
                out.push(Matrix::from_rows(f, 2, vec![u.clone(), s2]));
                break;
            }
            return (out, notes);
        }
        _ => {}
    }
    let ev = even_basis(a);
    let od = odd_basis(a);
    if od.len() != 2 || ev.is_empty() || ev.len() > 2 {
        return (out, notes);
    }
    for e1 in even_idempotents(a) {
        let mut evens = vec![e1.clone()];
        if ev.len() == 2 {
            match &unit {
                Some(u) if *u != e1 => evens.push(vsub(u, &e1)),
                _ => continue,
            }
        }
        let Some(k) = restricted(a, &od, |v| a.mul(&e1, v)) else { continue };
        let rs = roots(&charpoly(&k), f);
        if !rs.complete {
            notes.push("eigenvalues of L_e on U1".into());
            continue;
        }
        let mut pairs: Vec<(Vector, Vector, bool)> = Vec::new();
        match rs.roots.as_slice() {
            [(l1, 1), (l2, 1)] => {
                let vec_for = |l: &Scalar| {
                    let c = nullspace(&k.sub(&Matrix::scalar(f, 2, l))).vectors().remove(0);
                    combine(f, &od, &c)
                };
                let (v1, v2) = (vec_for(l1), vec_for(l2));
                pairs.push((v1.clone(), v2.clone(), false));
                pairs.push((v2, v1, false));
            }
            [(l, 2)] => {
                let n = k.sub(&Matrix::scalar(f, 2, l));
                if n.is_zero() {
                    pairs.push((od[0].clone(), od[1].clone(), false));
                } else {
                    let i = (0..2).find(|&i| !is_zero_vec(n.row(i))).unwrap();
                    let x = od[i].clone();
                    let y = combine(f, &od, n.row(i));
                    pairs.push((x, y, true));
                }
            }
            _ => {
                notes.push("eigenvalues of L_e on U1".into());
                continue;
            }
        }
        let es = a.span(evens.clone());
        for (x, y, chain) in pairs {
            let c = a.circle(&x, &y);
            let Some(cc) = coords_in(&es, &evens, &c) else { continue };
            let lead = cc.iter().find(|s| !s.is_zero()).cloned();
            let (x, y) = match (lead, chain) {
                (None, _) => (x, y),
                (Some(l), false) => (x, vscale(&l.inv().unwrap(), &y)),
                (Some(l), true) => match l.sqrt() {
                    Some(d) => {
                        let di = d.inv().unwrap();
                        (vscale(&di, &x), vscale(&di, &y))
                    }
                    None => {
                        notes.push(format!("√({l})"));
                        continue;
                    }
                },
            };
            let mut rows = evens.clone();
            rows.push(x);
            rows.push(y);
            let p = Matrix::from_rows(f, a.dim, rows);
            if p.is_invertible() {
                out.push(p);
            }
        }
    }
    (out, notes)
}

/// Isomorphism search for algebras of dimension ≤ 4: normal forms (idempotents, then a
/// Jordan basis of L_{e1} on U1 rescaled to fix the circle product) are compared as
/// tables. Not complete outside these patterns; `Ok(None)` means none found.
pub fn search_isomorphism_small(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<Option<Matrix>, StructureError> {
    if a.field != b.field {
        return Err(StructureError::Field);
    }
    if a.dim != b.dim {
        return Err(StructureError::Dimension(a.dim, b.dim));
    }
    if a.dim > 4 {
        return Err(StructureError::TooLarge(a.dim));
    }
    if a.parity == b.parity && a.constants() == b.constants() {
        return Ok(Some(Matrix::identity(a.field, a.dim)));
    }
    let mut pa = a.parity.clone();
    let mut pb = b.parity.clone();
    pa.sort();
    pb.sort();
    if pa != pb {
        return Ok(None);
    }
    let (na, notes_a) = normal_bases(a);
    let (nb, notes_b) = normal_bases(b);
    let tb: Vec<(Matrix, SuperAlgebra)> = nb.into_iter().filter_map(|p| transport(b, &p).map(|t| (p, t))).collect();
    for p in na {
        let Some(ta) = transport(a, &p) else { continue };
        for (q, t) in &tb {
            if ta.parity == t.parity && ta.constants() == t.constants() {
                let map = p.inverse().unwrap().mul(q);
                if verify_isomorphism(a, b, &map).passed {
                    return Ok(Some(map));
                }
            }
        }
    }
    let mut notes = notes_a;
    notes.extend(notes_b);
    if notes.is_empty() {
        Ok(None)
    } else {
        Err(StructureError::RequiresExtension(notes.join(", ")))
    }
}

#[derive(Clone, Debug)]
pub struct KroneckerFactor {
    /// The supercommutant of the embedded copy (within the nucleus if needed), as an algebra.
    pub z: SuperAlgebra,
    /// Its basis inside U.
    pub z_space: Subspace,
    /// Z ⊗ D → U, z⊗d ↦ z·d.
    pub iso: Matrix,
    /// When D has an idempotent named e1: whether Z ∩ (U₀ + U₂) relative to its image differs from Z.
    pub peirce_variant_differs: Option<bool>,
}

/// U ≅ Z ⊗ D for the supplied unital embedding D → U, with Z the supercommutant of the image
/// (intersected with the nucleus of U when that alone is too large, as for supercommutative D).
pub fn kronecker_factor(u: &SuperAlgebra, embed: &Matrix, d: &SuperAlgebra) -> Result<KroneckerFactor, StructureError> {
    let f = u.field;
    let hom = verify_homomorphism(d, u, embed);
    if !hom.passed {
        return Err(StructureError::Embedding(hom.to_string()));
    }
    let image = Subspace::span(f, u.dim, embed.row_vecs());
    match (u.unit(), d.unit()) {
        (Some(uu), Some(du)) if embed.apply(&du) == uu => {}
        _ => return Err(StructureError::Embedding("not unital".into())),
    }
    let mut z_space = supercommutant(u, &image);
    if z_space.dim() * d.dim != u.dim {
        // a supercommutative D commutes with everything; cut down to the part that also
        // associates with all of U
        z_space = z_space.intersect(&nucleus(u)).map_err(|_| StructureError::Field)?;
    }
    let z = u.subalgebra(&z_space, "Z").map_err(|e| StructureError::NotSubalgebra(e.to_string()))?;
    let peirce_variant_differs = d.index_of("e1").and_then(|i| {
        let pd = peirce_decompose(u, embed.row(i)).ok()?;
        let even = pd.u(0).sum(pd.u(2)).ok()?;
        let zp = z_space.intersect(&even).ok()?;
        Some(zp != z_space)
    });
    let t = graded_tensor(&z, d).map_err(|e| StructureError::Embedding(e.to_string()))?;
    let zb = z_space.vectors();
    let mut rows = Vec::with_capacity(t.dim);
    for zi in &zb {
        for j in 0..d.dim {
            rows.push(u.mul(zi, embed.row(j)));
        }
    }
    let iso = Matrix::from_rows(f, u.dim, rows);
    let r = verify_isomorphism(&t, u, &iso);
    if !r.passed {
        return Err(StructureError::Embedding(format!("evaluation map: {r}")));
    }
    Ok(KroneckerFactor { z, z_space, iso, peirce_variant_differs })
}

/// Identity map A → A, as an embedding matrix.
pub fn identity_embedding(a: &SuperAlgebra) -> Matrix {
    Matrix::from_rows(a.field, a.dim, (0..a.dim).map(|i| unit_vec(a.field, a.dim, i)).collect())
}
