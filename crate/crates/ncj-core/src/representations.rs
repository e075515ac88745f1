//! Bimodule analysis: both axiom routes, generated submodules, envelopes,
//! irreducibility, intertwiners, decomposition and Peirce components.

use std::fmt;

use crate::algebra::{AlgebraError, SuperAlgebra};
use crate::constructions::{split_null_extension, symmetrize};
use crate::field::{Field, Scalar};
use crate::identities::{
    check_jordan_scoped, check_noncommutative_jordan_scoped, CheckReport, Scope, Witness,
};
use crate::linalg::{is_zero_vec, nullspace, Echelon, Matrix, Subspace, Vector};
use crate::module::SuperBimodule;
use crate::peirce::{peirce_from_operator, PeirceDecomposition, PeirceError};

/// Names a module basis vector inside witnesses.
fn module_label(m: &SuperBimodule, i: usize) -> String {
    format!("[{}]", m.basis_names[i])
}

/// Compares two operators row by row; the first differing row is the witness.
pub fn check_matrix_identity(m: &SuperBimodule, name: &str, lhs: &Matrix, rhs: &Matrix) -> CheckReport {
    let d = lhs.sub(rhs);
    for i in 0..d.rows {
        if !is_zero_vec(d.row(i)) {
            let w = Witness { indices: vec![i], labels: vec![module_label(m, i)], residual: d.row(i).to_vec() };
            return CheckReport::fail(name, w);
        }
    }
    CheckReport::pass(name)
}

/// M is a noncommutative Jordan bimodule iff A ⋉ M is noncommutative Jordan.
/// Tuples with two or more module letters vanish in the extension and are skipped.
pub fn check_ncj_bimodule(m: &SuperBimodule) -> CheckReport {
    let e = split_null_extension(&m.algebra, m);
    let scope = Scope { ideal_start: Some(m.algebra.dim) };
    check_noncommutative_jordan_scoped(&e, scope)
}

/// L₁ = R₁ = id when the algebra has a unit.
pub fn check_unital(m: &SuperBimodule) -> CheckReport {
    let name = "unital action";
    let Some(one) = m.algebra.unit() else {
        return CheckReport::pass(name);
    };
    let id = Matrix::identity(m.algebra.field, m.mdim);
    CheckReport::all(
        name,
        [
            check_matrix_identity(m, "L_1 = id", &m.l_of(&one), &id),
            check_matrix_identity(m, "R_1 = id", &m.r_of(&one), &id),
        ],
    )
}

/// The two-operator description: R⁺_a (circle action) and R⁻_a (half bracket) per basis element.
#[derive(Clone, Debug)]
pub struct PlusMinus {
    pub algebra: SuperAlgebra,
    pub mparity: Vec<u8>,
    pub names: Vec<String>,
    pub rplus: Vec<Matrix>,
    pub rminus: Vec<Matrix>,
}

impl PlusMinus {
    pub fn of(m: &SuperBimodule) -> PlusMinus {
        let n = m.algebra.dim;
        PlusMinus {
            algebra: m.algebra.clone(),
            mparity: m.mparity.clone(),
            names: m.basis_names.clone(),
            rplus: (0..n).map(|a| m.rplus_op(a)).collect(),
            rminus: (0..n).map(|a| m.rminus_op(a)).collect(),
        }
    }

    /// L = R⁺ − R⁻, R = R⁺ + R⁻.
    pub fn assemble(&self, name: &str) -> Result<SuperBimodule, AlgebraError> {
        SuperBimodule::from_plus_minus(&self.algebra, name, self.mparity.clone(), self.names.clone(), &self.rplus, &self.rminus)
    }

    fn op(&self, ops: &[Matrix], x: &[Scalar]) -> Matrix {
        let f = self.algebra.field;
        let k = self.mparity.len();
        let mut r = Matrix::zeros(f, k, k);
        for (a, s) in x.iter().enumerate() {
            if !s.is_zero() {
                r = r.add(&ops[a].scale(s));
            }
        }
        r
    }

    pub fn rplus_of(&self, x: &[Scalar]) -> Matrix {
        self.op(&self.rplus, x)
    }

    pub fn rminus_of(&self, x: &[Scalar]) -> Matrix {
        self.op(&self.rminus, x)
    }
}

/// R⁺ as a Jordan bimodule over A^(+): only the circle action survives.
pub fn circle_module(pm: &PlusMinus) -> Result<SuperBimodule, AlgebraError> {
    let sym = symmetrize(&pm.algebra);
    let zeros: Vec<Matrix> = pm.rminus.iter().map(|r| Matrix::zeros(r.field, r.rows, r.cols)).collect();
    SuperBimodule::from_plus_minus(&sym, "circle", pm.mparity.clone(), pm.names.clone(), &pm.rplus, &zeros)
}

/// The Jordan identity for R⁺ over the split null extension of A^(+).
pub fn check_jordan_rplus(pm: &PlusMinus) -> CheckReport {
    match circle_module(pm) {
        Err(e) => CheckReport::fail("Jordan representation", Witness { indices: vec![], labels: vec![e.to_string()], residual: vec![] }),
        Ok(c) => {
            let e = split_null_extension(&c.algebra, &c);
            check_jordan_scoped(&e, Scope { ideal_start: Some(c.algebra.dim) })
        }
    }
}

fn pair_witness(pm: &PlusMinus, name: &str, a: usize, b: usize, d: &Matrix) -> Option<CheckReport> {
    (0..d.rows).find(|&i| !is_zero_vec(d.row(i))).map(|i| {
        let labels = vec![
            pm.algebra.basis_names[a].clone(),
            pm.algebra.basis_names[b].clone(),
            format!("[{}]", pm.names[i]),
        ];
        CheckReport::fail(name, Witness { indices: vec![a, b, i], labels, residual: d.row(i).to_vec() })
    })
}

/// [R⁺_a, R⁻_b] = ½R⁺_{[a,b]} on all basis pairs.
pub fn check_rplus_rminus_commutator(pm: &PlusMinus) -> CheckReport {
    let name = "[R+_a, R-_b] = R+_[a,b]/2";
    let a_ = &pm.algebra;
    let h = a_.field.half();
    for a in 0..a_.dim {
        for b in 0..a_.dim {
            let odd = a_.parity[a] & a_.parity[b] == 1;
            let lhs = pm.rplus[a].commutator(&pm.rminus[b], odd);
            let rhs = pm.rplus_of(&a_.bracket(&a_.basis(a), &a_.basis(b))).scale(&h);
            if let Some(r) = pair_witness(pm, name, a, b, &lhs.sub(&rhs)) {
                return r;
            }
        }
    }
    CheckReport::pass(name)
}

/// R⁻_a R⁺_b + (−1)^{ab} R⁻_b R⁺_a = R⁻_{a∘b} on all basis pairs.
pub fn check_rminus_circle(pm: &PlusMinus) -> CheckReport {
    let name = "R-_a R+_b + R-_b R+_a = R-_(a∘b)";
    let a_ = &pm.algebra;
    for a in 0..a_.dim {
        for b in a..a_.dim {
            let odd = a_.parity[a] & a_.parity[b] == 1;
            let second = pm.rminus[b].mul(&pm.rplus[a]);
            let lhs = pm.rminus[a].mul(&pm.rplus[b]);
            let lhs = if odd { lhs.sub(&second) } else { lhs.add(&second) };
            let rhs = pm.rminus_of(&a_.circle(&a_.basis(a), &a_.basis(b)));
            if let Some(r) = pair_witness(pm, name, a, b, &lhs.sub(&rhs)) {
                return r;
            }
        }
    }
    CheckReport::pass(name)
}

/// The operator route: R⁺ is a Jordan representation of A^(+) and both R⁺R⁻ relations hold.
pub fn check_via_rpm(pm: &PlusMinus) -> CheckReport {
    let j = check_jordan_rplus(pm);
    if !j.passed {
        return j;
    }
    CheckReport::all("noncommutative Jordan representation", [check_rplus_rminus_commutator(pm), check_rminus_circle(pm)])
}

/// Runs both routes; a disagreement is reported as its own failure and signals a bug.
pub fn check_both_routes(m: &SuperBimodule) -> (CheckReport, bool) {
    let a = check_ncj_bimodule(m);
    let b = check_via_rpm(&PlusMinus::of(m));
    if a.passed != b.passed {
        let w = Witness { indices: vec![], labels: vec![a.to_string(), b.to_string()], residual: vec![] };
        return (CheckReport::fail("route disagreement (sign convention)", w), false);
    }
    (a, true)
}

/// Least invariant subspace containing `v`.
pub fn submodule_generated(m: &SuperBimodule, v: &[Scalar]) -> Subspace {
    closure(m.algebra.field, m.mdim, &m.action_operators(), &[v.to_vec()])
}

pub(crate) fn closure(field: Field, n: usize, ops: &[Matrix], seeds: &[Vector]) -> Subspace {
    let mut ech = Echelon::new(field, n);
    let mut queue: Vec<Vector> = Vec::new();
    for s in seeds {
        if ech.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for op in ops {
            let w = op.apply(&v);
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    ech.to_subspace()
}

fn flatten(m: &Matrix) -> Vector {
    m.data.clone()
}

fn unflatten(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_rows(field, n, v.chunks(n).map(|c| c.to_vec()).collect())
}

fn algebra_closure(field: Field, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let mut ech = Echelon::new(field, n * n);
    let mut basis = Vec::new();
    let id = Matrix::identity(field, n);
    ech.insert(flatten(&id));
    basis.push(id);
    let mut queue: Vec<Matrix> = Vec::new();
    for g in gens {
        if ech.insert(flatten(g)) {
            basis.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.mul(g);
            if ech.insert(flatten(&y)) {
                basis.push(y.clone());
                queue.push(y);
            }
        }
    }
    basis
}

/// Basis of the associative algebra generated by the identity and all action operators.
pub fn envelope(m: &SuperBimodule) -> Vec<Matrix> {
    algebra_closure(m.algebra.field, m.mdim, &m.action_operators())
}

/// As `envelope`, with the parity involution adjoined: its invariant subspaces are
/// exactly the graded submodules.
pub fn graded_envelope(m: &SuperBimodule) -> Vec<Matrix> {
    let mut gens = m.action_operators();
    gens.push(m.parity_operator());
    algebra_closure(m.algebra.field, m.mdim, &gens)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Irreducibility {
    /// The graded envelope is the full operator algebra.
    Irreducible,
    /// A proper nonzero graded submodule.
    Reducible(Subspace),
    /// Envelope too small but no witness found by the scan; plain irreducibility over a
    /// non-closed field is not decided.
    Undecided,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducibility::Irreducible => write!(f, "absolutely irreducible"),
            Irreducibility::Reducible(s) => write!(f, "reducible (submodule of dim {})", s.dim()),
            Irreducibility::Undecided => write!(f, "undecided"),
        }
    }
}

/// Homogeneous scan order: basis vectors, then e_i ± e_j of equal parity.
fn scan_vectors(m: &SuperBimodule) -> Vec<Vector> {
    let f = m.algebra.field;
    let mut out: Vec<Vector> = (0..m.mdim).map(|i| m.basis(i)).collect();
    for i in 0..m.mdim {
        for j in i + 1..m.mdim {
            if m.mparity[i] != m.mparity[j] {
                continue;
            }
            for s in [f.one(), -f.one()] {
                let mut v = m.basis(i);
                v[j] = s;
                out.push(v);
            }
        }
    }
    out
}

pub fn is_abs_irreducible(m: &SuperBimodule) -> Irreducibility {
    if m.mdim == 0 {
        return Irreducibility::Undecided;
    }
    if graded_envelope(m).len() == m.mdim * m.mdim {
        return Irreducibility::Irreducible;
    }
    for v in scan_vectors(m) {
        let s = submodule_generated(m, &v);
        if s.dim() < m.mdim {
            return Irreducibility::Reducible(s);
        }
    }
    Irreducibility::Undecided
}

fn raw_left(m: &SuperBimodule, a: usize) -> Matrix {
    let mut r = Matrix::zeros(m.algebra.field, m.mdim, m.mdim);
    for i in 0..m.mdim {
        for k in 0..m.mdim {
            r.set(i, k, m.l(a, i, k).clone());
        }
    }
    r
}

/// Maps T: M → N (written on the right, shifting parity by `shift`) with
/// (a·m)T = a·(mT) and (m·a)T = (−1)^{shift·a} (mT)·a. Returned as flattened
/// mdim × ndim matrices.
pub fn intertwiners(m: &SuperBimodule, n: &SuperBimodule, shift: u8) -> Result<Subspace, AlgebraError> {
    if m.algebra != n.algebra {
        return Err(AlgebraError::Invalid("modules over different algebras".into()));
    }
    let f = m.algebra.field;
    let (p, q) = (m.mdim, n.mdim);
    // unknown X[i][k] at index i*q + k; each equation is a column
    let mut cols: Vec<Vector> = Vec::new();
    let mut push = |col: Vector| {
        if !is_zero_vec(&col) {
            cols.push(col);
        }
    };
    for i in 0..p {
        for k in 0..q {
            if m.mparity[i] ^ shift != n.mparity[k] {
                let mut col = vec![f.zero(); p * q];
                col[i * q + k] = f.one();
                push(col);
            }
        }
    }
    for a in 0..m.algebra.dim {
        let neg = shift & m.algebra.parity[a] == 1;
        for (am, an, sign) in [
            (raw_left(m, a), raw_left(n, a), false),
            (m.r_op(a), n.r_op(a), neg),
        ] {
            // (A X)[i][k] − s (X B)[i][k] = 0
            for i in 0..p {
                for k in 0..q {
                    let mut col = vec![f.zero(); p * q];
                    for j in 0..p {
                        let c = am.get(i, j);
                        if !c.is_zero() {
                            col[j * q + k] += c;
                        }
                    }
                    for j in 0..q {
                        let c = an.get(j, k);
                        if !c.is_zero() {
                            if sign {
                                col[i * q + j] += c;
                            } else {
                                col[i * q + j] -= c;
                            }
                        }
                    }
                    push(col);
                }
            }
        }
    }
    if cols.is_empty() {
        return Ok(Subspace::full(f, p * q));
    }
    let mut sys = Matrix::zeros(f, p * q, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, s) in col.iter().enumerate() {
            if !s.is_zero() {
                sys.set(r, c, s.clone());
            }
        }
    }
    Ok(nullspace(&sys))
}

/// An invertible intertwiner of the given parity shift, if the scan finds one.
pub fn isomorphism(m: &SuperBimodule, n: &SuperBimodule, shift: u8) -> Result<Option<Matrix>, AlgebraError> {
    if m.mdim != n.mdim {
        return Ok(None);
    }
    let f = m.algebra.field;
    let space = intertwiners(m, n, shift)?;
    let basis: Vec<Matrix> = space.vectors().iter().map(|v| unflatten(f, n.mdim, v)).collect();
    let mut cands = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            cands.push(basis[i].add(&basis[j]));
            cands.push(basis[i].sub(&basis[j]));
        }
    }
    if !basis.is_empty() {
        let mut all = basis[0].clone();
        for (k, b) in basis.iter().enumerate().skip(1) {
            all = all.add(&b.scale(&f.int(k as i64 + 1)));
        }
        cands.push(all);
    }
    Ok(cands.into_iter().find(|c| c.is_invertible()))
}

/// Isomorphic by an even map.
pub fn modules_isomorphic(m: &SuperBimodule, n: &SuperBimodule) -> Result<bool, AlgebraError> {
    Ok(isomorphism(m, n, 0)?.is_some())
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Direct summands whose sum is the module.
    pub summands: Vec<Subspace>,
    /// False when some summand is neither confirmed irreducible nor split further
    /// (indecomposable, or a splitting was not detected).
    pub complete: bool,
}

/// Greedy peeling: a smallest generated submodule N is split off when the commutant of
/// the envelope contains a projection onto N (a linear condition), whose kernel is an
/// invariant complement.
pub fn decompose(m: &SuperBimodule) -> Decomposition {
    let f = m.algebra.field;
    let mut out = Decomposition { summands: vec![], complete: true };
    peel(m, &Matrix::identity(f, m.mdim), &mut out);
    out
}

fn peel(m: &SuperBimodule, embed: &Matrix, out: &mut Decomposition) {
    let f = m.algebra.field;
    let k = m.mdim;
    if k == 0 {
        return;
    }
    let whole = || Subspace::span(f, embed.cols, embed.row_vecs());
    if is_abs_irreducible(m) == Irreducibility::Irreducible {
        out.summands.push(whole());
        return;
    }
    let mut best: Option<Subspace> = None;
    for v in scan_vectors(m) {
        let s = submodule_generated(m, &v);
        if s.dim() > 0 && s.dim() < k && best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
            best = Some(s);
        }
    }
    let Some(n) = best else {
        out.summands.push(whole());
        out.complete = false;
        return;
    };
    let Some(t) = invariant_projection(m, &n) else {
        out.summands.push(whole());
        out.complete = false;
        return;
    };
    let kernel = nullspace(&t);
    for part in [n, kernel] {
        let sub = m.restrict(&part).expect("invariant graded subspace");
        let basis = Matrix::from_rows(f, k, part.vectors());
        peel(&sub, &basis.mul(embed), out);
    }
}

/// Even T commuting with every action operator, with image N and T|_N = id.
fn invariant_projection(m: &SuperBimodule, n: &Subspace) -> Option<Matrix> {
    let f = m.algebra.field;
    let k = m.mdim;
    let comm = intertwiners(m, m, 0).ok()?;
    let cbasis: Vec<Vector> = comm.vectors();
    if cbasis.is_empty() {
        return None;
    }
    // T = Σ c_j C_j. Conditions: n_i T = n_i, and e_r T ∈ N for every basis row.
    let mats: Vec<Matrix> = cbasis.iter().map(|v| unflatten(f, k, v)).collect();
    let comp = complement_functionals(n);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for nv in n.vectors() {
        let imgs: Vec<Vector> = mats.iter().map(|c| c.apply(&nv)).collect();
        for coord in 0..k {
            rows.push(imgs.iter().map(|v| v[coord].clone()).collect());
            rhs.push(nv[coord].clone());
        }
    }
    for r in 0..k {
        let e = m.basis(r);
        let imgs: Vec<Vector> = mats.iter().map(|c| c.apply(&e)).collect();
        for phi in &comp {
            rows.push(imgs.iter().map(|v| dot(v, phi)).collect());
            rhs.push(f.zero());
        }
    }
    // solve rows · c = rhs; solve_linear works with x·M = b, so transpose
    let sys = Matrix::from_rows(f, mats.len(), rows).transpose();
    let c = crate::linalg::solve_linear(&sys, &rhs).ok()??;
    let mut t = Matrix::zeros(f, k, k);
    for (cj, mj) in c.iter().zip(&mats) {
        if !cj.is_zero() {
            t = t.add(&mj.scale(cj));
        }
    }
    Some(t)
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = a.first().map(|x| x.field().zero()).unwrap_or_else(|| Field::Rational.zero());
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

/// Linear functionals whose common kernel is exactly the subspace.
fn complement_functionals(s: &Subspace) -> Vec<Vector> {
    let f = s.field();
    let k = s.ambient_dim;
    if s.dim() == 0 {
        return (0..k).map(|i| crate::linalg::unit_vec(f, k, i)).collect();
    }
    let b = Matrix::from_rows(f, k, s.vectors()).transpose();
    nullspace(&b).vectors()
}

/// Peirce components of M relative to an idempotent e of the algebra, from T = L_e + R_e on M.
pub fn module_peirce(m: &SuperBimodule, e: &[Scalar]) -> Result<PeirceDecomposition, PeirceError> {
    let a = &m.algebra;
    if a.mul(e, e) != e {
        return Err(PeirceError::NotIdempotent);
    }
    let t = m.l_of(e).add(&m.r_of(e));
    peirce_from_operator(&t, e.to_vec())
}

/// How the idempotent e acts on M: which Peirce components are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// M = M₂(e)
    Unital,
    /// M = M₁(e)
    Half,
    /// M = M₀(e): e acts by zero
    Zero,
    Mixed,
}

pub fn module_kind(pd: &PeirceDecomposition, mdim: usize) -> ModuleKind {
    match (pd.u(0).dim(), pd.u(1).dim(), pd.u(2).dim()) {
        (_, _, d) if d == mdim => ModuleKind::Unital,
        (_, d, _) if d == mdim => ModuleKind::Half,
        (d, _, _) if d == mdim => ModuleKind::Zero,
        _ => ModuleKind::Mixed,
    }
}

/// Operator relations forced on every unital noncommutative Jordan module over D_t(1),
/// t ≠ 1 (basis e1, e2, x, y), with Peirce projections relative to e1.
pub fn dt1_relations(m: &SuperBimodule, t: &Scalar) -> CheckReport {
    let a = &m.algebra;
    let f = a.field;
    let pd = match module_peirce(m, &a.e("e1")) {
        Ok(pd) => pd,
        Err(e) => return CheckReport::fail("Peirce decomposition", Witness { indices: vec![], labels: vec![e.to_string()], residual: vec![] }),
    };
    let (p0, p1, p2) = (pd.p(0), pd.p(1), pd.p(2));
    let l = |n: &str| m.l_of(&a.e(n));
    let r = |n: &str| m.r_of(&a.e(n));
    let (lx, ly, rx, ry, le1, re1) = (l("x"), l("y"), r("x"), r("y"), l("e1"), r("e1"));
    let two = f.int(2);
    let two_t = &two * t;
    let one_t = &(&f.one() - t) * &two;
    let zero = Matrix::zeros(f, m.mdim, m.mdim);
    let rels = [
        ("P0 Rx = 0", p0.mul(&rx), zero.clone()),
        ("P2 Lx = 0", p2.mul(&lx), zero.clone()),
        ("P2 Rx Ry = 2 P2", p2.mul(&rx).mul(&ry), p2.scale(&two)),
        ("P0 Lx Ly = 2t P0", p0.mul(&lx).mul(&ly), p0.scale(&two_t)),
        ("P0 Ry Rx = -2t P0", p0.mul(&ry).mul(&rx), p0.scale(&-&two_t)),
        ("P2 Ly Lx = -2 P2", p2.mul(&ly).mul(&lx), p2.scale(&-&two)),
        (
            "2(1-t) P1 Le1 = P1 (Ry P2 Rx - Ly P0 Lx)",
            p1.mul(&le1).scale(&one_t),
            p1.mul(&ry.mul(p2).mul(&rx).sub(&ly.mul(p0).mul(&lx))),
        ),
        (
            "2(1-t) P1 Re1 = P1 (Rx P0 Ry - Lx P2 Ly)",
            p1.mul(&re1).scale(&one_t),
            p1.mul(&rx.mul(p0).mul(&ry).sub(&lx.mul(p2).mul(&ly))),
        ),
        ("P2 Rx Ly Lx = 2t P2 Rx", p2.mul(&rx).mul(&ly).mul(&lx), p2.mul(&rx).scale(&two_t)),
        ("P0 Lx Ry Rx Ly = 4t P0", p0.mul(&lx).mul(&ry).mul(&rx).mul(&ly), p0.scale(&(&two * &two_t))),
    ];
    CheckReport::all(
        "D_t(1) module relations",
        rels.iter().map(|(name, lhs, rhs)| check_matrix_identity(m, name, lhs, rhs)),
    )
}

/// E = 2/(1+t) (R⁺_x)², F = 2/(1+t) (R⁺_y)², H = 2/(1+t) (R⁺_x R⁺_y + R⁺_y R⁺_x) over D_t(½,½,0).
pub fn sl2_triple(m: &SuperBimodule, t: &Scalar) -> Option<(Matrix, Matrix, Matrix)> {
    let a = &m.algebra;
    let f = a.field;
    let c = f.int(2).div(&(&f.one() + t))?;
    let (x, y) = (m.rplus_of(&a.e("x")), m.rplus_of(&a.e("y")));
    Some((x.mul(&x).scale(&c), y.mul(&y).scale(&c), x.mul(&y).add(&y.mul(&x)).scale(&c)))
}

pub fn sl2_relations(m: &SuperBimodule, t: &Scalar) -> CheckReport {
    let Some((e, fo, h)) = sl2_triple(m, t) else {
        return CheckReport::fail("sl2 triple", Witness { indices: vec![], labels: vec!["t = -1".into()], residual: vec![] });
    };
    let two = m.algebra.field.int(2);
    let br = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
    CheckReport::all(
        "sl2 relations",
        [
            check_matrix_identity(m, "[E,H] = 2E", &br(&e, &h), &e.scale(&two)),
            check_matrix_identity(m, "[F,H] = -2F", &br(&fo, &h), &fo.scale(&-&two)),
            check_matrix_identity(m, "[E,F] = H", &br(&e, &fo), &h),
        ],
    )
}

/// Over D_t(½,½,0) the R⁻ operators are polynomials in R⁺ (projections relative to e1):
/// R⁻_x = −P0R⁺_y + P1R⁺_y(P0−P2) + P2R⁺_y, R⁻_{e1} = −R⁻_{e2} = P1R⁺_y(P0−P2)R⁺_y/(1−t), R⁻_y = 0.
pub fn rminus_formulas(m: &SuperBimodule, t: &Scalar) -> CheckReport {
    let a = &m.algebra;
    let f = a.field;
    let pd = match module_peirce(m, &a.e("e1")) {
        Ok(pd) => pd,
        Err(e) => return CheckReport::fail("Peirce decomposition", Witness { indices: vec![], labels: vec![e.to_string()], residual: vec![] }),
    };
    let (p0, p1, p2) = (pd.p(0), pd.p(1), pd.p(2));
    let ryp = m.rplus_of(&a.e("y"));
    let d = p0.sub(p2);
    let rx = p0.mul(&ryp).neg().add(&p1.mul(&ryp).mul(&d)).add(&p2.mul(&ryp));
    let mut reports = vec![
        check_matrix_identity(m, "R-_x formula", &m.rminus_of(&a.e("x")), &rx),
        check_matrix_identity(m, "R-_y = 0", &m.rminus_of(&a.e("y")), &Matrix::zeros(f, m.mdim, m.mdim)),
    ];
    match (&f.one() - t).inv() {
        Some(c) => {
            let re1 = p1.mul(&ryp).mul(&d).mul(&ryp).scale(&c);
            reports.push(check_matrix_identity(m, "R-_e1 formula", &m.rminus_of(&a.e("e1")), &re1));
            reports.push(check_matrix_identity(m, "R-_e2 = -R-_e1", &m.rminus_of(&a.e("e2")), &re1.neg()));
        }
        None => reports.push(CheckReport::fail("R-_e1 formula", Witness { indices: vec![], labels: vec!["t = 1".into()], residual: vec![] })),
    }
    CheckReport::all("R- formulas", reports)
}

/// Operator Jordan product X∘Y = (XY + (−1)^{xy} YX)/2.
fn op_circle(x: &Matrix, y: &Matrix, odd: bool) -> Matrix {
    let h = x.field.half();
    let yx = y.mul(x);
    let s = if odd { x.mul(y).sub(&yx) } else { x.mul(y).add(&yx) };
    s.scale(&h)
}

/// L_{a∘b} = L_a∘L_b and R_{a∘b} = R_a∘R_b on all basis pairs (alternative action).
pub fn check_alternative_operators(m: &SuperBimodule) -> CheckReport {
    let a = &m.algebra;
    let mut reports = Vec::new();
    for i in 0..a.dim {
        for j in i..a.dim {
            let odd = a.parity[i] & a.parity[j] == 1;
            let c = a.circle(&a.basis(i), &a.basis(j));
            let (li, lj, ri, rj) = (m.l_op(i), m.l_op(j), m.r_op(i), m.r_op(j));
            let pair = format!("{},{}", a.basis_names[i], a.basis_names[j]);
            reports.push(check_matrix_identity(m, &format!("L_(a∘b) = L_a∘L_b at {pair}"), &m.l_of(&c), &op_circle(&li, &lj, odd)));
            reports.push(check_matrix_identity(m, &format!("R_(a∘b) = R_a∘R_b at {pair}"), &m.r_of(&c), &op_circle(&ri, &rj, odd)));
        }
    }
    CheckReport::all("alternative operators", reports)
}
