//! Peirce decompositions, L_e-eigenspaces of U₁, and connection/indicator verification.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{OperatorKind, SuperAlgebra};
use crate::field::{Field, Scalar};
use crate::identities::{CheckReport, Witness};
use crate::linalg::{is_zero_vec, nullspace, vadd, vscale, vsub, Matrix, Subspace, Vector};
use crate::poly::{charpoly, roots};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeirceError {
    #[error("not an even idempotent")]
    NotIdempotent,
    #[error("idempotents {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("Peirce spaces do not span: dimensions sum to {got}, expected {expected}")]
    DirectSum { got: usize, expected: usize },
    #[error("projection polynomial disagrees with the kernel for U_{0}")]
    ProjectionMismatch(u8),
    #[error("requires field extension: {0}")]
    RequiresExtension(String),
    #[error("connection witness rejected: {0}")]
    Witness(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeirceKey {
    /// U_i for one idempotent, i ∈ {0,1,2}.
    Single(u8),
    /// U_ij (i ≤ j) for a system e_1..e_n; index 0 stands for the complement.
    Pair(usize, usize),
}

impl fmt::Display for PeirceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeirceKey::Single(i) => write!(f, "U{i}"),
            PeirceKey::Pair(i, j) => write!(f, "U{i}{j}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PeirceDecomposition {
    pub idempotents: Vec<Vector>,
    pub components: BTreeMap<PeirceKey, Subspace>,
    pub projections: BTreeMap<PeirceKey, Matrix>,
}

impl PeirceDecomposition {
    pub fn u(&self, i: u8) -> &Subspace {
        &self.components[&PeirceKey::Single(i)]
    }

    pub fn p(&self, i: u8) -> &Matrix {
        &self.projections[&PeirceKey::Single(i)]
    }

    pub fn pair(&self, i: usize, j: usize) -> &Subspace {
        &self.components[&PeirceKey::Pair(i.min(j), i.max(j))]
    }

    pub fn pair_projection(&self, i: usize, j: usize) -> &Matrix {
        &self.projections[&PeirceKey::Pair(i.min(j), i.max(j))]
    }
}

/// Projections onto the blocks of a direct sum, computed from a change of basis.
fn projections_from(field: Field, n: usize, comps: &BTreeMap<PeirceKey, Subspace>) -> Result<BTreeMap<PeirceKey, Matrix>, PeirceError> {
    let total: usize = comps.values().map(Subspace::dim).sum();
    let mut rows = Vec::new();
    for s in comps.values() {
        rows.extend(s.vectors());
    }
    let b = Matrix::from_rows(field, n, rows);
    let binv = match (total == n).then(|| b.inverse()).flatten() {
        Some(m) => m,
        None => return Err(PeirceError::DirectSum { got: total, expected: n }),
    };
    let mut out = BTreeMap::new();
    let mut offset = 0;
    for (k, s) in comps {
        let mut d = Matrix::zeros(field, n, n);
        for i in offset..offset + s.dim() {
            d.set(i, i, field.one());
        }
        offset += s.dim();
        out.insert(*k, binv.mul(&d).mul(&b));
    }
    Ok(out)
}

/// Peirce decomposition of a space from the operator T = L_e + R_e acting on it.
pub fn peirce_from_operator(t: &Matrix, idempotent: Vector) -> Result<PeirceDecomposition, PeirceError> {
    let f = t.field;
    let n = t.rows;
    let id = Matrix::identity(f, n);
    let shifted = |i: i64| t.sub(&Matrix::scalar(f, n, &f.int(i)));
    let mut comps = BTreeMap::new();
    for i in 0..3u8 {
        comps.insert(PeirceKey::Single(i), nullspace(&shifted(i as i64)));
    }
    let projections = projections_from(f, n, &comps)?;
    // P0 = (T−1)(T−2)/2, P1 = −T(T−2), P2 = T(T−1)/2
    let poly = [
        shifted(1).mul(&shifted(2)).scale(&f.half()),
        t.mul(&shifted(2)).neg(),
        t.mul(&shifted(1)).scale(&f.half()),
    ];
    for (i, p) in poly.iter().enumerate() {
        if *p != projections[&PeirceKey::Single(i as u8)] {
            return Err(PeirceError::ProjectionMismatch(i as u8));
        }
    }
    debug_assert_eq!(poly[0].add(&poly[1]).add(&poly[2]), id);
    Ok(PeirceDecomposition { idempotents: vec![idempotent], components: comps, projections })
}

fn t_op(a: &SuperAlgebra, e: &[Scalar]) -> Matrix {
    a.operator(e, OperatorKind::L).add(&a.operator(e, OperatorKind::R))
}

/// U_i = ker(L_e + R_e − i) for i = 0, 1, 2, cross-checked against the projection polynomials.
pub fn peirce_decompose(a: &SuperAlgebra, e: &[Scalar]) -> Result<PeirceDecomposition, PeirceError> {
    if !a.is_idempotent(e) {
        return Err(PeirceError::NotIdempotent);
    }
    peirce_from_operator(&t_op(a, e), e.to_vec())
}

/// Decomposition U = ⊕ U_ij with respect to pairwise orthogonal even idempotents.
pub fn peirce_multi(a: &SuperAlgebra, es: &[Vector]) -> Result<PeirceDecomposition, PeirceError> {
    let n = es.len();
    for (i, e) in es.iter().enumerate() {
        if !a.is_idempotent(e) {
            return Err(PeirceError::NotIdempotent);
        }
        for (j, g) in es.iter().enumerate().skip(i + 1) {
            if !is_zero_vec(&a.mul(e, g)) || !is_zero_vec(&a.mul(g, e)) {
                return Err(PeirceError::NotOrthogonal(i + 1, j + 1));
            }
        }
    }
    let f = a.field;
    let id = Matrix::identity(f, a.dim);
    let ls: Vec<Matrix> = es.iter().map(|e| a.operator(e, OperatorKind::L)).collect();
    let rs: Vec<Matrix> = es.iter().map(|e| a.operator(e, OperatorKind::R)).collect();
    let ts: Vec<Matrix> = (0..n).map(|i| ls[i].add(&rs[i])).collect();
    let mut comps = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            let mut conds = Vec::new();
            if i == 0 && j == 0 {
                for k in 0..n {
                    conds.push(ls[k].clone());
                    conds.push(rs[k].clone());
                }
            } else if i == j {
                for k in 0..n {
                    let s = if k + 1 == i { &id } else { &Matrix::zeros(f, a.dim, a.dim) };
                    conds.push(ls[k].sub(s));
                    conds.push(rs[k].sub(s));
                }
            } else {
                for k in 0..n {
                    let on = k + 1 == i || k + 1 == j;
                    conds.push(if on { ts[k].sub(&id) } else { ts[k].clone() });
                }
            }
            comps.insert(PeirceKey::Pair(i, j), a.kernel_of(&conds));
        }
    }
    let projections = projections_from(f, a.dim, &comps)?;
    Ok(PeirceDecomposition { idempotents: es.to_vec(), components: comps, projections })
}

/// U_ij·U_kl ⊆ Σ of the components allowed by index matching (matrix-unit pattern).
pub fn verify_peirce_lattice(a: &SuperAlgebra, pd: &PeirceDecomposition) -> CheckReport {
    let keys: Vec<(usize, usize)> = pd
        .components
        .keys()
        .filter_map(|k| match k {
            PeirceKey::Pair(i, j) => Some((*i, *j)),
            PeirceKey::Single(_) => None,
        })
        .collect();
    let norm = |x: usize, y: usize| (x.min(y), x.max(y));
    let name = "Peirce lattice inclusions";
    for &(i, j) in &keys {
        for &(k, l) in &keys {
            let mut allowed = Vec::new();
            for (p, q) in [(i, j), (j, i)] {
                for (r, s) in [(k, l), (l, k)] {
                    if q == r {
                        allowed.push(norm(p, s));
                    }
                }
            }
            if (i, j) == (k, l) && i != j {
                allowed.extend([(i, i), (i, j), (j, j)]);
            }
            let mut target = Subspace::zero(a.field, a.dim);
            for key in allowed {
                target = target.sum(pd.pair(key.0, key.1)).unwrap();
            }
            if let Err(r) = inclusion(a, &format!("{name}: U{i}{j}·U{k}{l}"), pd.pair(i, j), pd.pair(k, l), &target, |x, y| a.mul(x, y)) {
                return r;
            }
        }
    }
    CheckReport::pass(name)
}

fn fail_vec(name: &str, labels: Vec<String>, residual: Vector) -> CheckReport {
    CheckReport::fail(name, Witness { indices: vec![], labels, residual })
}

/// Every f(x,y), x ∈ xs, y ∈ ys (basis vectors) lies in `target`.
fn inclusion(
    a: &SuperAlgebra,
    name: &str,
    xs: &Subspace,
    ys: &Subspace,
    target: &Subspace,
    f: impl Fn(&Vector, &Vector) -> Vector,
) -> Result<(), CheckReport> {
    for x in xs.vectors() {
        for y in ys.vectors() {
            let v = f(&x, &y);
            if !target.contains(&v) {
                return Err(fail_vec(name, vec![a.format_vec(&x), a.format_vec(&y)], v));
            }
        }
    }
    Ok(())
}

fn equal(a: &SuperAlgebra, name: &str, labels: &[&Vector], lhs: Vector, rhs: Vector) -> Result<(), CheckReport> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(fail_vec(name, labels.iter().map(|v| a.format_vec(v)).collect(), vsub(&lhs, &rhs)))
    }
}

/// Operator matrix must vanish; the witness is the first basis vector not annihilated.
fn zero_op(a: &SuperAlgebra, name: &str, context: &[&Vector], m: &Matrix) -> Result<(), CheckReport> {
    for i in 0..m.rows {
        if !is_zero_vec(m.row(i)) {
            let mut labels: Vec<String> = context.iter().map(|v| a.format_vec(v)).collect();
            labels.push(a.basis_names[i].clone());
            return Err(CheckReport::fail(name, Witness { indices: vec![i], labels, residual: m.row(i).to_vec() }));
        }
    }
    Ok(())
}

/// L_e restricted to U₁: eigenspaces for the eigenvalues found in the field, and a
/// diagnostic when they do not fill U₁.
#[derive(Clone, Debug)]
pub struct U1Spectrum {
    pub eigenspaces: Vec<(Scalar, Subspace)>,
    pub complete: bool,
    pub diagnostic: Option<String>,
}

pub fn u1_spectrum(a: &SuperAlgebra, e: &[Scalar]) -> Result<U1Spectrum, PeirceError> {
    let pd = peirce_decompose(a, e)?;
    let u1 = pd.u(1);
    let le = a.operator(e, OperatorKind::L);
    let restricted = u1.restrict(&le).expect("U1 is L_e-invariant");
    let r = roots(&charpoly(&restricted), a.field);
    let mut eigenspaces = Vec::new();
    let mut total = 0;
    for (lambda, _) in &r.roots {
        let s = eigenspace_in(a, u1, &le, lambda);
        total += s.dim();
        eigenspaces.push((lambda.clone(), s));
    }
    eigenspaces.sort_by(|x, y| x.0.to_string().cmp(&y.0.to_string()));
    let diagnostic = if !r.complete {
        Some("root search abandoned: coefficients or field too large".to_string())
    } else if r.rest.len() > 1 {
        let d = r.rest.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
        Some(format!("needs √: factor with coefficients [{d}] has no roots in the field"))
    } else if total < u1.dim() {
        Some("L_e is not semisimple on U1".to_string())
    } else {
        None
    };
    Ok(U1Spectrum { complete: diagnostic.is_none(), eigenspaces, diagnostic })
}

fn eigenspace_in(a: &SuperAlgebra, u1: &Subspace, le: &Matrix, lambda: &Scalar) -> Subspace {
    let k = nullspace(&le.sub(&Matrix::scalar(a.field, a.dim, lambda)));
    u1.intersect(&k).unwrap()
}

/// U₁^[λ] = {x ∈ U₁ : ex = λx}.
pub fn eigenspace_u1(a: &SuperAlgebra, e: &[Scalar], lambda: &Scalar) -> Result<Subspace, PeirceError> {
    let pd = peirce_decompose(a, e)?;
    Ok(eigenspace_in(a, pd.u(1), &a.operator(e, OperatorKind::L), lambda))
}

/// A λ with λ(1 − λ) = φ, when the discriminant 1 − 4φ is a square.
pub fn lambda_for_phi(field: Field, phi: &Scalar) -> Result<Scalar, PeirceError> {
    let disc = &field.one() - &(&field.int(4) * phi);
    let r = disc.sqrt().ok_or_else(|| PeirceError::RequiresExtension(format!("√({disc})")))?;
    Ok(&(&field.one() + &r) * &field.half())
}

/// S₁^[φ](e) = U₁^[λ] + U₁^[1−λ].
pub fn s_phi(a: &SuperAlgebra, e: &[Scalar], phi: &Scalar) -> Result<Subspace, PeirceError> {
    let lambda = lambda_for_phi(a.field, phi)?;
    let mu = &a.field.one() - &lambda;
    let x = eigenspace_u1(a, e, &lambda)?;
    let y = eigenspace_u1(a, e, &mu)?;
    Ok(x.sum(&y).unwrap())
}

fn parity(a: &SuperAlgebra, v: &[Scalar]) -> u8 {
    a.parity_of(v).unwrap_or(0)
}

fn sign(a: &SuperAlgebra, bits: u8, v: Vector) -> Vector {
    if bits & 1 == 1 {
        vscale(&-a.field.one(), &v)
    } else {
        v
    }
}

/// The Peirce relations and their operator consequences for one idempotent.
pub fn verify_peirce_relations(a: &SuperAlgebra, e: &[Scalar]) -> CheckReport {
    let pd = match peirce_decompose(a, e) {
        Ok(pd) => pd,
        Err(err) => return fail_vec("Peirce decomposition", vec![err.to_string()], vec![]),
    };
    match peirce_relations(a, e, &pd) {
        Ok(()) => CheckReport::pass("Peirce relations"),
        Err(r) => r,
    }
}

fn peirce_relations(a: &SuperAlgebra, e: &[Scalar], pd: &PeirceDecomposition) -> Result<(), CheckReport> {
    let f = a.field;
    let n = a.dim;
    let id = Matrix::identity(f, n);
    let (u0, u1, u2) = (pd.u(0), pd.u(1), pd.u(2));
    let zero = Subspace::zero(f, n);
    let u02 = u0.sum(u2).unwrap();
    let mul = |x: &Vector, y: &Vector| a.mul(x, y);
    let e = e.to_vec();

    // Products between Peirce spaces.
    inclusion(a, "U0·U0 ⊆ U0", u0, u0, u0, mul)?;
    inclusion(a, "U2·U2 ⊆ U2", u2, u2, u2, mul)?;
    for (name, ui) in [("U0", u0), ("U2", u2)] {
        inclusion(a, &format!("{name}·U1 ⊆ U1"), ui, u1, u1, mul)?;
        inclusion(a, &format!("U1·{name} ⊆ U1"), u1, ui, u1, mul)?;
    }
    inclusion(a, "U0·U2 = 0", u0, u2, &zero, mul)?;
    inclusion(a, "U2·U0 = 0", u2, u0, &zero, mul)?;
    for (i, ui) in [(0i64, u0), (2, u2)] {
        let half_i = &f.int(i) * &f.half();
        for x in ui.vectors() {
            let want = vscale(&half_i, &x);
            equal(a, "xe = ix/2 on U0 + U2", &[&x], a.mul(&x, &e), want.clone())?;
            equal(a, "ex = ix/2 on U0 + U2", &[&x], a.mul(&e, &x), want)?;
        }
    }
    inclusion(a, "U1∘U1 ⊆ U0 + U2", u1, u1, &u02, |x, y| a.circle(x, y))?;

    // Multiplication operators by U0 + U2 commute with those of e and with the projections.
    let le = a.operator(&e, OperatorKind::L);
    let re = a.operator(&e, OperatorKind::R);
    let ps = [pd.p(0), pd.p(1), pd.p(2)];
    for x in u0.vectors().into_iter().chain(u2.vectors()) {
        let ex = [a.operator(&x, OperatorKind::L), a.operator(&x, OperatorKind::R)];
        for m in &ex {
            for g in [&le, &re] {
                zero_op(a, "[E_x, F_e] = 0 for x ∈ U0 + U2", &[&x], &m.commutator(g, false))?;
            }
            for p in ps {
                zero_op(a, "[E_x, P_i] = 0 for x ∈ U0 + U2", &[&x], &m.commutator(p, false))?;
            }
        }
    }

    // Recovering products from the bullet product and e.
    let bullet = |x: &Vector, y: &Vector| a.bullet(x, y);
    let (p0, p1, p2) = (ps[0], ps[1], ps[2]);
    for z in u1.vectors() {
        let ez = a.mul(&e, &z);
        let ze = a.mul(&z, &e);
        for y in u0.vectors() {
            let zy = a.mul(&z, &y);
            equal(a, "e(z•y) = zy, z ∈ U1, y ∈ U0", &[&z, &y], a.mul(&e, &bullet(&z, &y)), zy.clone())?;
            equal(a, "ez•y = zy, z ∈ U1, y ∈ U0", &[&z, &y], bullet(&ez, &y), zy)?;
            let yz = a.mul(&y, &z);
            equal(a, "(y•z)e = yz, z ∈ U1, y ∈ U0", &[&y, &z], a.mul(&bullet(&y, &z), &e), yz.clone())?;
            equal(a, "y•ze = yz, z ∈ U1, y ∈ U0", &[&y, &z], bullet(&y, &ze), yz)?;
        }
        for u in u2.vectors() {
            let uz = a.mul(&u, &z);
            equal(a, "e(u•z) = uz, z ∈ U1, u ∈ U2", &[&u, &z], a.mul(&e, &bullet(&u, &z)), uz.clone())?;
            equal(a, "u•ez = uz, z ∈ U1, u ∈ U2", &[&u, &z], bullet(&u, &ez), uz)?;
            let zu = a.mul(&z, &u);
            equal(a, "(z•u)e = zu, z ∈ U1, u ∈ U2", &[&z, &u], a.mul(&bullet(&z, &u), &e), zu.clone())?;
            equal(a, "ze•u = zu, z ∈ U1, u ∈ U2", &[&z, &u], bullet(&ze, &u), zu)?;
        }
        for w in u1.vectors() {
            let we = a.mul(&w, &e);
            let zw = p2.apply(&a.mul(&z, &w));
            equal(a, "P2(ez•w) = P2(zw)", &[&z, &w], p2.apply(&bullet(&ez, &w)), zw.clone())?;
            equal(a, "P2(z•we) = P2(zw)", &[&z, &w], p2.apply(&bullet(&z, &we)), zw)?;
            let wz = p0.apply(&a.mul(&w, &z));
            equal(a, "P0(w•ez) = P0(wz)", &[&w, &z], p0.apply(&bullet(&w, &ez)), wz.clone())?;
            equal(a, "P0(we•z) = P0(wz)", &[&w, &z], p0.apply(&bullet(&we, &z)), wz)?;
            let p1zw = p1.apply(&a.mul(&z, &w));
            for ui in u0.vectors().into_iter().chain(u2.vectors()) {
                let lhs = bullet(&p1zw, &ui);
                let mid = p1.apply(&a.mul(&z, &bullet(&w, &ui)));
                let rhs = sign(a, parity(a, &w) & parity(a, &ui), p1.apply(&a.mul(&bullet(&z, &ui), &w)));
                equal(a, "P1(zw)•u = P1(z(w•u)), u ∈ U0 + U2", &[&z, &w, &ui], lhs.clone(), mid)?;
                equal(a, "P1(zw)•u = ±P1((z•u)w), u ∈ U0 + U2", &[&z, &w, &ui], lhs, rhs)?;
            }
        }
    }
    for x in u1.vectors() {
        for y in u1.vectors() {
            for z in u1.vectors() {
                let l = a.circle(&x, &p1.apply(&a.mul(&y, &z)));
                let m = a.circle(&p1.apply(&a.mul(&x, &y)), &z);
                let (px, py, pz) = (parity(a, &x), parity(a, &y), parity(a, &z));
                let r = sign(a, px & (py ^ pz), a.circle(&y, &p1.apply(&a.mul(&z, &x))));
                equal(a, "x∘P1(yz) = P1(xy)∘z", &[&x, &y, &z], l.clone(), m)?;
                equal(a, "x∘P1(yz) = ±y∘P1(zx)", &[&x, &y, &z], l, r)?;
            }
        }
    }
    for x in u1.vectors() {
        for y in u1.vectors() {
            if !u02.contains(&a.mul(&x, &y)) {
                continue;
            }
            let ry_ly = a.operator(&y, OperatorKind::R).add(&a.operator(&y, OperatorKind::L));
            let tail = p1.mul(&ry_ly);
            for m in [a.operator(&x, OperatorKind::L), a.operator(&x, OperatorKind::R)] {
                zero_op(a, "P1 E_x P1 (R_y + L_y) = 0 when xy ∈ U0 + U2", &[&x, &y], &p1.mul(&m).mul(&tail))?;
            }
        }
    }

    // Operator identities on U1 for a, b in the same U_i (i = 0, 2).
    for ui in [u0, u2] {
        for x in ui.vectors() {
            for y in ui.vectors() {
                let s = parity(a, &x) & parity(a, &y) == 1;
                let (lx, rx) = (a.operator(&x, OperatorKind::L), a.operator(&x, OperatorKind::R));
                let (ly, ry) = (a.operator(&y, OperatorKind::L), a.operator(&y, OperatorKind::R));
                let xy = a.mul(&x, &y);
                let r_xy = a.operator(&xy, OperatorKind::R);
                let l_xy = a.operator(&xy, OperatorKind::L);
                let sg = |m: Matrix| if s { m.neg() } else { m };
                let checks = [
                    ("R_ab = R_aR_b ± L_bR_a on U1", r_xy.sub(&rx.mul(&ry)).sub(&sg(ly.mul(&rx)))),
                    ("R_ab = R_aR_b ± R_bL_a on U1", r_xy.sub(&rx.mul(&ry)).sub(&sg(ry.mul(&lx)))),
                    ("L_ab = ±L_bL_a + L_aR_b on U1", l_xy.sub(&sg(ly.mul(&lx))).sub(&lx.mul(&ry))),
                    ("L_ab = ±L_bL_a + R_aL_b on U1", l_xy.sub(&sg(ly.mul(&lx))).sub(&rx.mul(&ly))),
                ];
                for (name, m) in checks {
                    zero_op(a, name, &[&x, &y], &p1.mul(&m))?;
                }
            }
        }
    }

    // L_e-eigenspaces of U1.
    let spec = u1_spectrum(a, &e).map_err(|err| fail_vec("L_e spectrum on U1", vec![err.to_string()], vec![]))?;
    let one = f.one();
    for (lambda, sp) in &spec.eigenspaces {
        for (name, ui) in [("U0", u0), ("U2", u2)] {
            inclusion(a, &format!("{name}·U1[λ] ⊆ U1[λ]"), ui, sp, sp, mul)?;
            inclusion(a, &format!("U1[λ]·{name} ⊆ U1[λ]"), sp, ui, sp, mul)?;
        }
        let mu = &one - lambda;
        for x in sp.vectors() {
            let (lx, rx) = (a.operator(&x, OperatorKind::L), a.operator(&x, OperatorKind::R));
            let first = id.sub(&le).mul(&lx).add(&re.mul(&rx)).scale(&mu).sub(&id.sub(&re).mul(&rx).add(&le.mul(&lx)).scale(lambda));
            zero_op(a, "flexibility at (x, e), x ∈ U1[λ]", &[&x], &first)?;
            let second = lx.mul(&id.sub(&le)).add(&rx.mul(&re)).scale(lambda).sub(&lx.mul(&le).add(&rx.mul(&id.sub(&re))).scale(&mu));
            zero_op(a, "flexibility at (e, x), x ∈ U1[λ]", &[&x], &second)?;
        }
    }
    let find = |v: &Scalar| spec.eigenspaces.iter().find(|(l, _)| l == v).map(|(_, s)| s.clone()).unwrap_or_else(|| zero.clone());
    let (s0, s1) = (find(&f.zero()), find(&one));
    inclusion(a, "U1[0]·U0 = 0", &s0, u0, &zero, mul)?;
    inclusion(a, "U2·U1[0] = 0", u2, &s0, &zero, mul)?;
    inclusion(a, "U0·U1[1] = 0", u0, &s1, &zero, mul)?;
    inclusion(a, "U1[1]·U2 = 0", &s1, u2, &zero, mul)?;
    let u01 = u0.sum(u1).unwrap();
    let u12 = u1.sum(u2).unwrap();
    inclusion(a, "U1[0]·U1 ⊆ U0 + U1", &s0, u1, &u01, mul)?;
    inclusion(a, "U1·U1[0] ⊆ U1 + U2", u1, &s0, &u12, mul)?;
    inclusion(a, "U1[1]·U1 ⊆ U1 + U2", &s1, u1, &u12, mul)?;
    inclusion(a, "U1·U1[1] ⊆ U0 + U1", u1, &s1, &u01, mul)?;
    inclusion(a, "U1[0]·U1[0] ⊆ U1", &s0, &s0, u1, mul)?;
    inclusion(a, "U1[1]·U1[1] ⊆ U1", &s1, &s1, u1, mul)?;
    Ok(())
}

/// Sufficient condition for U₁² ⊆ U₀ + U₂: K ⊆ U₁ with K·U₁ ⊆ U₀ + U₂ and no nonzero
/// a ∈ U₁ with K∘a = 0. Checks the hypotheses, then the conclusion P₁(U₁·U₁) = 0.
pub fn verify_k_set(a: &SuperAlgebra, e: &[Scalar], k: &[Vector]) -> CheckReport {
    let pd = match peirce_decompose(a, e) {
        Ok(pd) => pd,
        Err(err) => return fail_vec("Peirce decomposition", vec![err.to_string()], vec![]),
    };
    let (u1, p1) = (pd.u(1), pd.p(1));
    let u02 = pd.u(0).sum(pd.u(2)).unwrap();
    for x in k {
        if !u1.contains(x) {
            return fail_vec("K ⊆ U1", vec![a.format_vec(x)], x.clone());
        }
    }
    let ks = a.span(k.to_vec());
    if let Err(r) = inclusion(a, "K·U1 ⊆ U0 + U2", &ks, u1, &u02, |x, y| a.mul(x, y)) {
        return r;
    }
    let ops: Vec<Matrix> = k.iter().map(|x| a.operator(x, OperatorKind::Rplus)).collect();
    let ann = u1.intersect(&a.kernel_of(&ops)).unwrap();
    if let Some(v) = ann.vectors().first() {
        return fail_vec("K∘a = 0 ⇒ a = 0 on U1", vec![a.format_vec(v)], v.clone());
    }
    let zero = Subspace::zero(a.field, a.dim);
    match inclusion(a, "P1(U1·U1) = 0", u1, u1, &zero, |x, y| p1.apply(&a.mul(x, y))) {
        Ok(()) => CheckReport::pass("U1·U1 ⊆ U0 + U2 from K"),
        Err(r) => r,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectionKind {
    Even,
    Odd,
}

/// Claimed connection of idempotents e_i, e_j (1-based) by u, v with indicator φ.
#[derive(Clone, Debug)]
pub struct ConnectionWitness {
    pub i: usize,
    pub j: usize,
    pub u: Vector,
    pub v: Vector,
    pub phi: Scalar,
    pub kind: ConnectionKind,
}

/// Checks u, v ∈ S_ij^[φ] and vu = uv = e_i + e_j (even) or vu = −uv = e_i − e_j (odd).
pub fn verify_connection(a: &SuperAlgebra, es: &[Vector], w: &ConnectionWitness) -> CheckReport {
    let name = "connection";
    let err = |msg: String| fail_vec(name, vec![msg], vec![]);
    if w.i == 0 || w.j == 0 || w.i > es.len() || w.j > es.len() || w.i == w.j {
        return err(format!("bad idempotent indices ({}, {})", w.i, w.j));
    }
    if let Err(e) = peirce_multi(a, es) {
        return err(e.to_string());
    }
    let want = match w.kind {
        ConnectionKind::Even => 0,
        ConnectionKind::Odd => 1,
    };
    for x in [&w.u, &w.v] {
        if a.parity_of(x) != Some(want) || is_zero_vec(x) {
            return fail_vec(name, vec![format!("{} is not homogeneous of the declared parity", a.format_vec(x))], x.clone());
        }
    }
    let (ei, ej) = (&es[w.i - 1], &es[w.j - 1]);
    let s = match (s_phi(a, ei, &w.phi), s_phi(a, ej, &w.phi)) {
        (Ok(x), Ok(y)) => x.intersect(&y).unwrap(),
        (Err(e), _) | (_, Err(e)) => return err(e.to_string()),
    };
    for x in [&w.u, &w.v] {
        if !s.contains(x) {
            return fail_vec(name, vec![format!("{} ∉ S[φ]", a.format_vec(x))], x.clone());
        }
    }
    let vu = a.mul(&w.v, &w.u);
    let uv = a.mul(&w.u, &w.v);
    let (target, uv_want) = match w.kind {
        ConnectionKind::Even => (vadd(ei, ej), vadd(ei, ej)),
        ConnectionKind::Odd => (vsub(ei, ej), vsub(ej, ei)),
    };
    if vu != target {
        return fail_vec(name, vec!["vu".into(), a.format_vec(&vu)], vsub(&vu, &target));
    }
    if uv != uv_want {
        return fail_vec(name, vec!["uv".into(), a.format_vec(&uv)], vsub(&uv, &uv_want));
    }
    CheckReport::pass(name)
}

/// The indicator read off the witness: L_{e_i} satisfies L² − L + φ = 0 on S^[φ], so
/// e_i u − e_i(e_i u) = φu.
pub fn indicator_of(a: &SuperAlgebra, es: &[Vector], w: &ConnectionWitness) -> Result<Scalar, PeirceError> {
    let r = verify_connection(a, es, w);
    if !r.passed {
        return Err(PeirceError::Witness(r.to_string()));
    }
    let ei = &es[w.i - 1];
    let x = a.mul(ei, &w.u);
    let y = a.mul(ei, &x);
    let d = vsub(&x, &y);
    let k = w.u.iter().position(|s| !s.is_zero()).unwrap();
    let phi = d[k].div(&w.u[k]).unwrap();
    if vscale(&phi, &w.u) != d {
        return Err(PeirceError::Witness("u is not an L-eigenvector of the quadratic".into()));
    }
    Ok(phi)
}

/// All witnesses share one indicator φ and every U_ij (i ≠ j, both nonzero) equals S_ij^[φ].
pub fn indicator_batch(a: &SuperAlgebra, es: &[Vector], ws: &[ConnectionWitness]) -> Result<Scalar, PeirceError> {
    let mut phi: Option<Scalar> = None;
    for w in ws {
        let p = indicator_of(a, es, w)?;
        match &phi {
            None => phi = Some(p),
            Some(q) if *q != p => return Err(PeirceError::Witness(format!("indicators differ: {q} vs {p}"))),
            _ => {}
        }
    }
    let phi = phi.ok_or_else(|| PeirceError::Witness("no witnesses".into()))?;
    let pd = peirce_multi(a, es)?;
    for i in 1..=es.len() {
        for j in i + 1..=es.len() {
            let s = s_phi(a, &es[i - 1], &phi)?.intersect(&s_phi(a, &es[j - 1], &phi)?).unwrap();
            if !s.contains_subspace(pd.pair(i, j)).unwrap() {
                return Err(PeirceError::Witness(format!("U{i}{j} is not S[{phi}]")));
            }
        }
    }
    Ok(phi)
}
