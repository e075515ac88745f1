//! Checkers for the defining identities. All identities are multilinear, so
//! evaluating them on homogeneous basis tuples is complete.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::SuperAlgebra;
use crate::constructions::symmetrize;
use crate::linalg::{axpy, is_zero_vec, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the failing tuple; the last entry is the argument the operators act on.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub identity_name: String,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(name: &str) -> CheckReport {
        CheckReport { passed: true, identity_name: name.into(), witness: None }
    }

    pub fn fail(name: &str, witness: Witness) -> CheckReport {
        CheckReport { passed: false, identity_name: name.into(), witness: Some(witness) }
    }

    /// First failure among reports (all-pass gives a pass named `name`).
    pub fn all(name: &str, reports: impl IntoIterator<Item = CheckReport>) -> CheckReport {
        for r in reports {
            if !r.passed {
                return r;
            }
        }
        CheckReport::pass(name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "PASS {}", self.identity_name);
        }
        write!(f, "FAIL {}", self.identity_name)?;
        if let Some(w) = &self.witness {
            let res: Vec<String> = w.residual.iter().map(|s| s.to_string()).collect();
            write!(f, " at ({}) residual [{}]", w.labels.join(", "), res.join(", "))?;
        }
        Ok(())
    }
}

/// Restricts tuples for split null extensions: basis indices ≥ `ideal_start` span a
/// square-zero ideal, and every term of the checked identities with two or more
/// letters from it vanishes, so such tuples are skipped.
#[derive(Clone, Copy, Debug, Default)]
pub struct Scope {
    pub ideal_start: Option<usize>,
}

impl Scope {
    pub const ALL: Scope = Scope { ideal_start: None };

    fn skip(&self, idx: &[usize]) -> bool {
        match self.ideal_start {
            None => false,
            Some(s) => idx.iter().filter(|&&i| i >= s).count() >= 2,
        }
    }
}

/// A multiplication operator by an element: y ↦ y·x or y ↦ (−1)^{xy} x·y.
#[derive(Clone, Debug)]
pub enum Op {
    R(Vector),
    L(Vector),
}

/// Signed composite word; operators apply left to right.
#[derive(Clone, Debug)]
pub struct Term {
    pub negate: bool,
    pub ops: Vec<Op>,
}

fn t(negate: bool, ops: Vec<Op>) -> Term {
    Term { negate, ops }
}

/// Supercommutator [X,Y] = XY − (−1)^{|X||Y|} YX of operators with parities.
pub fn supercommutator(x: (Op, u8), y: (Op, u8)) -> Vec<Term> {
    let odd = x.1 & y.1 == 1;
    vec![t(false, vec![x.0.clone(), y.0.clone()]), t(!odd, vec![y.0, x.0])]
}

fn negate_terms(ts: Vec<Term>, neg: bool) -> Vec<Term> {
    ts.into_iter().map(|mut t| {
        t.negate ^= neg;
        t
    }).collect()
}

pub fn apply_word(a: &SuperAlgebra, y: &[crate::field::Scalar], ops: &[Op]) -> Vector {
    let mut v = y.to_vec();
    for op in ops {
        if is_zero_vec(&v) {
            break;
        }
        v = match op {
            Op::R(x) => a.mul(&v, x),
            Op::L(x) => a.left(&v, x),
        };
    }
    v
}

pub fn eval_terms(a: &SuperAlgebra, y: &[crate::field::Scalar], terms: &[Term]) -> Vector {
    let mut r = a.zero();
    let one = a.field.one();
    let m1 = -&one;
    for term in terms {
        let v = apply_word(a, y, &term.ops);
        axpy(&mut r, if term.negate { &m1 } else { &one }, &v);
    }
    r
}

fn sgn(bits: u8) -> bool {
    bits & 1 == 1
}

/// Searches tuples of basis indices in lexicographic order (parallel over the first
/// index, deterministic first witness). `eval` returns a witness for a failing tuple.
pub fn search_tuples<F>(a: &SuperAlgebra, arity: usize, scope: Scope, eval: F) -> Option<Witness>
where
    F: Fn(&[usize]) -> Option<(Vec<usize>, Vector)> + Sync,
{
    let n = a.dim;
    if n == 0 {
        return None;
    }
    let rest = arity - 1;
    let total_rest = n.pow(rest as u32);
    (0..n).into_par_iter().find_map_first(|first| {
        let mut idx = vec![0usize; arity];
        idx[0] = first;
        for code in 0..total_rest {
            let mut c = code;
            for k in (1..arity).rev() {
                idx[k] = c % n;
                c /= n;
            }
            if scope.skip(&idx) {
                continue;
            }
            if let Some((full, res)) = eval(&idx) {
                let labels = full.iter().map(|&i| a.basis_names[i].clone()).collect();
                return Some(Witness { indices: full, labels, residual: res });
            }
        }
        None
    })
}

/// Operator identity: the terms built from a tuple must annihilate every basis vector y.
pub fn check_operator_identity<F>(a: &SuperAlgebra, name: &str, arity: usize, scope: Scope, build: F) -> CheckReport
where
    F: Fn(&[usize]) -> Vec<Term> + Sync,
{
    let w = search_tuples(a, arity, scope, |idx| {
        let terms = build(idx);
        let mut full = idx.to_vec();
        full.push(0);
        for y in 0..a.dim {
            *full.last_mut().unwrap() = y;
            if scope.skip(&full) {
                continue;
            }
            let r = eval_terms(a, &a.basis(y), &terms);
            if !is_zero_vec(&r) {
                return Some((full, r));
            }
        }
        None
    });
    match w {
        None => CheckReport::pass(name),
        Some(w) => CheckReport::fail(name, w),
    }
}

pub fn check_supercommutative_scoped(a: &SuperAlgebra, scope: Scope) -> CheckReport {
    let name = "supercommutativity";
    match search_tuples(a, 2, scope, |idx| {
        let r = a.bracket(&a.basis(idx[0]), &a.basis(idx[1]));
        (!is_zero_vec(&r)).then(|| (idx.to_vec(), r))
    }) {
        None => CheckReport::pass(name),
        Some(w) => CheckReport::fail(name, w),
    }
}

pub fn check_supercommutative(a: &SuperAlgebra) -> CheckReport {
    check_supercommutative_scoped(a, Scope::ALL)
}

/// [R_a, L_b] = [L_a, R_b]
pub fn flexible_terms(a: &SuperAlgebra, i: usize, j: usize) -> Vec<Term> {
    let (x, y) = (a.basis(i), a.basis(j));
    let (pa, pb) = (a.parity[i], a.parity[j]);
    let mut ts = supercommutator((Op::R(x.clone()), pa), (Op::L(y.clone()), pb));
    ts.extend(negate_terms(supercommutator((Op::L(x), pa), (Op::R(y), pb)), true));
    ts
}

pub fn check_flexible_scoped(a: &SuperAlgebra, scope: Scope) -> CheckReport {
    check_operator_identity(a, "flexibility", 2, scope, |idx| flexible_terms(a, idx[0], idx[1]))
}

pub fn check_flexible(a: &SuperAlgebra) -> CheckReport {
    check_flexible_scoped(a, Scope::ALL)
}

/// (−1)^{ab} L_{ab} − L_b L_a = R_{ba} − R_b R_a
pub fn check_flex1(a: &SuperAlgebra) -> CheckReport {
    check_operator_identity(a, "flexibility (operator form)", 2, Scope::ALL, |idx| {
        let (x, y) = (a.basis(idx[0]), a.basis(idx[1]));
        let ab = a.mul(&x, &y);
        let ba = a.mul(&y, &x);
        let s = sgn(a.parity[idx[0]] & a.parity[idx[1]]);
        vec![
            t(s, vec![Op::L(ab)]),
            t(true, vec![Op::L(y.clone()), Op::L(x.clone())]),
            t(true, vec![Op::R(ba)]),
            t(false, vec![Op::R(y), Op::R(x)]),
        ]
    })
}

/// Element form (x,y,z) = −(−1)^{x,y,z} (z,y,x); see the decisions notes on the sign.
pub fn check_flex2(a: &SuperAlgebra) -> CheckReport {
    let name = "flexibility (associator form)";
    match search_tuples(a, 3, Scope::ALL, |idx| {
        let (x, y, z) = (a.basis(idx[0]), a.basis(idx[1]), a.basis(idx[2]));
        let (p, q, r) = (a.parity[idx[0]], a.parity[idx[1]], a.parity[idx[2]]);
        let s = sgn(p & q ^ p & r ^ q & r);
        let lhs = a.associator(&x, &y, &z);
        let rhs = a.associator(&z, &y, &x);
        let mut res = lhs;
        axpy(&mut res, &if s { -a.field.one() } else { a.field.one() }, &rhs);
        (!is_zero_vec(&res)).then(|| (idx.to_vec(), res))
    }) {
        None => CheckReport::pass(name),
        Some(w) => CheckReport::fail(name, w),
    }
}

/// R_aR_bR_c + (−1)^{a,b,c}R_cR_bR_a + (−1)^{bc}R_{(ac)b}
///   − R_aR_{bc} − (−1)^{a,b,c}R_cR_{ba} − (−1)^{ab}R_bR_{ac}
pub fn jordan_terms(a: &SuperAlgebra, i: usize, j: usize, k: usize) -> Vec<Term> {
    let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
    let (p, q, r) = (a.parity[i], a.parity[j], a.parity[k]);
    let s = sgn(p & q ^ p & r ^ q & r);
    let acb = a.mul(&a.mul(&x, &z), &y);
    vec![
        t(false, vec![Op::R(x.clone()), Op::R(y.clone()), Op::R(z.clone())]),
        t(s, vec![Op::R(z.clone()), Op::R(y.clone()), Op::R(x.clone())]),
        t(sgn(q & r), vec![Op::R(acb)]),
        t(true, vec![Op::R(x.clone()), Op::R(a.mul(&y, &z))]),
        t(!s, vec![Op::R(z.clone()), Op::R(a.mul(&y, &x))]),
        t(!sgn(p & q), vec![Op::R(y), Op::R(a.mul(&x, &z))]),
    ]
}

pub fn check_jordan_scoped(a: &SuperAlgebra, scope: Scope) -> CheckReport {
    let sc = check_supercommutative_scoped(a, scope);
    if !sc.passed {
        return sc;
    }
    check_operator_identity(a, "Jordan identity", 3, scope, |idx| jordan_terms(a, idx[0], idx[1], idx[2]))
}

pub fn check_jordan(a: &SuperAlgebra) -> CheckReport {
    check_jordan_scoped(a, Scope::ALL)
}

/// [R_{a∘b},L_c] + (−1)^{a(b+c)}[R_{b∘c},L_a] + (−1)^{c(a+b)}[R_{c∘a},L_b]
pub fn ncj_terms(a: &SuperAlgebra, i: usize, j: usize, k: usize) -> Vec<Term> {
    let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
    let (p, q, r) = (a.parity[i], a.parity[j], a.parity[k]);
    let mut ts = supercommutator((Op::R(a.circle(&x, &y)), p ^ q), (Op::L(z.clone()), r));
    ts.extend(negate_terms(
        supercommutator((Op::R(a.circle(&y, &z)), q ^ r), (Op::L(x.clone()), p)),
        sgn(p & (q ^ r)),
    ));
    ts.extend(negate_terms(supercommutator((Op::R(a.circle(&z, &x)), r ^ p), (Op::L(y), q)), sgn(r & (p ^ q))));
    ts
}

pub fn check_ncj_identity_scoped(a: &SuperAlgebra, scope: Scope) -> CheckReport {
    check_operator_identity(a, "noncommutative Jordan identity", 3, scope, |idx| ncj_terms(a, idx[0], idx[1], idx[2]))
}

/// Both routes: flexibility + the noncommutative Jordan identity, and flexibility + Jordan symmetrization.
pub fn check_noncommutative_jordan_scoped(a: &SuperAlgebra, scope: Scope) -> CheckReport {
    let flex = check_flexible_scoped(a, scope);
    if !flex.passed {
        return flex;
    }
    let direct = check_ncj_identity_scoped(a, scope);
    let via_sym = check_jordan_scoped(&symmetrize(a), scope);
    if direct.passed != via_sym.passed {
        let failing = if direct.passed { via_sym } else { direct };
        let mut w = failing.witness;
        if let Some(w) = &mut w {
            w.labels.insert(0, "route disagreement".into());
        }
        return CheckReport { passed: false, identity_name: "route disagreement (sign convention)".into(), witness: w };
    }
    if !direct.passed {
        return direct;
    }
    CheckReport::pass("noncommutative Jordan")
}

pub fn check_noncommutative_jordan(a: &SuperAlgebra) -> CheckReport {
    check_noncommutative_jordan_scoped(a, Scope::ALL)
}

/// {a·b, c} = (−1)^{bc}{a,c}·b + a·{b,c}, after checking that br is superanticommutative.
pub fn check_generic_poisson(j: &SuperAlgebra, br: &SuperAlgebra) -> CheckReport {
    assert_eq!(j.dim, br.dim, "bracket on a different space");
    let anti = search_tuples(br, 2, Scope::ALL, |idx| {
        let (x, y) = (br.basis(idx[0]), br.basis(idx[1]));
        let res = br.bullet(&x, &y);
        (!is_zero_vec(&res)).then(|| (idx.to_vec(), res))
    });
    if let Some(w) = anti {
        return CheckReport::fail("superanticommutativity of bracket", w);
    }
    let name = "generic Poisson bracket";
    match search_tuples(j, 3, Scope::ALL, |idx| {
        let (x, y, z) = (j.basis(idx[0]), j.basis(idx[1]), j.basis(idx[2]));
        let s = sgn(j.parity[idx[1]] & j.parity[idx[2]]);
        let lhs = br.mul(&j.mul(&x, &y), &z);
        let t1 = j.mul(&br.mul(&x, &z), &y);
        let t2 = j.mul(&x, &br.mul(&y, &z));
        let mut res = lhs;
        axpy(&mut res, &if s { j.field.one() } else { -j.field.one() }, &t1);
        axpy(&mut res, &-j.field.one(), &t2);
        (!is_zero_vec(&res)).then(|| (idx.to_vec(), res))
    }) {
        None => CheckReport::pass(name),
        Some(w) => CheckReport::fail(name, w),
    }
}

/// The two-product view: (circle algebra, bracket algebra) on the same space.
pub fn two_products(a: &SuperAlgebra) -> (SuperAlgebra, SuperAlgebra) {
    let mut c = crate::algebra::TableBuilder::new(a.field, a.dim);
    let mut b = crate::algebra::TableBuilder::new(a.field, a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            c.add_vec(i, j, &a.circle(&a.basis(i), &a.basis(j)));
            b.add_vec(i, j, &a.bracket(&a.basis(i), &a.basis(j)));
        }
    }
    let names = a.basis_names.clone();
    (
        c.build(&format!("{}^(+)", a.name), a.parity.clone(), names.clone()).unwrap(),
        b.build(&format!("[{}]", a.name), a.parity.clone(), names).unwrap(),
    )
}

/// ab = (a•b + [a,b])/2 = a∘b + [a,b]/2.
pub fn from_two_products(circle: &SuperAlgebra, br: &SuperAlgebra, name: &str) -> SuperAlgebra {
    let mut tb = crate::algebra::TableBuilder::new(circle.field, circle.dim);
    let h = circle.field.half();
    for i in 0..circle.dim {
        for j in 0..circle.dim {
            let mut v = circle.mul(&circle.basis(i), &circle.basis(j));
            axpy(&mut v, &h, &br.mul(&br.basis(i), &br.basis(j)));
            tb.add_vec(i, j, &v);
        }
    }
    tb.build(name, circle.parity.clone(), circle.basis_names.clone()).unwrap()
}
