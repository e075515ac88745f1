//! Data-driven verification battery. Entries live in a checked-in JSON manifest; each
//! names a target, an operation and the expected outcome ("pass", or "fail" for a
//! confirmed negative). Reports are ordered by id and carry no timings, so two runs
//! produce identical JSON.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::SuperAlgebra;
use crate::catalog::{by_name, module_by_name};
use crate::constructions::{graded_tensor, mutate, mutation_compose, symmetrize, unit_tensor_embedding};
use crate::field::{Field, Scalar};
use crate::identities::{check_flexible, check_generic_poisson, check_jordan, check_jordan_scoped, check_noncommutative_jordan, two_products, CheckReport, Scope};
use crate::linalg::{Matrix, Subspace};
use crate::module::{direct_sum, opposite_module, regular, SuperBimodule};
use crate::peirce::{eigenspace_u1, indicator_of, peirce_multi, verify_peirce_lattice, verify_peirce_relations, ConnectionKind, ConnectionWitness};
use crate::representations::{
    check_alternative_operators, check_both_routes, check_ncj_bimodule, decompose, dt1_relations, is_abs_irreducible,
    modules_isomorphic, rminus_formulas, sl2_relations, Irreducibility,
};
use crate::structure::{
    all_inner, derivation_algebra, derivations, is_simple, kronecker_factor, search_isomorphism_small, verify_homomorphism,
    Simplicity,
};

pub const MANIFEST: &str = include_str!("../suite/manifest.json");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    /// What the entry demonstrates, in words.
    pub topic: String,
    #[serde(default)]
    pub tags: Vec<String>,
    /// Pins the field; otherwise the run's field is used.
    #[serde(default)]
    pub field: Option<String>,
    pub op: String,
    #[serde(default)]
    pub target: Option<String>,
    #[serde(default)]
    pub module: Option<String>,
    #[serde(default)]
    pub other: Option<String>,
    #[serde(default)]
    pub args: Vec<String>,
    /// Expected value for value-producing operations.
    #[serde(default)]
    pub value: Option<String>,
    #[serde(default = "default_expect")]
    pub expect: Expect,
}

fn default_expect() -> Expect {
    Expect::Pass
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    /// The check failed, as the manifest says it must.
    #[serde(rename = "XFAIL")]
    ExpectedFail,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "ERROR")]
    Error,
}

impl Verdict {
    pub fn ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ExpectedFail)
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::ExpectedFail => "XFAIL",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EntryResult {
    pub id: String,
    pub topic: String,
    pub field: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SuiteReport {
    pub filter: Option<String>,
    pub field: String,
    pub results: Vec<EntryResult>,
    pub passed: usize,
    pub expected_failures: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            s.push_str(&format!("{:<5} {}  [{}] {}\n", r.verdict.label(), r.id, r.field, r.detail));
            if let Some(w) = &r.witness {
                if !r.verdict.ok() || r.verdict == Verdict::ExpectedFail {
                    s.push_str(&format!("      witness: {w}\n"));
                }
            }
        }
        s.push_str(&format!(
            "{} entries: {} passed, {} expected failures, {} failed\n",
            self.results.len(),
            self.passed,
            self.expected_failures,
            self.failed
        ));
        s
    }
}

pub fn manifest() -> Result<Vec<Entry>, String> {
    parse_manifest(MANIFEST)
}

pub fn parse_manifest(s: &str) -> Result<Vec<Entry>, String> {
    let mut v: Vec<Entry> = serde_json::from_str(s).map_err(|e| format!("manifest line {}: {e}", e.line()))?;
    v.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = v.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(format!("duplicate id {}", w[0].id));
    }
    Ok(v)
}

/// Case-insensitive substring match on id, topic or a tag.
pub fn matches(e: &Entry, filter: &str) -> bool {
    let f = filter.to_lowercase();
    e.id.to_lowercase().contains(&f) || e.topic.to_lowercase().contains(&f) || e.tags.iter().any(|t| t.to_lowercase().contains(&f))
}

pub fn run_suite(entries: &[Entry], filter: Option<&str>, field: Field) -> SuiteReport {
    let selected: Vec<&Entry> = entries.iter().filter(|e| filter.is_none_or(|f| matches(e, f))).collect();
    let mut results: Vec<EntryResult> = selected.par_iter().map(|e| run_entry(e, field)).collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
    SuiteReport {
        filter: filter.map(str::to_string),
        field: field.to_string(),
        passed: count(Verdict::Pass),
        expected_failures: count(Verdict::ExpectedFail),
        failed: count(Verdict::Fail) + count(Verdict::Error),
        results,
    }
}

/// Raw result of an operation before comparison with the expectation.
struct Outcome {
    holds: bool,
    detail: String,
    witness: Option<String>,
}

impl Outcome {
    fn of(r: &CheckReport) -> Outcome {
        Outcome { holds: r.passed, detail: r.identity_name.clone(), witness: r.witness.as_ref().map(|_| r.to_string()) }
    }

    fn flag(holds: bool, detail: impl Into<String>) -> Outcome {
        Outcome { holds, detail: detail.into(), witness: None }
    }
}

pub fn run_entry(e: &Entry, run_field: Field) -> EntryResult {
    let field = match e.field.as_deref().map(Field::parse) {
        None => Ok(run_field),
        Some(r) => r.map_err(|x| x.to_string()),
    };
    let (verdict, detail, witness, fname) = match field {
        Err(msg) => (Verdict::Error, msg, None, e.field.clone().unwrap_or_default()),
        Ok(f) => {
            let fname = f.to_string();
            match run_op(e, f) {
                Err(msg) => (Verdict::Error, msg, None, fname),
                Ok(o) => {
                    let v = match (o.holds, e.expect) {
                        (true, Expect::Pass) => Verdict::Pass,
                        (false, Expect::Fail) => Verdict::ExpectedFail,
                        _ => Verdict::Fail,
                    };
                    (v, o.detail, o.witness, fname)
                }
            }
        }
    };
    EntryResult { id: e.id.clone(), topic: e.topic.clone(), field: fname, verdict, detail, witness }
}

fn need<'a>(x: &'a Option<String>, what: &str) -> Result<&'a str, String> {
    x.as_deref().ok_or_else(|| format!("missing {what}"))
}

fn scalar(f: Field, s: &str) -> Result<Scalar, String> {
    f.parse_scalar(s).map_err(|e| e.to_string())
}

fn arg<'a>(e: &'a Entry, i: usize) -> Result<&'a str, String> {
    e.args.get(i).map(String::as_str).ok_or_else(|| format!("missing argument {}", i + 1))
}

fn value_check(got: String, want: &Option<String>) -> Result<Outcome, String> {
    let want = need(want, "expected value")?;
    Ok(Outcome::flag(got == want, format!("got {got}, expected {want}")))
}

fn run_op(e: &Entry, f: Field) -> Result<Outcome, String> {
    let alg = || -> Result<SuperAlgebra, String> { by_name(need(&e.target, "target")?, f).map_err(|x| x.to_string()) };
    let other = || -> Result<SuperAlgebra, String> { by_name(need(&e.other, "other")?, f).map_err(|x| x.to_string()) };
    let module = || -> Result<SuperBimodule, String> { module_by_name(need(&e.module, "module")?, f).map_err(|x| x.to_string()) };
    let vec = |a: &SuperAlgebra, s: &str| a.parse_vec(s).map_err(|x| x.to_string());
    match e.op.as_str() {
        "flexible" => Ok(Outcome::of(&check_flexible(&alg()?))),
        "jordan" => Ok(Outcome::of(&check_jordan(&alg()?))),
        "ncj" => Ok(Outcome::of(&check_noncommutative_jordan(&alg()?))),
        "poisson" => {
            let (c, b) = two_products(&alg()?);
            Ok(Outcome::of(&check_generic_poisson(&c, &b)))
        }
        "associative" => Ok(Outcome::flag(alg()?.is_associative(), "associative")),
        "supercommutative" => Ok(Outcome::flag(alg()?.is_supercommutative(), "supercommutative")),
        "product" => {
            let a = alg()?;
            let got = a.mul(&vec(&a, arg(e, 0)?)?, &vec(&a, arg(e, 1)?)?);
            let want = vec(&a, need(&e.value, "expected value")?)?;
            Ok(Outcome::flag(got == want, format!("({})({}) = {}", e.args[0], e.args[1], a.format_vec(&got))))
        }
        "equals" => {
            let (a, b) = (alg()?, other()?);
            Ok(Outcome::flag(a == b, format!("{} = {}", a.name, b.name)))
        }
        "symmetrize-equals" => {
            let (a, b) = (alg()?, other()?);
            Ok(Outcome::flag(symmetrize(&a) == b, format!("A(+) = {}", b.name)))
        }
        "mutation-law" => {
            let a = alg()?;
            let (l, m) = (scalar(f, arg(e, 0)?)?, scalar(f, arg(e, 1)?)?);
            let lhs = mutate(&mutate(&a, &l), &m);
            let rhs = mutate(&a, &mutation_compose(&l, &m));
            let half = mutate(&a, &f.half()) == symmetrize(&a);
            Ok(Outcome::flag(lhs == rhs && half, format!("(A^({l}))^({m}) = A^({}), A^(1/2) = A(+)", mutation_compose(&l, &m))))
        }
        "grading" => {
            let a = alg()?;
            value_check(format!("{}|{}", a.even_dim(), a.dim - a.even_dim()), &e.value)
        }
        "peirce-relations" => {
            let a = alg()?;
            let es = e.args.iter().map(|s| vec(&a, s)).collect::<Result<Vec<_>, _>>()?;
            let mut reps: Vec<CheckReport> = es.iter().map(|x| verify_peirce_relations(&a, x)).collect();
            match peirce_multi(&a, &es) {
                Ok(pd) => reps.push(verify_peirce_lattice(&a, &pd)),
                Err(x) => return Ok(Outcome::flag(false, x.to_string())),
            }
            Ok(Outcome::of(&CheckReport::all("Peirce relations", reps)))
        }
        "eigenspace" => {
            let a = alg()?;
            let (idem, lam) = (vec(&a, arg(e, 0)?)?, scalar(f, arg(e, 1)?)?);
            let want = a.span(e.args[2..].iter().map(|s| vec(&a, s)).collect::<Result<_, _>>()?);
            let got = eigenspace_u1(&a, &idem, &lam).map_err(|x| x.to_string())?;
            Ok(Outcome::flag(got == want, format!("U1 eigenspace at {lam} has dim {}", got.dim())))
        }
        "indicator" => {
            // args: idempotents..., then u and v; value: φ
            let a = alg()?;
            let n = e.args.len();
            if n < 4 {
                return Err("indicator needs idempotents, u and v".into());
            }
            let es = e.args[..n - 2].iter().map(|s| vec(&a, s)).collect::<Result<Vec<_>, _>>()?;
            let (u, v) = (vec(&a, &e.args[n - 2])?, vec(&a, &e.args[n - 1])?);
            let phi = scalar(f, need(&e.value, "expected value")?)?;
            let w = ConnectionWitness { i: 1, j: 2, u, v, phi, kind: ConnectionKind::Even };
            match indicator_of(&a, &es, &w) {
                Ok(p) => value_check(p.to_string(), &e.value),
                Err(x) => Ok(Outcome::flag(false, x.to_string())),
            }
        }
        "simple" => {
            let s = is_simple(&alg()?);
            Ok(Outcome::flag(s == Simplicity::Simple, s.to_string()))
        }
        "subalgebra-simple" => {
            let a = alg()?;
            let s = a.span(e.args.iter().map(|x| vec(&a, x)).collect::<Result<_, _>>()?);
            let sub = a.subalgebra(&s, "S").map_err(|x| x.to_string())?;
            let v = is_simple(&sub);
            Ok(Outcome::flag(v == Simplicity::Simple, format!("subalgebra of dim {}: {v}", sub.dim)))
        }
        "derivations" => value_check(derivations(&alg()?).dim().to_string(), &e.value),
        "all-inner" => Ok(Outcome::flag(all_inner(&alg()?).map_err(|x| x.to_string())?, "every derivation is inner")),
        "derivation-algebra-simple" => {
            let d = derivation_algebra(&alg()?).map_err(|x| x.to_string())?;
            let s = is_simple(&d);
            Ok(Outcome::flag(s == Simplicity::Simple, format!("Der of dim {}: {s}", d.dim)))
        }
        "derivation-table" => derivation_table(&alg()?, &scalar(f, arg(e, 0)?)?),
        "isomorphic" => {
            let (a, b) = (alg()?, other()?);
            match search_isomorphism_small(&a, &b) {
                Ok(Some(_)) => Ok(Outcome::flag(true, format!("{} ≅ {}", a.name, b.name))),
                Ok(None) => Ok(Outcome::flag(false, "no isomorphism found")),
                Err(x) => Ok(Outcome::flag(false, x.to_string())),
            }
        }
        "contains" => {
            // args span a subalgebra of the target isomorphic to `other`
            let (a, d) = (alg()?, other()?);
            let s = a.span(e.args.iter().map(|x| vec(&a, x)).collect::<Result<_, _>>()?);
            let sub = a.subalgebra(&s, "S").map_err(|x| x.to_string())?;
            let Some(iso) = search_isomorphism_small(&d, &sub).map_err(|x| x.to_string())? else {
                return Ok(Outcome::flag(false, "span is not isomorphic to the given algebra"));
            };
            let incl = Matrix::from_rows(f, a.dim, s.vectors());
            Ok(Outcome::of(&verify_homomorphism(&d, &a, &iso.mul(&incl))))
        }
        "kronecker" => {
            // target Z, other D
            let (z, d) = (alg()?, other()?);
            let u = graded_tensor(&z, &d).map_err(|x| x.to_string())?;
            let embed = unit_tensor_embedding(&z, &d).ok_or("Z has no unit")?;
            let k = match kronecker_factor(&u, &embed, &d) {
                Ok(k) => k,
                Err(x) => return Ok(Outcome::flag(false, x.to_string())),
            };
            let recovered = k.z.dim == z.dim && matches!(search_isomorphism_small(&k.z, &z), Ok(Some(_)));
            let assoc = !d.is_associative() || !z.is_associative() || u.is_associative();
            Ok(Outcome::flag(recovered && assoc, format!("Z of dim {} recovered from {}", k.z.dim, u.name)))
        }
        "module-ncj" => Ok(Outcome::of(&check_ncj_bimodule(&module()?))),
        "module-jordan" => {
            let m = module()?;
            let ext = crate::constructions::split_null_extension(&m.algebra, &m);
            Ok(Outcome::of(&check_jordan_scoped(&ext, Scope { ideal_start: Some(m.algebra.dim) })))
        }
        "module-routes" => {
            let (r, agree) = check_both_routes(&module()?);
            if !agree {
                return Err("the two bimodule routes disagree".into());
            }
            Ok(Outcome::of(&r))
        }
        "dt1-relations" => Ok(Outcome::of(&dt1_relations(&module()?, &scalar(f, arg(e, 0)?)?))),
        "sl2" => Ok(Outcome::of(&sl2_relations(&module()?, &scalar(f, arg(e, 0)?)?))),
        "rminus-formulas" => Ok(Outcome::of(&rminus_formulas(&module()?, &scalar(f, arg(e, 0)?)?))),
        "alternative-operators" => Ok(Outcome::of(&check_alternative_operators(&module()?))),
        "irreducible" => {
            let v = is_abs_irreducible(&module()?);
            Ok(Outcome::flag(v == Irreducibility::Irreducible, v.to_string()))
        }
        "reducible-by" => {
            let m = module()?;
            let want = m.algebra.span(e.args.iter().map(|x| vec(&m.algebra, x)).collect::<Result<_, _>>()?);
            match is_abs_irreducible(&m) {
                Irreducibility::Reducible(s) => Ok(Outcome::flag(s == want, format!("invariant subspace of dim {}", s.dim()))),
                v => Ok(Outcome::flag(false, v.to_string())),
            }
        }
        "indecomposable" => {
            let d = decompose(&module()?);
            Ok(Outcome::flag(d.summands.len() == 1 && !d.complete, format!("{} summand(s), complete = {}", d.summands.len(), d.complete)))
        }
        "decompose-reg-op" => {
            let m = module()?;
            let reg = regular(&m.algebra);
            let op = opposite_module(&reg);
            let d = decompose(&m);
            let mut kinds = Vec::new();
            for s in &d.summands {
                let p = m.restrict(s).map_err(|x| x.to_string())?;
                let r = modules_isomorphic(&p, &reg).map_err(|x| x.to_string())?;
                let o = modules_isomorphic(&p, &op).map_err(|x| x.to_string())?;
                kinds.push(match (r, o) {
                    (true, false) => "Reg",
                    (false, true) => "Reg^op",
                    _ => "?",
                });
            }
            kinds.sort();
            let ok = d.complete && kinds == ["Reg", "Reg^op"];
            Ok(Outcome::flag(ok, format!("summands: {}", kinds.join(", "))))
        }
        "jordan-reduction" => jordan_reduction(&alg()?),
        "rminus-zero" => {
            // R⁻ of the named elements vanishes on Reg ⊕ Reg^op
            let a = alg()?;
            let reg = regular(&a);
            let m = direct_sum(&reg, &opposite_module(&reg));
            let mut reps = Vec::new();
            for s in &e.args {
                let x = vec(&a, s)?;
                let z = Matrix::zeros(f, m.mdim, m.mdim);
                reps.push(crate::representations::check_matrix_identity(&m, &format!("R-_{s} = 0"), &m.rminus_of(&x), &z));
            }
            Ok(Outcome::of(&CheckReport::all("R- vanishing", reps)))
        }
        op => Err(format!("unknown operation {op:?}")),
    }
}

/// The five derivations of the Jordan D_t in their standard form and the bracket table
/// they satisfy (basis names e1, e2, x, y).
fn derivation_table(a: &SuperAlgebra, t: &Scalar) -> Result<Outcome, String> {
    let f = a.field;
    let ix = |n: &str| a.index_of(n).ok_or(format!("no basis element {n}"));
    let (e1, e2, x, y) = (ix("e1")?, ix("e2")?, ix("x")?, ix("y")?);
    let one = f.one();
    let two = f.int(2);
    let mk = |entries: &[(usize, usize, Scalar)]| {
        let mut m = Matrix::zeros(f, a.dim, a.dim);
        for (i, j, s) in entries {
            m.set(*i, *j, s.clone());
        }
        m
    };
    let e = mk(&[(x, y, one.clone())]);
    let ff = mk(&[(y, x, one.clone())]);
    let h = mk(&[(x, x, one.clone()), (y, y, -one.clone())]);
    let da = mk(&[(e1, x, one.clone()), (e2, x, -one.clone()), (y, e1, two.clone()), (y, e2, -(&two * t))]);
    let db = mk(&[(e1, y, one.clone()), (e2, y, -one.clone()), (x, e1, -two.clone()), (x, e2, &two * t)]);
    let der = derivations(a);
    let space = der.subspace(f, a.dim * a.dim);
    let basis = Subspace::span(f, a.dim * a.dim, [&e, &ff, &h, &da, &db].iter().map(|m| m.data.clone()).collect());
    if !basis.equals(&space).unwrap_or(false) {
        return Ok(Outcome::flag(false, format!("Der has dim {}, not spanned by the standard five", der.dim())));
    }
    let k = &one + t;
    let br = |p: &Matrix, q: &Matrix, odd: bool| p.commutator(q, odd);
    let table = [
        ("[e,f] = h", br(&e, &ff, false), h.clone()),
        ("[h,f] = -2f", br(&h, &ff, false), ff.scale(&f.int(-2))),
        ("[h,e] = 2e", br(&h, &e, false), e.scale(&two)),
        ("[a,a] = 4(1+t)f", br(&da, &da, true), ff.scale(&(&f.int(4) * &k))),
        ("[a,b] = -2(1+t)h", br(&da, &db, true), h.scale(&(&f.int(-2) * &k))),
        ("[b,b] = -4(1+t)e", br(&db, &db, true), e.scale(&(&f.int(-4) * &k))),
        ("[e,a] = -b", br(&e, &da, false), db.neg()),
        ("[f,a] = 0", br(&ff, &da, false), Matrix::zeros(f, a.dim, a.dim)),
        ("[h,a] = -a", br(&h, &da, false), da.neg()),
        ("[e,b] = 0", br(&e, &db, false), Matrix::zeros(f, a.dim, a.dim)),
        ("[f,b] = -a", br(&ff, &db, false), da.neg()),
        ("[h,b] = b", br(&h, &db, false), db.clone()),
    ];
    for (name, got, want) in table {
        if got != want {
            return Ok(Outcome::flag(false, format!("{name} fails")));
        }
    }
    Ok(Outcome::flag(true, "Der = span(e,f,h | a,b) with the standard bracket table"))
}

/// Candidate R⁻ tensors on M = Reg ⊕ Reg^op, all grading-compatible, each paired with
/// the R⁺ of M: R⁻_a = R⁺_a; R⁺_a on the Reg summand only; σR⁺_a (σ the parity
/// operator); R⁺_a for even a only; ½R⁺_a for odd a only.
pub fn rminus_candidates(m: &SuperBimodule) -> Vec<(&'static str, Vec<Matrix>)> {
    let f = m.algebra.field;
    let n = m.algebra.dim;
    let rp: Vec<Matrix> = (0..n).map(|a| m.rplus_op(a)).collect();
    let half = m.mdim / 2;
    let mut proj = Matrix::zeros(f, m.mdim, m.mdim);
    for i in 0..half {
        proj.set(i, i, f.one());
    }
    let sigma = m.parity_operator();
    let zero = Matrix::zeros(f, m.mdim, m.mdim);
    let par = &m.algebra.parity;
    vec![
        ("R-_a = R+_a", rp.clone()),
        ("R-_a = R+_a on Reg", rp.iter().map(|r| proj.mul(r)).collect()),
        ("R-_a = σR+_a", rp.iter().map(|r| sigma.mul(r)).collect()),
        ("R-_a = R+_a (a even)", rp.iter().enumerate().map(|(a, r)| if par[a] == 0 { r.clone() } else { zero.clone() }).collect()),
        ("R-_a = R+_a/2 (a odd)", rp.iter().enumerate().map(|(a, r)| if par[a] == 1 { r.scale(&f.half()) } else { zero.clone() }).collect()),
    ]
}

/// On Reg ⊕ Reg^op over a Jordan algebra: R⁻ = 0 passes the NCJ check and every nonzero
/// candidate R⁻ fails it.
fn jordan_reduction(a: &SuperAlgebra) -> Result<Outcome, String> {
    let reg = regular(a);
    let m = direct_sum(&reg, &opposite_module(&reg));
    let rp: Vec<Matrix> = (0..a.dim).map(|i| m.rplus_op(i)).collect();
    let base = SuperBimodule::from_plus_minus(a, "M", m.mparity.clone(), vec![], &rp, &vec![Matrix::zeros(a.field, m.mdim, m.mdim); a.dim])
        .map_err(|x| x.to_string())?;
    if !check_ncj_bimodule(&base).passed {
        return Ok(Outcome::flag(false, "R- = 0 does not pass"));
    }
    for (name, rm) in rminus_candidates(&m) {
        if rm.iter().all(Matrix::is_zero) {
            continue;
        }
        let c = SuperBimodule::from_plus_minus(a, name, m.mparity.clone(), vec![], &rp, &rm).map_err(|x| x.to_string())?;
        if check_ncj_bimodule(&c).passed {
            return Ok(Outcome::flag(false, format!("candidate {name} passes the NCJ check")));
        }
    }
    Ok(Outcome::flag(true, "only R- = 0 passes among the candidates"))
}
