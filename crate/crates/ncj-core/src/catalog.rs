//! Builders for the named superalgebras and modules. Basis orders are part of the
//! file-format contract:
//!
//! * `D_t(α,β,γ)`: e1, e2, x, y (parity 0,0,1,1)
//! * `K_3(α,β,γ)`: e, z, w (parity 0,1,1)
//! * `U(V,f,⋆)`: 1, then V's basis
//! * `M_{m,n}`: E_ij row-major; `Q(n)`: e_ij row-major then their bars
//! * `P(2)`: e1, e2, a, b | e, f, c, d
//! * `K_10`: e1, uz, vz, uw, vw, e2 | u, v, w, z; `K_9` drops e2
//! * `V(α,β,γ)`: v, w | z, t

use thiserror::Error;

use crate::algebra::{AlgebraError, SuperAlgebra, TableBuilder};
use crate::constructions::symmetrize;
use crate::field::{Field, FieldError, Scalar};
use crate::linalg::Matrix;
use crate::module::SuperBimodule;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{0} requires characteristic {1}")]
    Characteristic(&'static str, u64),
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("bilinear form is not supersymmetric at ({0},{1})")]
    FormSymmetry(usize, usize),
    #[error("bilinear form is not graded at ({0},{1})")]
    FormGrading(usize, usize),
    #[error("star product is not superanticommutative at ({0},{1})")]
    StarSymmetry(usize, usize),
    #[error("star product is not graded at ({0},{1},{2})")]
    StarGrading(usize, usize, usize),
    #[error("form is not invariant for the star product at ({0},{1},{2})")]
    Invariance(usize, usize, usize),
    #[error("unknown catalog name {0:?}")]
    Unknown(String),
    #[error("bad arguments for {0}: {1}")]
    Arguments(String, String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// D_t(α,β,γ).
pub fn build_dt(field: Field, t: &Scalar, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> SuperAlgebra {
    let (e1, e2, x, y) = (0, 1, 2, 3);
    let one = field.one();
    let two = field.int(2);
    let a1 = &one - alpha;
    let mut tb = TableBuilder::new(field, 4);
    tb.add(e1, e1, e1, one.clone()).add(e2, e2, e2, one.clone());
    for (i, j) in [(e1, x), (x, e2)] {
        tb.add(i, j, x, alpha.clone()).add(i, j, y, beta.clone());
    }
    for (i, j) in [(x, e1), (e2, x)] {
        tb.add(i, j, x, a1.clone()).add(i, j, y, -beta);
    }
    for (i, j) in [(e1, y), (y, e2)] {
        tb.add(i, j, x, gamma.clone()).add(i, j, y, a1.clone());
    }
    for (i, j) in [(y, e1), (e2, y)] {
        tb.add(i, j, x, -gamma).add(i, j, y, alpha.clone());
    }
    tb.add(x, y, e1, &two * alpha).add(x, y, e2, &two * &(&a1 * t));
    tb.add(y, x, e1, -(&two * &a1)).add(y, x, e2, -(&two * &(alpha * t)));
    let b2 = &two * beta;
    tb.add(x, x, e1, -&b2).add(x, x, e2, &b2 * t);
    let g2 = &two * gamma;
    tb.add(y, y, e1, g2.clone()).add(y, y, e2, -(&g2 * t));
    let name = format!("D_{t}({alpha},{beta},{gamma})");
    tb.build(&name, vec![0, 0, 1, 1], names(&["e1", "e2", "x", "y"])).unwrap()
}

/// D_t(λ) = D_t(λ,0,0).
pub fn build_dt_lambda(field: Field, t: &Scalar, lambda: &Scalar) -> SuperAlgebra {
    build_dt(field, t, lambda, &field.zero(), &field.zero())
}

/// The Jordan superalgebra D_t = D_t(½,0,0).
pub fn build_dt_jordan(field: Field, t: &Scalar) -> SuperAlgebra {
    let mut a = build_dt_lambda(field, t, &field.half());
    a.name = format!("D_{t}");
    a
}

/// K_3(α,β,γ).
pub fn build_k3(field: Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> SuperAlgebra {
    let (e, z, w) = (0, 1, 2);
    let one = field.one();
    let two = field.int(2);
    let a1 = &one - alpha;
    let mut tb = TableBuilder::new(field, 3);
    tb.add(e, e, e, one.clone());
    tb.add(e, z, z, alpha.clone()).add(e, z, w, beta.clone());
    tb.add(e, w, z, gamma.clone()).add(e, w, w, a1.clone());
    tb.add(z, e, z, a1.clone()).add(z, e, w, -beta);
    tb.add(z, z, e, -(&two * beta)).add(z, w, e, &two * alpha);
    tb.add(w, e, w, alpha.clone()).add(w, e, z, -gamma);
    tb.add(w, z, e, -(&two * &a1)).add(w, w, e, &two * gamma);
    let name = format!("K_3({alpha},{beta},{gamma})");
    tb.build(&name, vec![0, 1, 1], names(&["e", "z", "w"])).unwrap()
}

/// U(V,f,⋆): basis 1, v_0, …; (α+x)(β+y) = (αβ + f(x,y)) + (αy + βx + x⋆y).
/// `star[i][j]` is the coordinate vector of v_i ⋆ v_j.
pub fn build_uvf_star(
    field: Field,
    vparity: &[u8],
    f: &Matrix,
    star: &[Vec<Vec<Scalar>>],
) -> Result<SuperAlgebra, CatalogError> {
    let n = vparity.len();
    for i in 0..n {
        for j in 0..n {
            let fij = f.get(i, j);
            if vparity[i] != vparity[j] && !fij.is_zero() {
                return Err(CatalogError::FormGrading(i, j));
            }
            let s = if vparity[i] & vparity[j] == 1 { -f.get(j, i) } else { f.get(j, i).clone() };
            if *fij != s {
                return Err(CatalogError::FormSymmetry(i, j));
            }
        }
    }
    if !f.is_invertible() {
        return Err(CatalogError::Degenerate);
    }
    for i in 0..n {
        for j in 0..n {
            let odd = vparity[i] & vparity[j] == 1;
            for k in 0..n {
                let a = &star[i][j][k];
                if !a.is_zero() && vparity[k] != vparity[i] ^ vparity[j] {
                    return Err(CatalogError::StarGrading(i, j, k));
                }
                let b = &star[j][i][k];
                let want = if odd { b.clone() } else { -b };
                if *a != want {
                    return Err(CatalogError::StarSymmetry(i, j));
                }
            }
        }
    }
    let form = |x: &[Scalar], y: &[Scalar]| -> Scalar {
        let mut s = field.zero();
        for i in 0..n {
            for j in 0..n {
                s += &(&(&x[i] * &y[j]) * f.get(i, j));
            }
        }
        s
    };
    let unit = |i: usize| crate::linalg::unit_vec(field, n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if form(&star[i][j], &unit(k)) != form(&unit(i), &star[j][k]) {
                    return Err(CatalogError::Invariance(i, j, k));
                }
            }
        }
    }
    let mut tb = TableBuilder::new(field, n + 1);
    tb.add(0, 0, 0, field.one());
    for i in 0..n {
        tb.add(0, i + 1, i + 1, field.one());
        tb.add(i + 1, 0, i + 1, field.one());
        for j in 0..n {
            tb.add(i + 1, j + 1, 0, f.get(i, j).clone());
            for k in 0..n {
                tb.add(i + 1, j + 1, k + 1, star[i][j][k].clone());
            }
        }
    }
    let mut parity = vec![0];
    parity.extend(vparity);
    let mut ns = vec!["1".to_string()];
    ns.extend((0..n).map(|i| format!("v{i}")));
    let name = if star.iter().flatten().flatten().all(Scalar::is_zero) { "J(V,f)" } else { "U(V,f,*)" };
    Ok(tb.build(name, parity, ns)?)
}

/// J(V,f) = U(V,f,0).
pub fn build_jvf(field: Field, vparity: &[u8], f: &Matrix) -> Result<SuperAlgebra, CatalogError> {
    let n = vparity.len();
    let star = vec![vec![vec![field.zero(); n]; n]; n];
    build_uvf_star(field, vparity, f, &star)
}

/// The standard form on V with `m` even and `n` odd basis vectors (n even):
/// identity on the even part, symplectic pairs on the odd part.
pub fn standard_form(field: Field, m: usize, n: usize) -> Result<(Vec<u8>, Matrix), CatalogError> {
    if n % 2 == 1 {
        return Err(CatalogError::Degenerate);
    }
    let d = m + n;
    let mut f = Matrix::zeros(field, d, d);
    for i in 0..m {
        f.set(i, i, field.one());
    }
    for k in 0..n / 2 {
        let (a, b) = (m + 2 * k, m + 2 * k + 1);
        f.set(a, b, field.one());
        f.set(b, a, -field.one());
    }
    let mut par = vec![0u8; m];
    par.extend(vec![1u8; n]);
    Ok((par, f))
}

/// U(V,f,⋆) on a 3-dim even V with f = identity and x⋆y = a·(x × y).
pub fn build_uvf_cross(field: Field, a: &Scalar) -> Result<SuperAlgebra, CatalogError> {
    let (par, f) = standard_form(field, 3, 0)?;
    let mut star = vec![vec![vec![field.zero(); 3]; 3]; 3];
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        star[i][j][k] = a.clone();
        star[j][i][k] = -a;
    }
    build_uvf_star(field, &par, &f, &star)
}

/// Full matrix superalgebra M_{m,n}; E_ij has parity [i ≥ m] ⊕ [j ≥ m].
pub fn build_mmn(field: Field, m: usize, n: usize) -> SuperAlgebra {
    let d = m + n;
    let idx = |i: usize, j: usize| i * d + j;
    let mut tb = TableBuilder::new(field, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                tb.add(idx(i, j), idx(j, k), idx(i, k), field.one());
            }
        }
    }
    let p = |i: usize| (i >= m) as u8;
    let mut parity = Vec::new();
    let mut ns = Vec::new();
    for i in 0..d {
        for j in 0..d {
            parity.push(p(i) ^ p(j));
            ns.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    tb.build(&format!("M_{{{m},{n}}}"), parity, ns).unwrap()
}

/// Q(n) = M_n ⊕ M̄_n: ab, āb = ab̄ = (ab)‾, āb̄ = ab.
pub fn build_q(field: Field, n: usize) -> SuperAlgebra {
    let s = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut tb = TableBuilder::new(field, 2 * s);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (idx(i, j), idx(j, k), idx(i, k));
                tb.add(a, b, c, field.one());
                tb.add(s + a, b, s + c, field.one());
                tb.add(a, s + b, s + c, field.one());
                tb.add(s + a, s + b, c, field.one());
            }
        }
    }
    let mut parity = vec![0u8; s];
    parity.extend(vec![1u8; s]);
    let mut ns: Vec<String> = (0..s).map(|a| format!("e{}{}", a / n + 1, a % n + 1)).collect();
    ns.extend((0..s).map(|a| format!("~e{}{}", a / n + 1, a % n + 1)));
    if n == 1 {
        ns = names(&["1", "~1"]);
    }
    tb.build(&format!("Q({n})"), parity, ns).unwrap()
}

/// P(2) from its circle table.
pub fn build_p2(field: Field) -> SuperAlgebra {
    let ns = ["e1", "e2", "a", "b", "e", "f", "c", "d"];
    let ix = |s: &str| ns.iter().position(|n| *n == s).unwrap();
    let h = field.half();
    let one = field.one();
    let mut tb = TableBuilder::new(field, 8);
    let sym = |tb: &mut TableBuilder, p: &str, q: &str, out: &[(&str, Scalar)], anti: bool| {
        for (k, s) in out {
            tb.add(ix(p), ix(q), ix(k), s.clone());
            if p != q {
                tb.add(ix(q), ix(p), ix(k), if anti { -s } else { s.clone() });
            }
        }
    };
    sym(&mut tb, "e1", "e1", &[("e1", one.clone())], false);
    sym(&mut tb, "e2", "e2", &[("e2", one.clone())], false);
    sym(&mut tb, "e1", "e", &[("e", one.clone())], false);
    sym(&mut tb, "e2", "f", &[("f", one.clone())], false);
    for m in ["a", "b", "c", "d"] {
        sym(&mut tb, "e1", m, &[(m, h.clone())], false);
        sym(&mut tb, "e2", m, &[(m, h.clone())], false);
    }
    sym(&mut tb, "e", "a", &[("d", h.clone())], false);
    sym(&mut tb, "e", "c", &[("b", h.clone())], true);
    sym(&mut tb, "f", "b", &[("d", h.clone())], false);
    sym(&mut tb, "f", "c", &[("a", -&h)], true);
    sym(&mut tb, "a", "b", &[("e1", h.clone()), ("e2", h.clone())], false);
    sym(&mut tb, "a", "d", &[("f", one.clone())], false);
    sym(&mut tb, "b", "d", &[("e", one.clone())], false);
    sym(&mut tb, "c", "d", &[("e1", h.clone()), ("e2", -&h)], true);
    tb.build("P(2)", vec![0, 0, 0, 0, 1, 1, 1, 1], names(&ns)).unwrap()
}

/// Signs of the K_10 products left implicit by the stated symmetries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K10Signs {
    pub uz_v: i64,
    pub vz_u: i64,
    pub uw_z: i64,
    pub uw_v: i64,
    pub vw_z: i64,
    pub vw_u: i64,
    pub uw_vz: i64,
}

/// The resolved expansion (see the notes in the README).
pub const K10_SIGNS: K10Signs = K10Signs { uz_v: 1, vz_u: -1, uw_z: 1, uw_v: 1, vw_z: 1, vw_u: -1, uw_vz: -2 };

pub fn build_k10_with(field: Field, s: K10Signs) -> SuperAlgebra {
    let ns = ["e1", "uz", "vz", "uw", "vw", "e2", "u", "v", "w", "z"];
    let ix = |s: &str| ns.iter().position(|n| *n == s).unwrap();
    let h = field.half();
    let one = field.one();
    let mut tb = TableBuilder::new(field, 10);
    let mut put = |p: &str, q: &str, out: &[(&str, i64)], anti: bool| {
        for (k, c) in out {
            let v = field.int(*c);
            tb.add(ix(p), ix(q), ix(k), v.clone());
            if p != q {
                tb.add(ix(q), ix(p), ix(k), if anti { -v } else { v });
            }
        }
    };
    // odd·odd
    put("u", "z", &[("uz", 1)], true);
    put("u", "w", &[("uw", 1)], true);
    put("v", "z", &[("vz", 1)], true);
    put("v", "w", &[("vw", 1)], true);
    put("z", "w", &[("e1", 1), ("e2", -3)], true);
    put("u", "v", &[("e1", 1), ("e2", -3)], true);
    // A_1·M
    put("uz", "w", &[("u", -1)], false);
    put("vz", "w", &[("v", -1)], false);
    put("uz", "v", &[("z", s.uz_v)], false);
    put("vz", "u", &[("z", s.vz_u)], false);
    put("uw", "z", &[("u", s.uw_z)], false);
    put("uw", "v", &[("w", s.uw_v)], false);
    put("vw", "z", &[("v", s.vw_z)], false);
    put("vw", "u", &[("w", s.vw_u)], false);
    // A_1·A_1
    put("uz", "vw", &[("e1", 2)], false);
    put("uw", "vz", &[("e1", s.uw_vz)], false);
    put("e1", "e1", &[("e1", 1)], false);
    put("e2", "e2", &[("e2", 1)], false);
    for x in ["uz", "vz", "uw", "vw"] {
        put("e1", x, &[(x, 1)], false);
    }
    drop(put);
    for m in ["u", "v", "w", "z"] {
        for e in ["e1", "e2"] {
            tb.add(ix(e), ix(m), ix(m), h.clone());
            tb.add(ix(m), ix(e), ix(m), h.clone());
        }
    }
    let _ = one;
    tb.build("K_10", vec![0, 0, 0, 0, 0, 0, 1, 1, 1, 1], names(&ns)).unwrap()
}

pub fn build_k10(field: Field) -> SuperAlgebra {
    build_k10_with(field, K10_SIGNS)
}

/// K_9 = A_1 ⊕ M inside K_10 over characteristic 3.
pub fn build_k9(field: Field) -> Result<SuperAlgebra, CatalogError> {
    if field.characteristic() != 3 {
        return Err(CatalogError::Characteristic("K_9", 3));
    }
    let k10 = build_k10(field);
    let keep: Vec<usize> = (0..10).filter(|&i| i != 5).collect();
    let mut tb = TableBuilder::new(field, 9);
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            for (k, s) in k10.mul_basis(i, j) {
                let c = keep.iter().position(|x| x == k).ok_or_else(|| {
                    CatalogError::Arguments("K_9".into(), "A_1 ⊕ M is not closed".into())
                })?;
                tb.add(a, b, c, s.clone());
            }
        }
    }
    let parity = keep.iter().map(|&i| k10.parity[i]).collect();
    let ns = keep.iter().map(|&i| k10.basis_names[i].clone()).collect();
    Ok(tb.build("K_9", parity, ns)?)
}

/// Small supercommutative algebras used as Kronecker coefficients.
pub fn build_ground(field: Field) -> SuperAlgebra {
    let mut tb = TableBuilder::new(field, 1);
    tb.add(0, 0, 0, field.one());
    tb.build("F", vec![0], names(&["1"])).unwrap()
}

/// F[s]/(s²) with s of the given parity.
pub fn build_dual_numbers(field: Field, s_parity: u8) -> SuperAlgebra {
    let mut tb = TableBuilder::new(field, 2);
    tb.add(0, 0, 0, field.one()).add(0, 1, 1, field.one()).add(1, 0, 1, field.one());
    let name = if s_parity == 0 { "F[s]/(s^2)" } else { "F[s odd]/(s^2)" };
    tb.build(name, vec![0, s_parity], names(&["1", "s"])).unwrap()
}

/// Group algebra of C_2: basis 1, g with g² = 1.
pub fn build_group_c2(field: Field) -> SuperAlgebra {
    let mut tb = TableBuilder::new(field, 2);
    tb.add(0, 0, 0, field.one()).add(0, 1, 1, field.one()).add(1, 0, 1, field.one()).add(1, 1, 0, field.one());
    tb.build("F[C2]", vec![0, 0], names(&["1", "g"])).unwrap()
}

/// Algebra with all products zero.
pub fn build_zero(field: Field, parity: Vec<u8>) -> SuperAlgebra {
    let n = parity.len();
    TableBuilder::new(field, n).build("zero", parity, vec![]).unwrap()
}

/// sl_2 with basis e, f, h as an anticommutative algebra.
pub fn build_sl2(field: Field) -> SuperAlgebra {
    let (e, f, h) = (0, 1, 2);
    let one = field.one();
    let two = field.int(2);
    let mut tb = TableBuilder::new(field, 3);
    let mut anti = |i: usize, j: usize, k: usize, s: Scalar| {
        tb.add(i, j, k, s.clone());
        tb.add(j, i, k, -s);
    };
    anti(e, f, h, one);
    anti(h, e, e, two.clone());
    anti(h, f, f, -two);
    tb.build("sl_2", vec![0, 0, 0], names(&["e", "f", "h"])).unwrap()
}

/// V(α,β,γ) over D_{−1}: circle-only over the Jordan D_{−1}, or with the R⁻ actions
/// attached over D_{−1}(½,½,0).
pub fn build_vmodule(field: Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar, noncommutative: bool) -> SuperBimodule {
    let t = -field.one();
    let h = field.half();
    let algebra = if noncommutative {
        build_dt(field, &t, &h, &h, &field.zero())
    } else {
        build_dt_jordan(field, &t)
    };
    let (v, w, z, tt) = (0, 1, 2, 3);
    let one = field.one();
    let zero = || Matrix::zeros(field, 4, 4);
    let g1 = gamma - &one;
    let g2 = gamma + &one;
    let mut rp = vec![zero(), zero(), zero(), zero()];
    // e1, e2
    rp[0].set(v, v, one.clone());
    rp[0].set(z, z, h.clone());
    rp[0].set(tt, tt, h.clone());
    rp[1].set(w, w, one.clone());
    rp[1].set(z, z, h.clone());
    rp[1].set(tt, tt, h.clone());
    // x
    rp[2].set(v, z, one.clone());
    rp[2].set(w, z, g1.clone());
    rp[2].set(w, tt, -(&field.int(2) * alpha));
    rp[2].set(z, v, alpha.clone());
    rp[2].set(tt, v, &h * &g1);
    rp[2].set(tt, w, -&h);
    // y
    rp[3].set(v, tt, one.clone());
    rp[3].set(w, z, &field.int(2) * beta);
    rp[3].set(w, tt, -&g2);
    rp[3].set(z, v, &h * &g2);
    rp[3].set(z, w, h.clone());
    rp[3].set(tt, v, beta.clone());
    let mut rm = vec![zero(), zero(), zero(), zero()];
    if noncommutative {
        // R⁻ as forced by R⁺ (projections relative to e1, 1/(1−t) = ½):
        // R⁻_x = −P0R⁺_y + P1R⁺_y(P0−P2) + P2R⁺_y, R⁻_{e1} = −R⁻_{e2} = ½P1R⁺_y(P0−P2)R⁺_y
        let b2 = &field.int(2) * beta;
        rm[2].set(w, z, -b2);
        rm[2].set(w, tt, g2.clone());
        rm[2].set(v, tt, one.clone());
        rm[2].set(z, w, h.clone());
        rm[2].set(z, v, -(&h * &g2));
        rm[2].set(tt, v, -beta);
        rm[0].set(z, z, &h * beta);
        rm[0].set(z, tt, -(&h * &g2));
        rm[0].set(tt, tt, -(&h * beta));
        for (i, j) in [(z, z), (z, tt), (tt, tt)] {
            let s = -rm[0].get(i, j);
            rm[1].set(i, j, s);
        }
    }
    let name = format!("V({alpha},{beta},{gamma}){}", if noncommutative { "+R-" } else { "" });
    SuperBimodule::from_plus_minus(&algebra, &name, vec![0, 0, 1, 1], names(&["v", "w", "z", "t"]), &rp, &rm)
        .unwrap()
}

/// Resolves catalog names such as `Dt(2,1/2,0,0)`, `K3(1,0,0)`, `Q(2)`, `M(1,1)`, `P2`,
/// `K10`, `K9`, `JVf(m,n)`, `UVf(a)`, `Mut(NAME;λ)`, `Sym(NAME)`, `Hull(NAME)`.
pub fn by_name(name: &str, field: Field) -> Result<SuperAlgebra, CatalogError> {
    let s = name.trim();
    let (head, args) = match s.find('(') {
        Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
        _ => (s, ""),
    };
    let bad = |msg: &str| CatalogError::Arguments(s.to_string(), msg.to_string());
    let scalars = |n: usize| -> Result<Vec<Scalar>, CatalogError> {
        let parts: Vec<&str> = if args.trim().is_empty() { vec![] } else { args.split(',').collect() };
        if parts.len() != n {
            return Err(bad(&format!("expected {n} arguments")));
        }
        parts.iter().map(|p| Ok(field.parse_scalar(p)?)).collect()
    };
    let ints = |n: usize| -> Result<Vec<usize>, CatalogError> {
        let parts: Vec<&str> = args.split(',').collect();
        if parts.len() != n {
            return Err(bad(&format!("expected {n} arguments")));
        }
        parts.iter().map(|p| p.trim().parse::<usize>().map_err(|_| bad("expected a count"))).collect()
    };
    match head {
        "Dt" => {
            let v = scalars(4)?;
            Ok(build_dt(field, &v[0], &v[1], &v[2], &v[3]))
        }
        "K3" => {
            let v = scalars(3)?;
            Ok(build_k3(field, &v[0], &v[1], &v[2]))
        }
        "Q" => Ok(build_q(field, ints(1)?[0].max(1))),
        "M" => {
            let v = ints(2)?;
            if v[0] + v[1] == 0 {
                return Err(bad("m + n must be positive"));
            }
            Ok(build_mmn(field, v[0], v[1]))
        }
        "P2" => Ok(build_p2(field)),
        "K10" => Ok(build_k10(field)),
        "K9" => build_k9(field),
        "K9@p3" => build_k9(Field::prime(3)?),
        "JVf" => {
            let v = ints(2)?;
            let (par, f) = standard_form(field, v[0], v[1])?;
            build_jvf(field, &par, &f)
        }
        "UVf" => {
            let v = scalars(1)?;
            build_uvf_cross(field, &v[0])
        }
        "sl2" => Ok(build_sl2(field)),
        "F" => Ok(build_ground(field)),
        "Dual" => Ok(build_dual_numbers(field, 0)),
        "C2" => Ok(build_group_c2(field)),
        "Sym" => Ok(symmetrize(&by_name(args, field)?)),
        "Hull" => Ok(crate::constructions::unital_hull(&by_name(args, field)?)),
        "Mut" => {
            let (inner, l) = args.rsplit_once(';').ok_or_else(|| bad("expected NAME;λ"))?;
            Ok(crate::constructions::mutate(&by_name(inner, field)?, &field.parse_scalar(l)?))
        }
        _ => Err(CatalogError::Unknown(s.to_string())),
    }
}

/// Resolves module names: `Reg(NAME)`, `Op(MODULE)`, `Sum(MODULE;MODULE)`, `Vmod(a,b,g)`
/// (circle-only), `VmodNC(a,b,g)` (with R⁻) and `Char(NAME;b)`, the 1-dim even module on
/// which the basis element b acts by the identity from both sides and the rest by 0.
pub fn module_by_name(name: &str, field: Field) -> Result<SuperBimodule, CatalogError> {
    let s = name.trim();
    let (head, args) = match s.find('(') {
        Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
        _ => (s, ""),
    };
    let bad = |msg: &str| CatalogError::Arguments(s.to_string(), msg.to_string());
    match head {
        "Reg" => Ok(crate::module::regular(&by_name(args, field)?)),
        "Op" => Ok(crate::module::opposite_module(&module_by_name(args, field)?)),
        "Sum" => {
            let (a, b) = split_top(args, ';').ok_or_else(|| bad("expected MODULE;MODULE"))?;
            Ok(crate::module::direct_sum(&module_by_name(a, field)?, &module_by_name(b, field)?))
        }
        "Vmod" | "VmodNC" => {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(bad("expected 3 arguments"));
            }
            let v: Vec<Scalar> = parts.iter().map(|p| field.parse_scalar(p)).collect::<Result<_, _>>()?;
            Ok(build_vmodule(field, &v[0], &v[1], &v[2], head == "VmodNC"))
        }
        "Char" => {
            let (inner, b) = args.rsplit_once(';').ok_or_else(|| bad("expected NAME;basis element"))?;
            let a = by_name(inner, field)?;
            let k = a.index_of(b.trim()).ok_or_else(|| bad("unknown basis element"))?;
            if a.parity[k] != 0 {
                return Err(bad("the acting element must be even"));
            }
            let mut act = vec![field.zero(); a.dim];
            act[k] = field.one();
            Ok(SuperBimodule::new(&a, &format!("Char({b})"), vec![0], names(&["m"]), act.clone(), act)?)
        }
        _ => Err(CatalogError::Unknown(s.to_string())),
    }
}

/// Splits at the first separator not nested in parentheses.
fn split_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
