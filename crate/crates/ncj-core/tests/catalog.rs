use ncj::algebra::{vec_of, SuperAlgebra};
use ncj::catalog::*;
use ncj::constructions::{symmetrize, unital_hull};
use ncj::field::{Field, Scalar};
use ncj::identities::*;
use ncj::linalg::{Matrix, Subspace};

const Q: Field = Field::Rational;

fn r(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d)
}

/// Rows of `map` are the images of A's basis; checks multiplicativity on basis pairs.
fn is_hom(a: &SuperAlgebra, b: &SuperAlgebra, map: &Matrix) -> bool {
    (0..a.dim).all(|i| {
        (0..a.dim).all(|j| map.apply(&a.mul(&a.basis(i), &a.basis(j))) == b.mul(map.row(i), map.row(j)))
    })
}

#[test]
fn dt_special_values() {
    let m11 = build_dt(Q, &r(-1, 1), &r(1, 1), &r(0, 1), &r(0, 1));
    assert!(m11.is_associative());
    for t in [-2, 0, 1, 2, 3] {
        assert!(check_jordan(&build_dt_jordan(Q, &r(t, 1))).passed);
    }
    let d = build_dt(Q, &r(2, 1), &r(1, 3), &r(1, 5), &r(1, 7));
    assert!(check_noncommutative_jordan(&d).passed);
    assert!(!d.is_supercommutative());
}

#[test]
fn dt_one_table() {
    let t = r(5, 1);
    let d = build_dt_lambda(Q, &t, &Q.one());
    assert_eq!(d.mul(&d.e("x"), &d.e("y")), vec_of(&d, &[("e1", r(2, 1))]));
    assert_eq!(d.mul(&d.e("y"), &d.e("x")), vec_of(&d, &[("e2", r(-10, 1))]));
    assert!(d.mul(&d.e("e1"), &d.e("e2")).iter().all(Scalar::is_zero));
    assert_eq!(d.mul(&d.e("e1"), &d.e("x")), d.e("x"));
    assert!(d.mul(&d.e("x"), &d.e("e1")).iter().all(Scalar::is_zero));
    // x∘y = e1 + t e2 for every (α,β,γ)
    let g = build_dt(Q, &t, &r(1, 3), &r(2, 1), &r(-1, 1));
    assert_eq!(g.circle(&g.e("x"), &g.e("y")), vec_of(&g, &[("e1", Q.one()), ("e2", t.clone())]));
}

#[test]
fn k3_symmetrizes_and_hull() {
    let (a, b, g) = (r(1, 3), r(2, 1), r(-3, 4));
    let k = build_k3(Q, &a, &b, &g);
    assert!(check_noncommutative_jordan(&k).passed);
    let half = build_k3(Q, &Q.half(), &Q.zero(), &Q.zero());
    assert_eq!(symmetrize(&k), half);
    assert_eq!(half.mul(&half.e("z"), &half.e("w")), half.e("e"));
    // hull basis (1, e, z, w) ↦ (e1+e2, e1, x, y)
    let hull = unital_hull(&k);
    let d0 = build_dt(Q, &Q.zero(), &a, &b, &g);
    let map = Matrix::from_ints(Q, &[&[1, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    assert!(is_hom(&hull, &d0, &map));
}

#[test]
fn jvf_and_uvf() {
    let (par, f) = standard_form(Q, 1, 2).unwrap();
    let j = build_jvf(Q, &par, &f).unwrap();
    assert!(check_jordan(&j).passed);
    // ⟨e1 − e2, x, y⟩ in D_1
    let d1 = build_dt_jordan(Q, &Q.one());
    let map = Matrix::from_ints(Q, &[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    assert!(is_hom(&j, &d1, &map));
    assert!(map.is_invertible());

    let u = build_uvf_cross(Q, &r(3, 1)).unwrap();
    assert!(check_noncommutative_jordan(&u).passed);
    assert!(check_jordan(&build_jvf(Q, &[0, 0, 1, 1], &standard_form(Q, 2, 2).unwrap().1).unwrap()).passed);

    let zero = Matrix::zeros(Q, 2, 2);
    assert_eq!(build_jvf(Q, &[0, 0], &zero).unwrap_err(), CatalogError::Degenerate);
    let asym = Matrix::from_ints(Q, &[&[1, 1], &[0, 1]]);
    assert!(matches!(build_jvf(Q, &[0, 0], &asym), Err(CatalogError::FormSymmetry(..))));
    let mixed = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
    assert!(matches!(build_jvf(Q, &[0, 1], &mixed), Err(CatalogError::FormGrading(..))));
    // a symmetric star breaks superanticommutativity
    let (par, f) = standard_form(Q, 3, 0).unwrap();
    let mut star = vec![vec![vec![Q.zero(); 3]; 3]; 3];
    star[0][1][2] = Q.one();
    star[1][0][2] = Q.one();
    assert!(matches!(build_uvf_star(Q, &par, &f, &star), Err(CatalogError::StarSymmetry(..))));
}

#[test]
fn matrix_families() {
    let q1 = build_q(Q, 1);
    assert_eq!(q1.mul(&q1.e("~1"), &q1.e("~1")), q1.e("1"));
    let q2 = build_q(Q, 2);
    assert_eq!(q2.dim, 8);
    assert!(q2.is_associative());
    assert!(build_mmn(Q, 2, 2).is_associative());
    assert!(check_noncommutative_jordan(&q2).passed);
    assert!(check_jordan(&symmetrize(&q2)).passed);
    // ā∘b̄ = [a,b]/2
    let s = symmetrize(&q2);
    let want = vec_of(&q2, &[("e11", r(1, 2)), ("e22", r(-1, 2))]);
    assert_eq!(s.mul(&s.e("~e12"), &s.e("~e21")), want);
}

#[test]
fn p2_table() {
    let p = build_p2(Q);
    assert!(check_jordan(&p).passed);
    assert_eq!(p.mul(&p.e("a"), &p.e("b")), vec_of(&p, &[("e1", r(1, 2)), ("e2", r(1, 2))]));
    assert_eq!(p.mul(&p.e("e"), &p.e("a")), vec_of(&p, &[("d", r(1, 2))]));
    let sub = p.span_names(&["e1", "e2", "c", "d"]);
    let d = p.subalgebra(&sub, "D").unwrap();
    let dm1 = build_dt_jordan(Q, &r(-1, 1));
    let id = Matrix::identity(Q, 4);
    // c ↦ x, d ↦ y up to the scaling c∘d = (e1 − e2)/2 = ½(x∘y)
    let scaled = Matrix::from_rows(Q, 4, vec![id.row(0).to_vec(), id.row(1).to_vec(), id.row(2).to_vec(), ncj::linalg::vscale(&Q.half(), id.row(3))]);
    assert!(is_hom(&d, &dm1, &scaled));
}

#[test]
fn p2_matches_superinvolution_fixed_points() {
    // Inside M_{2,2}: e1 = e11+e33, e2 = e22+e44, f = e42, e = e31, a = e12+e43,
    // b = e21+e34, c = e14−e23, d = e32+e41, with the symmetrized product.
    let m = symmetrize(&build_mmn(Q, 2, 2));
    let v = |terms: &[(&str, i64)]| vec_of(&m, &terms.iter().map(|(n, c)| (*n, Q.int(*c))).collect::<Vec<_>>());
    let rows = vec![
        v(&[("e11", 1), ("e33", 1)]),
        v(&[("e22", 1), ("e44", 1)]),
        v(&[("e12", 1), ("e43", 1)]),
        v(&[("e21", 1), ("e34", 1)]),
        v(&[("e31", 1)]),
        v(&[("e42", 1)]),
        v(&[("e14", 1), ("e23", -1)]),
        v(&[("e32", 1), ("e41", 1)]),
    ];
    let map = Matrix::from_rows(Q, 16, rows);
    assert!(is_hom(&build_p2(Q), &m, &map));
}

#[test]
fn k10_and_k9() {
    let k = build_k10(Q);
    assert_eq!(k.dim, 10);
    assert_eq!(k.even_dim(), 6);
    assert_eq!(k.mul(&k.e("u"), &k.e("z")), k.e("uz"));
    assert_eq!(k.mul(&k.e("z"), &k.e("w")), vec_of(&k, &[("e1", Q.one()), ("e2", r(-3, 1))]));
    assert_eq!(k.mul(&k.e("uz"), &k.e("vw")), vec_of(&k, &[("e1", r(2, 1))]));
    assert_eq!(k.mul(&k.e("u"), &k.e("v")), vec_of(&k, &[("e1", Q.one()), ("e2", r(-3, 1))]));
    assert_eq!(k.mul(&k.e("z"), &k.e("u")), vec_of(&k, &[("uz", r(-1, 1))]));
    assert!(check_jordan(&k).passed);
    // ⟨e1, e2, z, w⟩ is a subalgebra
    assert!(k.subalgebra(&k.span_names(&["e1", "e2", "z", "w"]), "D").is_ok());

    let f3 = Field::prime(3).unwrap();
    let k9 = build_k9(f3).unwrap();
    assert_eq!(k9.dim, 9);
    assert!(check_jordan(&k9).passed);
    assert_eq!(build_k9(Q).unwrap_err(), CatalogError::Characteristic("K_9", 3));
}

#[test]
fn k10_sign_choice_is_unique() {
    // flipping any single frozen sign breaks the Jordan identity
    let base = K10_SIGNS;
    let flips: Vec<K10Signs> = vec![
        K10Signs { uz_v: -base.uz_v, ..base },
        K10Signs { vz_u: -base.vz_u, ..base },
        K10Signs { uw_z: -base.uw_z, ..base },
        K10Signs { uw_v: -base.uw_v, ..base },
        K10Signs { vw_z: -base.vw_z, ..base },
        K10Signs { vw_u: -base.vw_u, ..base },
        K10Signs { uw_vz: -base.uw_vz, ..base },
    ];
    for s in flips {
        assert!(!check_jordan(&build_k10_with(Q, s)).passed, "{s:?}");
    }
}

#[test]
fn small_algebras() {
    assert!(check_noncommutative_jordan(&build_sl2(Q)).passed);
    assert!(!check_jordan(&build_sl2(Q)).passed);
    for a in [build_ground(Q), build_dual_numbers(Q, 0), build_dual_numbers(Q, 1), build_group_c2(Q)] {
        assert!(a.is_associative() && a.is_supercommutative(), "{}", a.name);
    }
    assert!(build_zero(Q, vec![0]).is_zero_algebra());
}

#[test]
fn names_resolve() {
    assert_eq!(by_name("Dt(2,1,0,0)", Q).unwrap(), build_dt(Q, &r(2, 1), &Q.one(), &Q.zero(), &Q.zero()));
    assert_eq!(by_name("K3(1/2,0,0)", Q).unwrap().dim, 3);
    assert_eq!(by_name("Q(2)", Q).unwrap().dim, 8);
    assert_eq!(by_name("M(1,1)", Q).unwrap().dim, 4);
    assert_eq!(by_name("JVf(1,2)", Q).unwrap().dim, 4);
    assert_eq!(by_name("Mut(Q(2);3)", Q).unwrap().dim, 8);
    assert_eq!(by_name("K9@p3", Q).unwrap().field, Field::prime(3).unwrap());
    assert!(matches!(by_name("Nope", Q), Err(CatalogError::Unknown(_))));
    assert!(matches!(by_name("Dt(1,2)", Q), Err(CatalogError::Arguments(..))));
    assert_eq!(module_by_name("Vmod(0,0,0)", Q).unwrap().mdim, 4);
    assert_eq!(module_by_name("Sum(Reg(Dt(2,1,0,0));Op(Reg(Dt(2,1,0,0))))", Q).unwrap().mdim, 8);
    let _ = Subspace::zero(Q, 1);
}
