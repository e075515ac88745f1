use ncj::algebra::SuperAlgebra;
use ncj::catalog::*;
use ncj::constructions::{graded_tensor, unit_tensor_embedding};
use ncj::identities::check_jordan;
use ncj::field::{Field, Scalar};
use ncj::linalg::{Matrix, Subspace};
use ncj::module::{opposite_module, regular};
use ncj::structure::*;

const Q: Field = Field::Rational;

fn r(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d)
}

/// Linear map on the named basis, rows given as (source, [(target, coeff)]).
fn map(a: &SuperAlgebra, rows: &[(&str, &[(&str, Scalar)])]) -> Matrix {
    let mut m = Matrix::zeros(a.field, a.dim, a.dim);
    for (src, imgs) in rows {
        let i = a.index_of(src).unwrap();
        for (dst, c) in imgs.iter() {
            m.set(i, a.index_of(dst).unwrap(), c.clone());
        }
    }
    m
}

fn sc(x: &Matrix, y: &Matrix, px: u8, py: u8) -> Matrix {
    x.commutator(y, px & py == 1)
}

#[test]
fn jordan_dt_derivations_match_table() {
    let t = r(5, 1);
    let one = Q.one();
    let a = build_dt_jordan(Q, &t);
    let der = derivations(&a);
    assert_eq!((der.dim(), der.even_dim()), (5, 3));
    let two = Q.int(2);
    let e = map(&a, &[("x", &[("y", one.clone())])]);
    let f = map(&a, &[("y", &[("x", one.clone())])]);
    let h = map(&a, &[("x", &[("x", one.clone())]), ("y", &[("y", -one.clone())])]);
    let da = map(&a, &[("e1", &[("x", one.clone())]), ("e2", &[("x", -one.clone())]), ("y", &[("e1", two.clone()), ("e2", -(&two * &t))])]);
    let db = map(&a, &[("e1", &[("y", one.clone())]), ("e2", &[("y", -one.clone())]), ("x", &[("e1", -two.clone()), ("e2", &two * &t)])]);
    let space = der.subspace(Q, 16);
    for d in [&e, &f, &h, &da, &db] {
        assert!(space.contains(&d.data));
    }
    let k = &t + &one;
    assert_eq!(sc(&e, &f, 0, 0), h);
    assert_eq!(sc(&h, &f, 0, 0), f.scale(&Q.int(-2)));
    assert_eq!(sc(&h, &e, 0, 0), e.scale(&two));
    assert_eq!(sc(&da, &da, 1, 1), f.scale(&(&Q.int(4) * &k)));
    assert_eq!(sc(&da, &db, 1, 1), h.scale(&(&Q.int(-2) * &k)));
    assert_eq!(sc(&db, &db, 1, 1), e.scale(&(&Q.int(-4) * &k)));
    assert_eq!(sc(&e, &da, 0, 1), db.neg());
    assert!(sc(&f, &da, 0, 1).is_zero());
    assert_eq!(sc(&h, &da, 0, 1), da.neg());
    assert!(sc(&e, &db, 0, 1).is_zero());
    assert_eq!(sc(&f, &db, 0, 1), da.neg());
    assert_eq!(sc(&h, &db, 0, 1), db);

    // all inner, with the expected inner forms
    assert!(all_inner(&a).unwrap());
    let rr = |n: &str| a.op_basis(a.index_of(n).unwrap(), ncj::algebra::OperatorKind::R);
    let c = Q.int(2).div(&k).unwrap();
    // [R_y, R_y] = 2R_y², so the diagonal forms carry 1/(1+t)
    let c1 = k.inv().unwrap();
    assert_eq!(sc(&rr("y"), &rr("y"), 1, 1).scale(&c1), e);
    assert_eq!(sc(&rr("x"), &rr("x"), 1, 1).scale(&-c1.clone()), f);
    assert_eq!(sc(&rr("x"), &rr("y"), 1, 1).scale(&c), h);
    assert_eq!(sc(&rr("e1"), &rr("x"), 0, 1).scale(&Q.int(4)), da);
    assert_eq!(sc(&rr("e1"), &rr("y"), 0, 1).scale(&Q.int(4)), db);

    let dalg = derivation_algebra(&a).unwrap();
    assert_eq!(dalg.dim, 5);
    assert_eq!(dalg.parity, vec![0, 0, 0, 1, 1]);
}

#[test]
fn derivation_algebras_are_simple() {
    for t in [2, -2, 3] {
        let a = build_dt_jordan(Q, &r(t, 1));
        assert_eq!(derivations(&a).dim(), 5);
        assert!(all_inner(&a).unwrap());
        assert_eq!(is_simple(&derivation_algebra(&a).unwrap()), Simplicity::Simple);
    }
    assert_eq!(derivations(&build_ground(Q)).dim(), 0);
    assert_eq!(inner_derivations(&build_ground(Q)).unwrap().dim(), 0);
}

#[test]
fn derivations_into_opposite_module() {
    for a in [build_dt_jordan(Q, &r(2, 1)), build_dt_lambda(Q, &r(2, 1), &Q.one()), build_k3(Q, &r(1, 1), &r(0, 1), &r(0, 1))] {
        let own = derivations(&a);
        let d = derivations_into(&a, &opposite_module(&regular(&a))).unwrap();
        // the identity A → A^op is odd, so parities swap
        assert_eq!(d.dim(), own.dim());
        assert_eq!(d.even_dim(), own.dim() - own.even_dim());
    }
    let a = build_dt_jordan(Q, &r(2, 1));
    assert_eq!(derivations_into(&a, &opposite_module(&regular(&a))).unwrap().dim(), 5);
    let other = build_dt_jordan(Q, &r(3, 1));
    assert!(derivations_into(&a, &regular(&other)).is_err());
}

#[test]
fn inner_derivations_need_jordan() {
    let a = build_dt(Q, &r(2, 1), &r(1, 3), &r(1, 5), &r(1, 7));
    assert!(matches!(inner_derivations(&a), Err(StructureError::NotJordan(_))));
}

#[test]
fn centers_nucleus_ideals() {
    let a = build_dt_lambda(Q, &r(2, 1), &Q.one());
    let z = commutative_center(&a);
    assert_eq!(z, Subspace::span(Q, 4, vec![a.unit().unwrap()]));
    let q1 = build_q(Q, 1);
    assert_eq!(nucleus(&q1).dim(), q1.dim);
    let k3 = build_k3(Q, &r(1, 1), &r(0, 1), &r(0, 1));
    assert!(nucleus(&k3).dim() < k3.dim);
    let dn = build_dual_numbers(Q, 0);
    assert_eq!(ideal_generated(&dn, &[dn.e("s")]).dim(), 1);
    assert_eq!(ideal_generated(&dn, &[dn.e("1")]).dim(), 2);
    assert!(matches!(is_simple(&dn), Simplicity::NotSimple(Some(_))));
    assert_eq!(is_simple(&build_zero(Q, vec![0, 1])), Simplicity::NotSimple(None));
}

#[test]
fn simple_algebras() {
    assert_eq!(is_simple(&build_k10(Q)), Simplicity::Simple);
    assert_eq!(is_simple(&build_dt_lambda(Q, &r(2, 1), &Q.one())), Simplicity::Simple);
    assert_eq!(is_simple(&build_mmn(Q, 1, 1)), Simplicity::Simple);
    // D_0 has the ideal spanned by e1, x, y
    assert!(matches!(is_simple(&build_dt_jordan(Q, &r(0, 1))), Simplicity::NotSimple(Some(_))));
}

#[test]
fn isomorphism_search() {
    let d = build_dt(Q, &r(-1, 1), &Q.one(), &r(0, 1), &r(0, 1));
    let m = build_mmn(Q, 1, 1);
    let iso = search_isomorphism_small(&d, &m).unwrap().unwrap();
    assert!(verify_isomorphism(&d, &m, &iso).passed);

    let a = build_dt(Q, &r(2, 1), &r(1, 2), &Q.one(), &r(0, 1));
    let b = build_dt(Q, &r(2, 1), &r(1, 2), &r(1, 2), &r(0, 1));
    // needs √2 over ℚ
    assert!(matches!(search_isomorphism_small(&a, &b), Err(StructureError::RequiresExtension(_))));
    let f7 = Field::prime(7).unwrap();
    let (a7, b7) = (
        build_dt(f7, &f7.int(2), &f7.ratio(1, 2), &f7.one(), &f7.zero()),
        build_dt(f7, &f7.int(2), &f7.ratio(1, 2), &f7.ratio(1, 2), &f7.zero()),
    );
    let iso = search_isomorphism_small(&a7, &b7).unwrap().unwrap();
    assert!(verify_isomorphism(&a7, &b7, &iso).passed);

    // different t are not isomorphic
    let c = build_dt_jordan(Q, &r(2, 1));
    let e = build_dt_jordan(Q, &r(3, 1));
    assert!(search_isomorphism_small(&c, &e).unwrap().is_none());
    // F[s]/(s²) versus F[C2]
    let dn = build_dual_numbers(Q, 0);
    let g = build_group_c2(Q);
    assert!(search_isomorphism_small(&dn, &g).unwrap().is_none());
    assert!(search_isomorphism_small(&g, &g).unwrap().is_some());
    assert!(matches!(search_isomorphism_small(&build_k10(Q), &build_k10(Q)), Err(StructureError::TooLarge(10))));
}

#[test]
fn homomorphism_failures_have_witnesses() {
    let a = build_dt_jordan(Q, &r(2, 1));
    let id = identity_embedding(&a);
    assert!(verify_isomorphism(&a, &a, &id).passed);
    let bad = id.scale(&Q.int(2));
    let rep = verify_homomorphism(&a, &a, &bad);
    assert!(!rep.passed);
    assert!(rep.witness.is_some());
}

#[test]
fn kronecker_round_trip() {
    for (d, z) in [build_dt_lambda(Q, &r(2, 1), &Q.one()), build_q(Q, 2)]
        .into_iter()
        .flat_map(|d| [build_dual_numbers(Q, 0), build_dual_numbers(Q, 1), build_group_c2(Q), build_ground(Q)].map(|z| (d.clone(), z)))
    {
        let u = graded_tensor(&z, &d).unwrap();
        let one = z.unit().unwrap();
        let rows = (0..d.dim)
            .map(|j| {
                let mut v = u.zero();
                for i in 0..z.dim {
                    v[i * d.dim + j] = one[i].clone();
                }
                v
            })
            .collect();
        let embed = Matrix::from_rows(Q, u.dim, rows);
        let k = kronecker_factor(&u, &embed, &d).unwrap();
        assert_eq!(k.z.dim, z.dim);
        assert_eq!(k.z.parity.iter().filter(|&&p| p == 1).count(), z.parity.iter().filter(|&&p| p == 1).count());
        if d.index_of("e1").is_some() {
            assert_eq!(k.peirce_variant_differs, Some(false));
        }
        if z.parity.iter().all(|&p| p == 0) {
            assert!(search_isomorphism_small(&k.z, &z).unwrap().is_some());
        }
    }
    let d = build_dt_lambda(Q, &r(2, 1), &Q.one());
    // a non-unital embedding is rejected
    let u = graded_tensor(&build_ground(Q), &d).unwrap();
    let zero = Matrix::zeros(Q, d.dim, u.dim);
    assert!(kronecker_factor(&u, &zero, &d).is_err());
}

#[test]
fn k10_kronecker_instance() {
    let k = build_k10(Q);
    for z in [build_dual_numbers(Q, 0), build_dual_numbers(Q, 1), build_group_c2(Q)] {
        let u = graded_tensor(&z, &k).unwrap();
        assert!(u.is_supercommutative(), "{}", u.name);
        assert!(check_jordan(&u).passed, "{}", u.name);
        let embed = unit_tensor_embedding(&z, &k).unwrap();
        let f = kronecker_factor(&u, &embed, &k).unwrap();
        assert_eq!(f.z.dim, z.dim);
        assert!(f.z.is_supercommutative());
        if z.parity.iter().all(|&p| p == 0) {
            assert!(search_isomorphism_small(&f.z, &z).unwrap().is_some());
        }
    }
}
