use ncj::algebra::{format_combination, parse_combination, OperatorKind, ProductKind, SuperAlgebra, TableBuilder};
use ncj::catalog::*;
use ncj::constructions::*;
use ncj::field::{Field, Scalar};
use ncj::identities::*;
use ncj::io::*;
use ncj::linalg::{nullspace, Matrix, Subspace};
use ncj::module::regular;
use ncj::peirce::peirce_decompose;
use ncj::representations::{check_both_routes, submodule_generated};
use ncj::structure::*;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

fn rat() -> impl Strategy<Value = Scalar> {
    small().prop_map(|(n, d)| Q.ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Scalar> {
    rat().prop_filter("nonzero", |s| !s.is_zero())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Q), prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_map(|p| Field::prime(p).unwrap())]
}

fn scalar_in(f: Field) -> impl Strategy<Value = Scalar> {
    small().prop_filter_map("denominator vanishes", move |(n, d)| f.try_ratio(n, d).ok())
}

fn matrix(f: Field) -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(scalar_in(f), c), r).prop_map(move |rows| Matrix::from_rows(f, c, rows))
    })
}

fn dt() -> impl Strategy<Value = SuperAlgebra> {
    (nonzero_rat(), rat(), rat(), rat()).prop_map(|(t, a, b, g)| build_dt(Q, &t, &a, &b, &g))
}

/// An arbitrary even 2-dimensional algebra; most are not flexible.
fn random_table() -> impl Strategy<Value = SuperAlgebra> {
    prop::collection::vec(-2i64..=2, 8).prop_map(|c| {
        let mut tb = TableBuilder::new(Q, 2);
        for (n, x) in c.iter().enumerate() {
            tb.add(n / 4, (n / 2) % 2, n % 2, Q.int(*x));
        }
        tb.build("T", vec![0, 0], vec!["a".into(), "b".into()]).unwrap()
    })
}

fn vector(a: &SuperAlgebra) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(rat(), a.dim)
}

fn reduced(s: &Scalar) -> bool {
    match s {
        Scalar::Q(q) => q.numer().gcd(q.denom()).is_one() && q.denom().is_positive(),
        Scalar::F { v, p } => v < p,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_stays_canonical(f in field(), x in small(), y in small()) {
        let (Ok(a), Ok(b)) = (f.try_ratio(x.0, x.1), f.try_ratio(y.0, y.1)) else { return Ok(()) };
        for s in [&a + &b, &a - &b, &a * &b, -a.clone()] {
            prop_assert!(reduced(&s));
        }
        if let Some(q) = a.div(&b) {
            prop_assert!(reduced(&q));
            prop_assert_eq!(&q * &b, a.clone());
        }
        prop_assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in field().prop_flat_map(matrix)) {
        // row vectors: the kernel is the left nullspace, of dimension rows − rank
        prop_assert_eq!(nullspace(&m).dim() + m.rank(), m.rows);
    }

    #[test]
    fn echelon_form_is_idempotent(m in field().prop_flat_map(matrix)) {
        let (r, piv) = m.rref();
        let (r2, piv2) = r.rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
        let s = Subspace::span(m.field, m.cols, m.row_vecs());
        prop_assert_eq!(Subspace::span(m.field, m.cols, s.vectors()), s);
    }

    #[test]
    fn mutations_compose(a in dt(), l in rat(), m in rat()) {
        prop_assert_eq!(mutate(&mutate(&a, &l), &m), mutate(&a, &mutation_compose(&l, &m)));
    }

    #[test]
    fn mutation_keeps_ncj(a in dt(), l in rat()) {
        prop_assert!(check_noncommutative_jordan(&mutate(&a, &l)).passed);
    }

    #[test]
    fn symmetrized_dt_is_jordan_dt(t in nonzero_rat(), a in rat(), b in rat(), g in rat()) {
        let j = build_dt_jordan(Q, &t);
        prop_assert_eq!(symmetrize(&build_dt(Q, &t, &a, &b, &g)), j);
    }

    #[test]
    fn ncj_equals_flexible_and_jordan_plus(a in dt(), l in rat(), r in random_table()) {
        for x in [a.clone(), mutate(&a, &l), r] {
            let lhs = check_noncommutative_jordan(&x).passed;
            let rhs = check_flexible(&x).passed && check_jordan(&symmetrize(&x)).passed;
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(check_flex1(&x).passed && check_flex2(&x).passed, check_flexible(&x).passed);
        }
    }

    #[test]
    fn two_products_round_trip(a in dt()) {
        let (c, b) = two_products(&a);
        prop_assert_eq!(from_two_products(&c, &b, "x"), a.clone());
        prop_assert!(check_generic_poisson(&c, &b).passed);
    }

    #[test]
    fn operator_coherence((a, u, v) in dt().prop_flat_map(|a| { let (x, y) = (vector(&a), vector(&a)); (Just(a), x, y) })) {
        // homogeneous parts only: L carries a parity sign
        let [v0, v1] = a.split(&v);
        for w in [v0, v1] {
            let rp = a.operator(&w, OperatorKind::Rplus);
            let hp = a.operator(&w, OperatorKind::R).add(&a.operator(&w, OperatorKind::L)).scale(&Q.half());
            prop_assert_eq!(&rp, &hp);
            prop_assert_eq!(rp.apply(&u), a.derived_product(&u, &w, ProductKind::Circle));
        }
    }

    #[test]
    fn grading_respected(a in dt(), l in rat()) {
        let m = mutate(&a, &l);
        for i in 0..m.dim {
            for j in 0..m.dim {
                let p = m.mul(&m.basis(i), &m.basis(j));
                prop_assert!(ncj::linalg::is_zero_vec(&p) || m.parity_of(&p) == Some(m.parity[i] ^ m.parity[j]));
            }
        }
    }

    #[test]
    fn parse_format_round_trip((a, v) in dt().prop_flat_map(|a| { let v = vector(&a); (Just(a), v) })) {
        let s = a.format_vec(&v);
        prop_assert_eq!(a.parse_vec(&s).unwrap(), v.clone());
        prop_assert_eq!(parse_combination(Q, &a.basis_names, &format_combination(&a.basis_names, &v)).unwrap(), v);
    }

    #[test]
    fn json_round_trip(f in field(), t in 1i64..5, x in small(), y in small()) {
        let sc = |(n, d): (i64, i64)| f.try_ratio(n, d).unwrap_or(f.zero());
        for a in [build_dt(f, &f.int(t), &sc(x), &sc(y), &f.zero()), build_k3(f, &sc(x), &sc(y), &f.one()), mutate(&build_q(f, 2), &sc(x))] {
            let b = algebra_from_json(&algebra_to_json(&a)).unwrap();
            prop_assert_eq!(&b, &a);
            prop_assert_eq!(&b.basis_names, &a.basis_names);
        }
    }

    #[test]
    fn peirce_projections_are_complete(t in nonzero_rat(), l in rat()) {
        let a = mutate(&build_dt_jordan(Q, &t), &l);
        let pd = peirce_decompose(&a, &a.e("e1")).unwrap();
        let n = a.dim;
        let (p0, p1, p2) = (pd.p(0), pd.p(1), pd.p(2));
        prop_assert_eq!(p0.add(p1).add(p2), Matrix::identity(Q, n));
        let ps = [p0, p1, p2];
        for (i, x) in ps.iter().enumerate() {
            for (j, y) in ps.iter().enumerate() {
                let want = if i == j { (*x).clone() } else { Matrix::zeros(Q, n, n) };
                prop_assert_eq!(x.mul(y), want);
            }
        }
    }

    #[test]
    fn inner_derivations_are_derivations(t in nonzero_rat()) {
        let j = build_dt_jordan(Q, &t);
        let der = derivations(&j);
        let inner = inner_derivations(&j).unwrap();
        let n = j.dim * j.dim;
        let flat = |ds: &DerivationSpace| Subspace::span(Q, n, ds.basis.iter().map(|m| m.row_vecs().concat()).collect());
        let (d, i) = (flat(&der), flat(&inner));
        prop_assert!(d.contains_subspace(&i).unwrap());
        // Der is closed under the supercommutator
        for (x, px) in der.basis.iter().zip(&der.parity) {
            for (y, py) in der.basis.iter().zip(&der.parity) {
                prop_assert!(d.contains(&x.commutator(y, px & py == 1).row_vecs().concat()));
            }
        }
    }

    #[test]
    fn simple_means_every_basis_vector_generates(a in dt()) {
        if is_simple(&a) == Simplicity::Simple {
            for i in 0..a.dim {
                prop_assert_eq!(ideal_generated(&a, &[a.basis(i)]).dim(), a.dim);
            }
        }
    }

    #[test]
    fn ideals_survive_mutation(a in dt(), l in prop::sample::select(vec![0i64, 2, 3]), i in 0usize..4) {
        let m = mutate(&a, &Q.int(l));
        let x = ideal_generated(&a, &[a.basis(i)]);
        for b in 0..m.dim {
            prop_assert!(x.is_invariant(&m.op_basis(b, OperatorKind::R)));
            prop_assert!(x.is_invariant(&m.op_basis(b, OperatorKind::L)));
        }
    }

    #[test]
    fn generated_submodule_is_least_fixed_point((a, v) in dt().prop_flat_map(|a| { let v = vector(&a); (Just(a), v) })) {
        let m = regular(&a);
        let s = submodule_generated(&m, &v);
        prop_assert!(s.contains(&v));
        for op in m.action_operators() {
            prop_assert!(s.is_invariant(&op));
        }
    }

    #[test]
    fn split_null_extension_restricts_to_a(a in dt()) {
        let m = regular(&a);
        let e = split_null_extension(&a, &m);
        for i in 0..a.dim {
            for j in 0..a.dim {
                let p = e.mul(&e.basis(i), &e.basis(j));
                prop_assert!(p[a.dim..].iter().all(Scalar::is_zero));
                prop_assert_eq!(&p[..a.dim], &a.mul(&a.basis(i), &a.basis(j))[..]);
            }
        }
        prop_assert!(check_noncommutative_jordan(&e).passed);
    }

    #[test]
    fn tensor_is_associative_up_to_reindexing(l in rat()) {
        let (a, b, c) = (build_dual_numbers(Q, 1), build_group_c2(Q), mutate(&build_q(Q, 1), &l));
        let left = graded_tensor(&graded_tensor(&a, &b).unwrap(), &c).unwrap();
        let right = graded_tensor(&a, &graded_tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.dim, right.dim);
        // row-major indexing makes ((i,j),k) and (i,(j,k)) the same index
        prop_assert_eq!(left.constants(), right.constants());
        prop_assert_eq!(&left.parity, &right.parity);
    }

    #[test]
    fn module_routes_agree(a in rat(), b in rat(), g in rat(), nc in any::<bool>()) {
        let m = build_vmodule(Q, &a, &b, &g, nc);
        let (_, agree) = check_both_routes(&m);
        prop_assert!(agree);
    }
}
