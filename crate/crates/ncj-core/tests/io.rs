use ncj::catalog::*;
use ncj::field::Field;
use ncj::io::*;

const Q: Field = Field::Rational;

#[test]
fn algebra_round_trip() {
    let f7 = Field::prime(7).unwrap();
    for a in [
        build_dt(Q, &Q.int(2), &Q.one(), &Q.zero(), &Q.zero()),
        build_dt(Q, &Q.int(3), &Q.ratio(1, 3), &Q.ratio(-2, 5), &Q.ratio(1, 7)),
        build_k10(Q),
        build_q(f7, 2),
        build_zero(Q, vec![0, 1]),
    ] {
        let s = algebra_to_json(&a);
        assert!(!s.contains('.'), "no floats: {s}");
        let b = algebra_from_json(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis_names, b.basis_names);
        assert_eq!(a.name, b.name);
    }
}

#[test]
fn module_round_trip() {
    for name in ["Reg(Dt(2,1,0,0))", "Op(Reg(Q(1)))", "VmodNC(1,0,0)", "Sum(Reg(Dt(2,1,0,0));Op(Reg(Dt(2,1,0,0))))"] {
        let m = module_by_name(name, Q).unwrap();
        let back = module_from_json(&module_to_json(&m)).unwrap();
        assert_eq!(m, back, "{name}");
    }
}

#[test]
fn files_on_disk() {
    let dir = std::env::temp_dir().join(format!("ncj-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = build_k3(Q, &Q.one(), &Q.zero(), &Q.zero());
    let p = dir.join("k3.json");
    save_algebra(&a, &p).unwrap();
    assert_eq!(load_algebra(&p).unwrap(), a);
    let m = module_by_name("Reg(K3(1,0,0))", Q).unwrap();
    let p = dir.join("m.json");
    save_module(&m, &p).unwrap();
    assert_eq!(load_module(&p).unwrap(), m);
    assert!(matches!(load_algebra(dir.join("missing.json")), Err(IoError::Read { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_reference_resolves() {
    let s = r#"{"name": "R", "algebra": "K10", "mdim": 0, "mparity": []}"#;
    let m = module_from_json(s).unwrap();
    assert_eq!(m.algebra, build_k10(Q));
    let s = r#"{"name": "R", "field": "p3", "algebra": "K9", "mdim": 0, "mparity": []}"#;
    assert_eq!(module_from_json(s).unwrap().algebra.dim, 9);
}

#[test]
fn grading_violation_names_entry() {
    let s = r#"{"name": "bad", "field": "q", "dim": 2, "parity": [0, 1],
        "products": [{"i": 0, "j": 0, "coeffs": {"0": "1"}}, {"i": 0, "j": 1, "coeffs": {"0": "2"}}]}"#;
    match algebra_from_json(s) {
        Err(IoError::Grading { location, i, j, k }) => {
            assert_eq!((i, j, k), (0, 1, 0));
            assert_eq!(location, "products[1].coeffs.0");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors_have_locations() {
    let s = "{\n  \"name\": \"x\",\n  \"field\": \"q\",\n  \"dim\": 1,\n  \"parity\": [0],\n  \"products\": [ {\"i\": 0 \"j\": 0} ]\n}";
    match algebra_from_json(s) {
        Err(IoError::Parse { line, .. }) => assert_eq!(line, 6),
        other => panic!("{other:?}"),
    }
    let s = r#"{"name": "x", "field": "q", "dim": 1, "parity": [0], "products": [{"i": 0, "j": 0, "coeffs": {"0": "1/0"}}]}"#;
    assert!(matches!(algebra_from_json(s), Err(IoError::Invalid { location, .. }) if location == "products[0].coeffs.0"));
    let s = r#"{"name": "x", "field": "q", "dim": 1, "parity": [0], "products": [{"i": 3, "j": 0, "coeffs": {}}]}"#;
    assert!(matches!(algebra_from_json(s), Err(IoError::Invalid { location, .. }) if location == "products[0]"));
    let s = r#"{"name": "x", "field": "p2", "dim": 1, "parity": [0]}"#;
    assert!(matches!(algebra_from_json(s), Err(IoError::Field(_))));
    let s = r#"{"name": "x", "field": "q", "dim": 1, "parity": [0], "extra": 1}"#;
    assert!(matches!(algebra_from_json(s), Err(IoError::Parse { .. })));
}

#[test]
fn two_product_module_file() {
    // Reg(Q(1)) given through R⁺ and R⁻
    let m = module_by_name("Reg(Q(1))", Q).unwrap();
    let mut rplus = Vec::new();
    let mut rminus = Vec::new();
    for a in 0..m.algebra.dim {
        let (p, n) = (m.rplus_op(a), m.rminus_op(a));
        for i in 0..m.mdim {
            let row = |mat: &ncj::linalg::Matrix| {
                (0..m.mdim).filter(|&j| !mat.get(i, j).is_zero()).map(|j| (j, mat.get(i, j).to_string())).collect()
            };
            rplus.push(ActionEntry { a, m: i, coeffs: row(&p) });
            rminus.push(ActionEntry { a, m: i, coeffs: row(&n) });
        }
    }
    let file = ModuleFile {
        name: "Reg".into(),
        field: None,
        algebra: AlgebraRef::Catalog("Q(1)".into()),
        mdim: m.mdim,
        mparity: m.mparity.clone(),
        basis_names: vec![],
        left: None,
        right: None,
        rplus: Some(rplus),
        rminus: Some(rminus),
    };
    let back = file.to_module().unwrap();
    assert_eq!(back, m);
}
