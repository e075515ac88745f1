use std::path::PathBuf;
use std::process::{Command, Output};

fn ncj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncj")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let o = ncj(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("ncj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

#[test]
fn identity_checks_and_exit_codes() {
    let o = ncj(&["check-identity", "ncj", "--catalog", "Dt(2,1,0,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));

    let (code, v) = json(&["check-identity", "jordan", "--catalog", "Dt(2,1,0,0)"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    assert!(v["witness"]["labels"].is_array());

    let (code, v) = json(&["check-identity", "jordan", "--catalog", "Dt(2,1/2,0,0)"]);
    assert_eq!((code, v["passed"].clone()), (0, true.into()));
    assert_eq!(ncj(&["check-identity", "flexible", "--catalog", "K3(1,0,0)"]).status.code(), Some(0));
    assert_eq!(ncj(&["check-identity", "poisson", "--catalog", "Dt(2,1,0,0)"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ncj(&["simple"]).status.code(), Some(2));
    assert_eq!(ncj(&["simple", "--catalog", "Nope(1)"]).status.code(), Some(2));
    assert_eq!(ncj(&["simple", "--catalog", "K10", "--field", "p4"]).status.code(), Some(2));
    assert_eq!(ncj(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncj(&["peirce", "--catalog", "Q(2)", "--idempotent", "e33"]).status.code(), Some(2));
}

#[test]
fn structure_commands() {
    let (code, v) = json(&["simple", "--catalog", "K10"]);
    assert_eq!((code, v["simple"].clone()), (0, true.into()));
    let (code, v) = json(&["simple", "--catalog", "Hull(Dt(2,1,0,0))"]);
    assert_eq!(code, 1);
    assert!(v["ideal"].is_array());

    let (_, v) = json(&["derivations", "--catalog", "Dt(2,1/2,0,0)"]);
    assert_eq!((v["dim"].as_u64(), v["even"].as_u64(), v["odd"].as_u64()), (Some(5), Some(3), Some(2)));
    let (code, v) = json(&["inner", "--catalog", "Dt(2,1/2,0,0)"]);
    assert_eq!((code, v["all_inner"].clone()), (0, true.into()));
    assert_eq!(ncj(&["inner", "--catalog", "Dt(2,1,0,0)"]).status.code(), Some(2));

    let (_, v) = json(&["derivations", "--module", "Op(Reg(Dt(2,1/2,0,0)))"]);
    assert_eq!((v["dim"].as_u64(), v["even"].as_u64()), (Some(5), Some(2)));

    let (_, v) = json(&["commutant", "--catalog", "Q(2)"]);
    assert_eq!(v["dim"], 1);
    let (_, v) = json(&["nucleus", "--catalog", "Q(2)"]);
    assert_eq!(v["dim"], 8);
    let (_, v) = json(&["ideals", "--catalog", "Hull(K3(1,0,0))", "--generator", "e"]);
    assert_eq!(v["ideals"][0]["dim"], 3);
}

#[test]
fn peirce_and_eigenspaces() {
    let (code, v) = json(&["peirce", "--catalog", "Q(2)", "--idempotent", "e11", "--idempotent", "e22"]);
    assert_eq!(code, 0);
    assert_eq!(v["spaces"]["U12"].as_array().unwrap().len(), 4);
    let (_, v) = json(&["eigenspace", "--catalog", "Dt(2,1,0,0)", "--idempotent", "e1", "--lambda", "1"]);
    assert_eq!(v["basis"].as_array().unwrap().len(), 1);
}

#[test]
fn constructions_save_and_reload() {
    let p = scratch("mut.json");
    let ps = p.to_str().unwrap();
    assert_eq!(ncj(&["mutate", "--catalog", "Dt(2,1/2,0,0)", "--lambda", "3", "--out", ps]).status.code(), Some(0));
    assert_eq!(ncj(&["check-identity", "ncj", "--file", ps]).status.code(), Some(0));
    let (code, v) = json(&["isomorphic", "--file", ps, "--other", "Mut(Dt(2,1/2,0,0);3)"]);
    assert_eq!((code, v["isomorphic"].clone()), (0, true.into()));

    let (_, v) = json(&["symmetrize", "--catalog", "Dt(2,1,0,0)"]);
    assert_eq!(v["algebra"]["dim"], 4);
    let (_, v) = json(&["tensor", "--catalog", "Dual", "--other", "Dt(2,1,0,0)"]);
    assert_eq!(v["algebra"]["dim"], 8);
    let (_, v) = json(&["hull", "--catalog", "K3(1,0,0)"]);
    assert_eq!(v["algebra"]["dim"], 4);
    let (_, v) = json(&["sne", "--module", "Reg(Dt(2,1,0,0))"]);
    assert_eq!(v["algebra"]["dim"], 8);
    std::fs::remove_file(p).unwrap();
}

#[test]
fn module_commands() {
    let (code, v) = json(&["module-check", "--module", "Reg(K10)"]);
    assert_eq!((code, v["routes_agree"].clone()), (0, true.into()));
    let (code, v) = json(&["irreducible", "--module", "Reg(K10)"]);
    assert_eq!((code, v["verdict"].is_string()), (0, true));
    let (code, v) = json(&["irreducible", "--module", "Sum(Reg(Q(1));Reg(Q(1)))"]);
    assert_eq!(code, 1);
    assert!(v["invariant_subspace"].is_array());
    let (_, v) = json(&["mod-gen", "--module", "Reg(Dt(2,1,0,0))", "--vector", "x"]);
    assert_eq!(v["dim"], 4);
    let (code, v) = json(&["decompose", "--module", "Sum(Reg(K10);Op(Reg(K10)))"]);
    assert_eq!(code, 0);
    let kinds: Vec<_> = v["summands"].as_array().unwrap().iter().map(|s| s["isomorphic_to"].as_str().unwrap().to_string()).collect();
    assert_eq!(kinds, ["Reg", "Reg^op"]);
}

#[test]
fn isomorphism_and_kronecker() {
    let (code, _) = json(&["isomorphic", "--catalog", "Dt(-1,1,0,0)", "--other", "M(1,1)"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["isomorphic", "--catalog", "Dt(2,1/2,1,0)", "--other", "Dt(2,1/2,1/2,0)"]);
    assert_eq!(code, 1);
    assert!(v["reason"].as_str().unwrap().contains("extension"));
    let (code, _) = json(&["isomorphic", "--catalog", "Dt(2,1/2,1,0)", "--other", "Dt(2,1/2,1/2,0)", "--field", "p7"]);
    assert_eq!(code, 0);

    let (code, v) = json(&["kronecker", "--catalog", "Dual", "--other", "Dt(2,1,0,0)"]);
    assert_eq!((code, v["z_dim"].as_u64()), (0, Some(2)));
    let (code, v) = json(&["kronecker", "--catalog", "Dt(2,1,0,0)", "--other", "F", "--embed", "e1 + e2"]);
    assert_eq!((code, v["z_dim"].as_u64()), (0, Some(4)));
    let (code, _) = json(&["kronecker", "--catalog", "Dt(2,1,0,0)", "--other", "F", "--embed", "e1"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_filtered() {
    let (code, v) = json(&["verify", "--filter", "c01"]);
    assert_eq!(code, 0);
    assert!(v["passed"].as_u64().unwrap() > 0);
    assert_eq!(v["failed"], 0);
    let o = ncj(&["verify", "--filter", "c13"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("XFAIL"));
}
