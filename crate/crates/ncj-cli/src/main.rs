use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncj::algebra::{format_combination, SuperAlgebra};
use ncj::catalog::{by_name, module_by_name};
use ncj::constructions::{graded_tensor, mutate, split_null_extension, symmetrize, unit_tensor_embedding, unital_hull};
use ncj::field::Field;
use ncj::identities::{check_flexible, check_generic_poisson, check_jordan, check_noncommutative_jordan, two_products, CheckReport};
use ncj::io::{load_algebra, load_module, save_algebra, AlgebraFile};
use ncj::linalg::{Matrix, Subspace};
use ncj::module::{opposite_module, regular, SuperBimodule};
use ncj::peirce::{eigenspace_u1, peirce_multi, verify_peirce_relations, PeirceDecomposition};
use ncj::representations::{check_both_routes, decompose, is_abs_irreducible, modules_isomorphic, submodule_generated, Irreducibility};
use ncj::structure::{
    all_inner, commutative_center, derivations, derivations_into, ideal_generated, inner_derivations, is_simple, kronecker_factor,
    nucleus, search_isomorphism_small, supercommutant, Simplicity,
};
use ncj::suite::{manifest, run_suite};

#[derive(Parser)]
#[command(name = "ncj", version, about = "Exact computations with noncommutative Jordan superalgebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    src: Source,
}

#[derive(Args)]
struct Source {
    /// Catalog algebra, e.g. "Dt(2,1,0,0)", "K10", "Mut(Q(2);3)".
    #[arg(long, global = true, conflicts_with = "file")]
    catalog: Option<String>,
    /// Algebra file (JSON).
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Ground field: q or p<N>.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Restrict the verification battery to matching entries.
    #[arg(long, global = true)]
    filter: Option<String>,
}

#[derive(Args)]
struct ModuleSource {
    /// Catalog module, e.g. "Reg(Dt(2,1,0,0))", "Sum(Reg(K10);Op(Reg(K10)))", "VmodNC(1,0,0)".
    #[arg(long, conflicts_with = "module_file")]
    module: Option<String>,
    /// Module file (JSON).
    #[arg(long)]
    module_file: Option<PathBuf>,
}

#[derive(Args)]
struct OtherSource {
    /// Second catalog algebra.
    #[arg(long, conflicts_with = "other_file")]
    other: Option<String>,
    /// Second algebra file.
    #[arg(long)]
    other_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    Flexible,
    Jordan,
    Ncj,
    Poisson,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the multiplication table (or save it with --out).
    Show {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a defining identity of the algebra.
    CheckIdentity { identity: Identity },
    /// Peirce decomposition relative to orthogonal idempotents, with the Peirce relations.
    Peirce {
        #[arg(long = "idempotent", required = true)]
        idempotents: Vec<String>,
    },
    /// L_e-eigenspace of U1 for an idempotent e.
    Eigenspace {
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        lambda: String,
    },
    /// The mutation A^(λ).
    Mutate {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The symmetrized algebra A(+).
    Symmetrize {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graded tensor product A ⊗ B.
    Tensor {
        #[command(flatten)]
        other: OtherSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unital hull A ⊕ F·1.
    Hull {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split null extension A ⋉ M.
    Sne {
        #[command(flatten)]
        module: ModuleSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a module is a noncommutative Jordan bimodule (both routes).
    ModuleCheck {
        #[command(flatten)]
        module: ModuleSource,
    },
    /// Submodule generated by a vector.
    ModGen {
        #[command(flatten)]
        module: ModuleSource,
        #[arg(long)]
        vector: String,
    },
    /// Absolute irreducibility of a module.
    Irreducible {
        #[command(flatten)]
        module: ModuleSource,
    },
    /// Split a module into summands, comparing them with Reg and Reg^op.
    Decompose {
        #[command(flatten)]
        module: ModuleSource,
    },
    /// Search an isomorphism between two small algebras.
    Isomorphic {
        #[command(flatten)]
        other: OtherSource,
    },
    /// Ideals generated by the given elements (default: each basis element).
    Ideals {
        #[arg(long = "generator")]
        generators: Vec<String>,
    },
    /// Simplicity (absolute, via the multiplication envelope).
    Simple,
    /// Supercommutant of the given elements (default: the whole algebra, i.e. the center).
    Commutant {
        #[arg(long = "element")]
        elements: Vec<String>,
    },
    /// Nucleus.
    Nucleus,
    /// Derivations of A, or into a module with --module.
    Derivations {
        #[command(flatten)]
        module: ModuleSource,
    },
    /// Inner derivations of a Jordan superalgebra.
    Inner,
    /// Kronecker factorization U ≅ Z ⊗ D. With --embed the algebra is U and --embed lists the
    /// images of D's basis ("u1; u2; ..."); without it the algebra is Z and U = Z ⊗ D.
    Kronecker {
        #[command(flatten)]
        other: OtherSource,
        #[arg(long)]
        embed: Option<String>,
    },
    /// Run the verification battery.
    Verify,
}

/// A command's result: human text, a JSON fragment and whether the check holds.
struct Report {
    ok: bool,
    text: String,
    json: Value,
}

type Res = Result<Report, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.src.json;
    match run(&cli) {
        Ok(r) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&r.json).unwrap());
            } else {
                print!("{}", r.text);
                if !r.text.ends_with('\n') {
                    println!();
                }
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn field(src: &Source) -> Result<Field, String> {
    Field::parse(&src.field).map_err(|e| e.to_string())
}

fn algebra(src: &Source) -> Result<SuperAlgebra, String> {
    match (&src.catalog, &src.file) {
        (Some(n), _) => by_name(n, field(src)?).map_err(|e| e.to_string()),
        (None, Some(p)) => load_algebra(p).map_err(|e| e.to_string()),
        (None, None) => Err("give --catalog NAME or --file PATH".into()),
    }
}

fn other_algebra(src: &Source, o: &OtherSource) -> Result<SuperAlgebra, String> {
    match (&o.other, &o.other_file) {
        (Some(n), _) => by_name(n, field(src)?).map_err(|e| e.to_string()),
        (None, Some(p)) => load_algebra(p).map_err(|e| e.to_string()),
        (None, None) => Err("give --other NAME or --other-file PATH".into()),
    }
}

fn module(src: &Source, m: &ModuleSource) -> Result<Option<SuperBimodule>, String> {
    match (&m.module, &m.module_file) {
        (Some(n), _) => module_by_name(n, field(src)?).map(Some).map_err(|e| e.to_string()),
        (None, Some(p)) => load_module(p).map(Some).map_err(|e| e.to_string()),
        (None, None) => Ok(None),
    }
}

fn need_module(src: &Source, m: &ModuleSource) -> Result<SuperBimodule, String> {
    module(src, m)?.ok_or_else(|| "give --module NAME or --module-file PATH".into())
}

fn check(cmd: &str, r: &CheckReport) -> Report {
    let witness = r.witness.as_ref().map(|w| json!({ "indices": w.indices, "labels": w.labels, "residual": w.residual.iter().map(|s| s.to_string()).collect::<Vec<_>>() }));
    Report {
        ok: r.passed,
        text: format!("{r}\n"),
        json: json!({ "command": cmd, "check": r.identity_name, "passed": r.passed, "witness": witness }),
    }
}

fn vecs(names: &[String], s: &Subspace) -> Vec<String> {
    s.vectors().iter().map(|v| format_combination(names, v)).collect()
}

fn span_text(label: &str, names: &[String], s: &Subspace) -> String {
    format!("{label}: dim {} ⟨{}⟩\n", s.dim(), vecs(names, s).join(", "))
}

fn algebra_out(cmd: &str, a: &SuperAlgebra, out: &Option<PathBuf>) -> Res {
    if let Some(p) = out {
        save_algebra(a, p).map_err(|e| e.to_string())?;
    }
    let file: Value = serde_json::to_value(AlgebraFile::from_algebra(a)).unwrap();
    Ok(Report { ok: true, text: format!("{a:?}"), json: json!({ "command": cmd, "algebra": file }) })
}

fn peirce_text(names: &[String], pd: &PeirceDecomposition) -> (String, Value) {
    let mut text = String::new();
    let mut j = serde_json::Map::new();
    for (key, s) in &pd.components {
        if s.dim() > 0 {
            let label = key.to_string();
            text.push_str(&span_text(&label, names, s));
            j.insert(label, json!(vecs(names, s)));
        }
    }
    (text, Value::Object(j))
}

fn run(cli: &Cli) -> Res {
    let src = &cli.src;
    match &cli.cmd {
        Cmd::Show { out } => algebra_out("show", &algebra(src)?, out),
        Cmd::CheckIdentity { identity } => {
            let a = algebra(src)?;
            let r = match identity {
                Identity::Flexible => check_flexible(&a),
                Identity::Jordan => check_jordan(&a),
                Identity::Ncj => check_noncommutative_jordan(&a),
                Identity::Poisson => {
                    let (c, b) = two_products(&a);
                    check_generic_poisson(&c, &b)
                }
            };
            Ok(check("check-identity", &r))
        }
        Cmd::Peirce { idempotents } => {
            let a = algebra(src)?;
            let es = idempotents.iter().map(|s| a.parse_vec(s)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
            let pd = peirce_multi(&a, &es).map_err(|e| e.to_string())?;
            let (mut text, spaces) = peirce_text(&a.basis_names, &pd);
            let reps: Vec<CheckReport> = es.iter().map(|e| verify_peirce_relations(&a, e)).collect();
            let r = CheckReport::all("Peirce relations", reps);
            let c = check("peirce", &r);
            text.push_str(&c.text);
            let mut j = c.json;
            j["spaces"] = spaces;
            Ok(Report { ok: c.ok, text, json: j })
        }
        Cmd::Eigenspace { idempotent, lambda } => {
            let a = algebra(src)?;
            let e = a.parse_vec(idempotent).map_err(|e| e.to_string())?;
            let l = a.field.parse_scalar(lambda).map_err(|e| e.to_string())?;
            let s = eigenspace_u1(&a, &e, &l).map_err(|e| e.to_string())?;
            Ok(Report {
                ok: true,
                text: span_text(&format!("U1 eigenspace at {l}"), &a.basis_names, &s),
                json: json!({ "command": "eigenspace", "lambda": l.to_string(), "basis": vecs(&a.basis_names, &s) }),
            })
        }
        Cmd::Mutate { lambda, out } => {
            let a = algebra(src)?;
            let l = a.field.parse_scalar(lambda).map_err(|e| e.to_string())?;
            algebra_out("mutate", &mutate(&a, &l), out)
        }
        Cmd::Symmetrize { out } => algebra_out("symmetrize", &symmetrize(&algebra(src)?), out),
        Cmd::Tensor { other, out } => {
            let t = graded_tensor(&algebra(src)?, &other_algebra(src, other)?).map_err(|e| e.to_string())?;
            algebra_out("tensor", &t, out)
        }
        Cmd::Hull { out } => algebra_out("hull", &unital_hull(&algebra(src)?), out),
        Cmd::Sne { module: m, out } => {
            let m = need_module(src, m)?;
            algebra_out("sne", &split_null_extension(&m.algebra, &m), out)
        }
        Cmd::ModuleCheck { module: m } => {
            let m = need_module(src, m)?;
            let (r, agree) = check_both_routes(&m);
            let mut c = check("module-check", &r);
            c.json["routes_agree"] = json!(agree);
            if !agree {
                c.ok = false;
                c.text.push_str("FAIL the split-null-extension and R+/R- routes disagree\n");
            }
            Ok(c)
        }
        Cmd::ModGen { module: m, vector } => {
            let m = need_module(src, m)?;
            let v = m.parse_vec(vector).map_err(|e| e.to_string())?;
            let s = submodule_generated(&m, &v);
            Ok(Report {
                ok: true,
                text: span_text("generated submodule", &m.basis_names, &s),
                json: json!({ "command": "mod-gen", "dim": s.dim(), "basis": vecs(&m.basis_names, &s) }),
            })
        }
        Cmd::Irreducible { module: m } => {
            let m = need_module(src, m)?;
            let v = is_abs_irreducible(&m);
            let mut j = json!({ "command": "irreducible", "verdict": v.to_string() });
            let mut text = format!("{} {v}\n", if v == Irreducibility::Irreducible { "PASS" } else { "FAIL" });
            if let Irreducibility::Reducible(s) = &v {
                j["invariant_subspace"] = json!(vecs(&m.basis_names, s));
                text.push_str(&span_text("invariant subspace", &m.basis_names, s));
            }
            Ok(Report { ok: v == Irreducibility::Irreducible, text, json: j })
        }
        Cmd::Decompose { module: m } => {
            let m = need_module(src, m)?;
            let d = decompose(&m);
            let reg = regular(&m.algebra);
            let op = opposite_module(&reg);
            let mut text = String::new();
            let mut parts = Vec::new();
            for (i, s) in d.summands.iter().enumerate() {
                let p = m.restrict(s).map_err(|e| e.to_string())?;
                let kind = match (modules_isomorphic(&p, &reg), modules_isomorphic(&p, &op)) {
                    (Ok(true), _) => "Reg",
                    (_, Ok(true)) => "Reg^op",
                    _ => "-",
                };
                text.push_str(&span_text(&format!("summand {} [{kind}]", i + 1), &m.basis_names, s));
                parts.push(json!({ "basis": vecs(&m.basis_names, s), "isomorphic_to": kind }));
            }
            text.push_str(&format!("{} summand(s), complete = {}\n", d.summands.len(), d.complete));
            Ok(Report { ok: d.complete, text, json: json!({ "command": "decompose", "summands": parts, "complete": d.complete }) })
        }
        Cmd::Isomorphic { other } => {
            let (a, b) = (algebra(src)?, other_algebra(src, other)?);
            match search_isomorphism_small(&a, &b) {
                Ok(Some(m)) => {
                    let rows: Vec<String> = (0..a.dim).map(|i| format!("{} ↦ {}", a.basis_names[i], b.format_vec(m.row(i)))).collect();
                    Ok(Report {
                        ok: true,
                        text: format!("PASS {} ≅ {}\n  {}\n", a.name, b.name, rows.join("\n  ")),
                        json: json!({ "command": "isomorphic", "isomorphic": true, "map": rows }),
                    })
                }
                Ok(None) => Ok(Report {
                    ok: false,
                    text: "FAIL no isomorphism found\n".into(),
                    json: json!({ "command": "isomorphic", "isomorphic": false }),
                }),
                Err(e) => Ok(Report {
                    ok: false,
                    text: format!("FAIL {e}\n"),
                    json: json!({ "command": "isomorphic", "isomorphic": Value::Null, "reason": e.to_string() }),
                }),
            }
        }
        Cmd::Ideals { generators } => {
            let a = algebra(src)?;
            let gens: Vec<(String, Vec<ncj::field::Scalar>)> = if generators.is_empty() {
                (0..a.dim).map(|i| (a.basis_names[i].clone(), a.basis(i))).collect()
            } else {
                generators.iter().map(|g| a.parse_vec(g).map(|v| (g.clone(), v))).collect::<Result<_, _>>().map_err(|e| e.to_string())?
            };
            let mut text = String::new();
            let mut out = Vec::new();
            for (g, v) in gens {
                let s = ideal_generated(&a, &[v]);
                text.push_str(&span_text(&format!("ideal({g})"), &a.basis_names, &s));
                out.push(json!({ "generator": g, "dim": s.dim(), "basis": vecs(&a.basis_names, &s) }));
            }
            Ok(Report { ok: true, text, json: json!({ "command": "ideals", "ideals": out }) })
        }
        Cmd::Simple => {
            let a = algebra(src)?;
            let s = is_simple(&a);
            let ok = s == Simplicity::Simple;
            let mut text = format!("{} {s}\n", if ok { "PASS" } else { "FAIL" });
            let mut j = json!({ "command": "simple", "simple": ok, "verdict": s.to_string() });
            if let Simplicity::NotSimple(Some(i)) = &s {
                text.push_str(&span_text("ideal", &a.basis_names, i));
                j["ideal"] = json!(vecs(&a.basis_names, i));
            }
            Ok(Report { ok, text, json: j })
        }
        Cmd::Commutant { elements } => {
            let a = algebra(src)?;
            let s = if elements.is_empty() {
                commutative_center(&a)
            } else {
                let vs = elements.iter().map(|e| a.parse_vec(e)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
                supercommutant(&a, &a.span(vs))
            };
            Ok(Report {
                ok: true,
                text: span_text("supercommutant", &a.basis_names, &s),
                json: json!({ "command": "commutant", "dim": s.dim(), "basis": vecs(&a.basis_names, &s) }),
            })
        }
        Cmd::Nucleus => {
            let a = algebra(src)?;
            let s = nucleus(&a);
            Ok(Report {
                ok: true,
                text: span_text("nucleus", &a.basis_names, &s),
                json: json!({ "command": "nucleus", "dim": s.dim(), "basis": vecs(&a.basis_names, &s) }),
            })
        }
        Cmd::Derivations { module: m } => {
            let d = match module(src, m)? {
                Some(m) => derivations_into(&m.algebra, &m).map_err(|e| e.to_string())?,
                None => derivations(&algebra(src)?),
            };
            let (even, odd) = (d.even_dim(), d.dim() - d.even_dim());
            Ok(Report {
                ok: true,
                text: format!("dim {} (even {even}, odd {odd})\n", d.dim()),
                json: json!({ "command": "derivations", "dim": d.dim(), "even": even, "odd": odd }),
            })
        }
        Cmd::Inner => {
            let a = algebra(src)?;
            let inner = inner_derivations(&a).map_err(|e| e.to_string())?;
            let all = all_inner(&a).map_err(|e| e.to_string())?;
            let total = derivations(&a).dim();
            Ok(Report {
                ok: all,
                text: format!("{} inner derivations: dim {} of {total}\n", if all { "PASS" } else { "FAIL" }, inner.dim()),
                json: json!({ "command": "inner", "dim": inner.dim(), "derivations": total, "all_inner": all }),
            })
        }
        Cmd::Kronecker { other, embed } => {
            let a = algebra(src)?;
            let d = other_algebra(src, other)?;
            let (u, e) = match embed {
                Some(list) => {
                    let rows = list.split(';').map(|s| a.parse_vec(s.trim())).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
                    if rows.len() != d.dim {
                        return Err(format!("--embed lists {} images for a {}-dimensional algebra", rows.len(), d.dim));
                    }
                    let m = Matrix::from_rows(a.field, a.dim, rows);
                    (a, m)
                }
                None => {
                    let u = graded_tensor(&a, &d).map_err(|e| e.to_string())?;
                    let m = unit_tensor_embedding(&a, &d).ok_or("the coefficient algebra has no unit")?;
                    (u, m)
                }
            };
            match kronecker_factor(&u, &e, &d) {
                Ok(k) => {
                    let zb = vecs(&u.basis_names, &k.z_space);
                    let mut text = format!("PASS U ≅ Z ⊗ {} with Z of dim {}\n", d.name, k.z.dim);
                    text.push_str(&span_text("Z", &u.basis_names, &k.z_space));
                    if let Some(diff) = k.peirce_variant_differs {
                        text.push_str(&format!("Z ∩ (U0 + U2) {} Z\n", if diff { "differs from" } else { "equals" }));
                    }
                    Ok(Report {
                        ok: true,
                        text,
                        json: json!({ "command": "kronecker", "factored": true, "z_dim": k.z.dim, "z_basis": zb, "peirce_variant_differs": k.peirce_variant_differs }),
                    })
                }
                Err(e) => Ok(Report {
                    ok: false,
                    text: format!("FAIL {e}\n"),
                    json: json!({ "command": "kronecker", "factored": false, "reason": e.to_string() }),
                }),
            }
        }
        Cmd::Verify => {
            let entries = manifest()?;
            let start = Instant::now();
            let rep = run_suite(&entries, src.filter.as_deref(), field(src)?);
            if !src.json {
                eprintln!("elapsed {:.1} s", start.elapsed().as_secs_f64());
            }
            Ok(Report { ok: rep.all_ok(), text: rep.to_text(), json: serde_json::from_str(&rep.to_json()).unwrap() })
        }
    }
}
