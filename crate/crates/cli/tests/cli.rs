use std::path::{Path, PathBuf};
use std::process::Command;

use rota_baxter::linear::int;
use rota_baxter_cli::commands::{generate, transform, Generator, Verb};
use rota_baxter_cli::{CliError, Kind, StructureFile};
use serde_json::Value;

fn rbc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rbc"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, f: &StructureFile) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, f.to_json()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_examples() {
    let f = generate(&Generator::Binomial { n: 3 }).unwrap();
    assert_eq!((f.kind, f.dim, f.weight.as_deref()), (Kind::RbCoalgebra, 4, Some("-1")));
    let f = generate(&Generator::Smash {
        hopf: "z2".into(),
        op: "p1".into(),
    })
    .unwrap();
    assert_eq!((f.kind, f.dim), (Kind::RbCoalgebra, 4));
    let f = generate(&Generator::Qpoly { q: "2".into(), n: 5 }).unwrap();
    assert_eq!((f.kind, f.dim, f.weight.as_deref()), (Kind::RbAlgebra, 5, Some("1")));
    assert_eq!(f.degrees, Some(vec![1, 2, 3, 4, 5]));
    assert!(generate(&Generator::Qpoly { q: "1".into(), n: 5 }).is_err());
    assert!(generate(&Generator::Smash {
        hopf: "q8".into(),
        op: "p1".into()
    })
    .is_err());
}

#[test]
fn generated_files_round_trip() {
    let gens = [
        Generator::Binomial { n: 4 },
        Generator::Group { n: 3 },
        Generator::Sweedler,
        Generator::Smash {
            hopf: "sweedler".into(),
            op: "p2".into(),
        },
        Generator::Qpoly { q: "-1/3".into(), n: 6 },
    ];
    for g in gens {
        let f = generate(&g).unwrap();
        let text = f.to_json();
        let back = StructureFile::from_json(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = generate(&Generator::Binomial { n: 5 }).unwrap();
    let good = write(dir.path(), "b5.json", &f);
    let (code, out, _) = rbc(&["check", s(&good)]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);

    let mut m = f.clone();
    m.delta.as_mut().unwrap()[0].3 = "2".into();
    let bad = write(dir.path(), "mutated.json", &m);
    let (code, out, _) = rbc(&["check", s(&bad)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    let cx = &v["checks"][0]["counterexample"];
    assert_eq!(v["checks"][0]["check"], "coassociativity");
    // Δ(c₀) = 2c₀⊗c₀ is still coassociative, so c₁ is the first failure
    assert_eq!(cx["basis"], serde_json::json!([1]));

    let (code, _, _) = rbc(&["check", s(&good), "--weight", "1"]);
    assert_eq!(code, 1);

    let mut z = f.clone();
    z.counit.as_mut().unwrap()[0] = "1/0".into();
    let zero_den = write(dir.path(), "zero.json", &z);
    let (code, out, err) = rbc(&["check", s(&zero_den)]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("1/0"), "{err}");

    let (code, _, err) = rbc(&["check", s(&good), "--op", "Q"]);
    assert_eq!(code, 2);
    assert!(err.contains("\"Q\""));
}

#[test]
fn plain_coalgebra_with_explicit_operator() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = generate(&Generator::Binomial { n: 3 }).unwrap();
    f.kind = Kind::Coalgebra;
    f.weight = None;
    let p = write(dir.path(), "c.json", &f);
    let (code, out, _) = rbc(&["check", s(&p)]);
    assert_eq!(code, 0);
    assert_eq!(
        serde_json::from_str::<Value>(&out).unwrap()["checks"].as_array().unwrap().len(),
        2
    );
    assert_eq!(rbc(&["check", s(&p), "--op", "P", "--weight", "-1"]).0, 0);
    assert_eq!(rbc(&["check", s(&p), "--op", "P"]).0, 2);
}

#[test]
fn double_coproduct_of_binomial_three() {
    let f = generate(&Generator::Binomial { n: 3 }).unwrap();
    let out = transform(&f, Verb::DoubleCoproduct, None, None).unwrap();
    assert!(out.counit.is_none());
    let c = out.coalgebra().unwrap();
    // Δ_P(c₁) = 2c₀⊗c₀ − 2c₀⊗c₁ − 2c₁⊗c₀ + c₁⊗c₁
    assert_eq!(
        c.delta_of_basis(1).terms(),
        vec![
            (vec![0, 0], int(2)),
            (vec![0, 1], int(-2)),
            (vec![1, 0], int(-2)),
            (vec![1, 1], int(1)),
        ]
    );
    assert_eq!(c.delta_of_basis(0).terms(), vec![(vec![0, 0], int(-1))]);
}

#[test]
fn transforms_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let f = generate(&Generator::Binomial { n: 3 }).unwrap();
    let b3 = write(dir.path(), "b3.json", &f);
    let dual = dir.path().join("dual.json");
    assert_eq!(rbc(&["transform", s(&b3), "dualize", "--output", s(&dual)]).0, 0);
    let (code, out, _) = rbc(&["check", s(&dual)]);
    assert_eq!(code, 0, "{out}");
    let d = StructureFile::from_json(&std::fs::read_to_string(&dual).unwrap()).unwrap();
    assert_eq!(d.kind, Kind::RbAlgebra);
    assert_eq!(d.unit, Some(vec!["1".into(), "0".into(), "0".into(), "0".into()]));

    let (code, out, err) = rbc(&["transform", s(&b3), "split"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("operator not idempotent"));

    let (code, _, err) = rbc(&["transform", s(&b3), "rescale"]);
    assert_eq!(code, 2);
    assert!(err.contains("--mu"));
    let (code, _, err) = rbc(&["transform", s(&b3), "double-product"]);
    assert_eq!(code, 2);
    assert!(err.contains("does not apply"));
    let (code, _, _) = rbc(&["transform", s(&b3), "unfold"]);
    assert_eq!(code, 2);
    let (code, _, err) = rbc(&["transform", s(&b3), "counitize"]);
    assert_eq!(code, 2);
    assert!(err.contains("operator not idempotent"));
}

#[test]
fn quotient_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = write(dir.path(), "b3.json", &generate(&Generator::Binomial { n: 3 }).unwrap());
    let (code, out, _) = rbc(&["transform", s(&b3), "quotient-image"]);
    assert_eq!(code, 0);
    let q = StructureFile::from_json(&out).unwrap();
    assert_eq!(q.dim, 1);
    assert_eq!(q.basis_names, vec!["[c3]"]);
    assert_eq!(q.delta, Some(vec![(0, 0, 0, "-1".to_string())]));
    assert!(q.counit.is_none());
}

#[test]
fn lemma_reports() {
    for (max_n, tuples) in [("0", 1), ("5", 441), ("12", 8281)] {
        let (code, out, _) = rbc(&["lemma", "--max-n", max_n]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["tuples"], tuples);
        assert_eq!(v["pass"], true);
        assert!(v["elapsed_ms"].is_number());
    }
}

#[test]
fn format_validation() {
    let f = generate(&Generator::Binomial { n: 2 }).unwrap();
    let text = f.to_json();
    let unknown = text.replacen("\"format\": 1,", "\"format\": 1,\n  \"extra\": 3,", 1);
    assert!(matches!(StructureFile::from_json(&unknown), Err(CliError::Json(_))));
    let v2 = text.replacen("\"format\": 1", "\"format\": 2", 1);
    assert!(matches!(StructureFile::from_json(&v2), Err(CliError::Format(_))));
    let no_weight = text.replacen(",\n  \"weight\": \"-1\"", "", 1);
    assert!(matches!(StructureFile::from_json(&no_weight), Err(CliError::Format(_))));

    let mut g = f.clone();
    g.delta.as_mut().unwrap()[0].0 = 7;
    assert!(matches!(g.coalgebra(), Err(CliError::Format(_))));
    let mut g = f.clone();
    g.basis_names.pop();
    assert!(g.validate().is_err());
    let mut g = f.clone();
    g.mult = Some(vec![]);
    assert!(g.validate().is_err());
    let mut g = f.clone();
    let first = g.delta.as_ref().unwrap()[0].clone();
    g.delta.as_mut().unwrap().push(first);
    assert!(g.coalgebra().is_err());
}

#[test]
fn split_and_projector_round_trip() {
    let f = generate(&Generator::Smash {
        hopf: "z3".into(),
        op: "p2".into(),
    })
    .unwrap();
    let split = transform(&f, Verb::Split, None, None).unwrap();
    assert_eq!(split.subspaces.len(), 2);
    let back = transform(&split, Verb::Projector, None, None).unwrap();
    assert_eq!(back.operators, f.operators);
    assert_eq!(back.delta, f.delta);
}

#[test]
fn graded_dual_requires_degrees() {
    let mut f = generate(&Generator::Qpoly { q: "2".into(), n: 4 }).unwrap();
    let d = transform(&f, Verb::GradedDual, None, None).unwrap();
    assert_eq!(d.kind, Kind::RbCoalgebra);
    assert!(d.counit.is_none());
    f.degrees = None;
    assert!(matches!(
        transform(&f, Verb::GradedDual, None, None),
        Err(CliError::Usage(_))
    ));
}
