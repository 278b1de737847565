use std::path::PathBuf;
use std::process::Command;

use folsym::parse::{parse_affine_form, parse_cyclo, parse_vector_field};
use folsym::report::*;
use folsym_core::catalog::{build, CatalogName};
use folsym_core::constructors::hessian_cover;
use folsym_core::semi::check_character;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn data(path: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(path).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_folsym")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn round_trips<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut with_json = args.to_vec();
    with_json.push("--json");
    let (code, out) = run(&with_json);
    assert!(code == 0 || code == 1, "{args:?} exited {code}");
    let parsed: T = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
    parsed
}

#[test]
fn diag_examples() {
    let (code, out) = run(&["diag", &data("forms/jouanolou2.form")]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 7\n"));
    assert!(out.contains("extremal normal form: alpha = -1, beta = 1, rho = 1"));
    assert!(run(&["diag", &data("forms/radial.form")]).1.contains("order: INFINITE\n"));
    assert!(run(&["diag", &data("forms/fermat4.form")]).1.contains("order: 9\n"));
    assert!(run(&["diag", &data("forms/wrong-sign.form")]).1.contains("extremal normal form: no"));
    let r: DiagReport = round_trips(&["diag", "--enumerate", &data("forms/jouanolou2.form")]);
    assert_eq!(r.elements.unwrap().len(), 7);
}

#[test]
fn molien_examples() {
    let (code, out) = run(&[
        "molien", "--group", "hessian-cover", "--char", "0", "--kind", "fields",
        "--compare", &data("series/hessian-chi0.txt"), "--denom", "9,12,18",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1*t^4 + 1*t^7 + 1*t^10 + 2*t^13 + 3*t^16"));
    assert!(out.ends_with("comparison: MATCH\n"));
    let (code, out) = run(&[
        "molien", "--group", "hessian-cover", "--compare", &data("series/valentiner.txt"), "--denom", "30,12,6",
    ]);
    assert_eq!(code, 1);
    assert!(out.ends_with("comparison: MISMATCH at t^4\n"));
    let r: MolienReport = round_trips(&["molien", "--group", "trivial", "--trunc", "12"]);
    let expected: Vec<i64> = (0..=12).map(|d| (d + 1) * (d + 3)).collect();
    assert_eq!(r.coefficients, expected);
    let r: MolienReport = round_trips(&["molien", "--group", "valentiner", "--trunc", "16"]);
    assert_eq!(r.coefficients.iter().position(|&c| c != 0), Some(16));
}

#[test]
fn group_files_match_named_groups() {
    let by_name: MolienReport = round_trips(&["molien", "--group", "jouanolou:2", "--char", "1", "--trunc", "10"]);
    let by_file: MolienReport =
        round_trips(&["molien", "--group", &data("groups/jouanolou2.json"), "--char", "1", "--trunc", "10"]);
    assert_eq!(by_name.coefficients, by_file.coefficients);
    assert_eq!(by_name.group_order, 147);
}

#[test]
fn semi_examples() {
    let (code, out) = run(&["semi", "--group", "hessian-cover", "--char", "0", "--degree", "4"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("# dim = 1"));
    let v = parse_vector_field(lines.next().unwrap()).unwrap();
    let g = hessian_cover().unwrap();
    assert_eq!(check_character(&v, &g).as_ref(), Some(&g.linear_characters()[0]));
    assert_eq!(run(&["semi", "--group", "klein", "--degree", "6"]).1, "# dim = 0\n");
    let r: SemiReport = round_trips(&["semi", "--group", "icosahedral", "--degree", "9"]);
    assert_eq!(r.dimension, 2);
    for b in &r.basis {
        assert!(parse_vector_field(b).unwrap().divergence().is_zero());
    }
}

#[test]
fn catalog_examples() {
    let (code, out) = run(&["catalog", "verify", "--name", "jouanolou", "--degree", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("order: PASS computed 39 expected 39"));
    assert!(out.ends_with("PASS\n"));
    let r: VerifyReport = round_trips(&["catalog", "verify", "--name", "hessian4"]);
    assert!(r.passed);
    assert_eq!(r.order.computed, 216);
    let r: VerifyReport = round_trips(&["catalog", "verify", "--name", "p5"]);
    assert!(r.polyhedral.unwrap().passed);
    let rows: Vec<CatalogRow> = round_trips(&["catalog", "list"]);
    assert_eq!(rows.len(), 8);
    assert_eq!(run(&["catalog", "verify", "--name", "s", "--degree", "3"]).0, 2);
}

#[test]
fn shipped_catalog_is_current() {
    let shipped = std::fs::read_to_string(data("catalog.json")).unwrap();
    assert_eq!(run(&["catalog", "export"]).1, shipped);
    let records: Vec<CatalogRecord> = serde_json::from_str(&shipped).unwrap();
    for r in records {
        let e = build(CatalogName::parse(&r.key).unwrap(), Some(r.degree)).unwrap();
        assert_eq!(parse_affine_form(&r.affine_form).unwrap(), e.affine_form);
        for (m, rows) in e.aut_generators.iter().zip(&r.generators) {
            for (i, row) in rows.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    assert_eq!(&parse_cyclo(c).unwrap(), m.get(i, j));
                }
            }
        }
    }
}

#[test]
fn orbit_examples() {
    assert!(run(&["orbit", "--group", "F", "--point", "0,0,1"]).1.starts_with("size: 12\n"));
    assert!(run(&["orbit", "--group", "F", "--point", "0,1,-1"]).1.starts_with("size: 9\n"));
    let r: OrbitReport = round_trips(&["orbit", "--group", "trivial", "--point", "1,0,0"]);
    assert_eq!(r.size, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["molien", "--group", "nonexistent"]).0, 2);
    assert_eq!(run(&["semi", "--group", "hessian", "--degree", "4"]).0, 2);
    assert_eq!(run(&["orbit", "--group", "F", "--point", "1,zeta(3),x"]).0, 2);
    assert_eq!(run(&["diag", &data("series/hessian-chi0.txt")]).0, 2);
    assert_eq!(run(&["molien", "--group", "klein", "--max-order", "100"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let commands: Vec<Vec<String>> = vec![
        vec!["diag".into(), "--enumerate".into(), data("forms/jouanolou2.form")],
        vec!["molien".into(), "--group".into(), "klein".into()],
        vec!["semi".into(), "--group".into(), "icosahedral".into(), "--degree".into(), "6".into()],
        vec!["orbit".into(), "--group".into(), "E".into(), "--point".into(), "1,2,3".into()],
        vec!["catalog".into(), "verify".into(), "--name".into(), "p11".into(), "--json".into()],
    ];
    for c in commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        assert_eq!(run(&args), run(&args));
    }
}
