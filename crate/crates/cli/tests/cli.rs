use std::path::PathBuf;
use std::process::{Command as Process, Output};

use tiltcell_cli::input::{InputDocument, Number, Summand, TiltingRequest};
use tiltcell_cli::report::{EXIT_INPUT, EXIT_PASS, EXIT_VIOLATION};
use tiltcell_cli::{run, Command, Request, Source};

fn tiltcell(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_tiltcell")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn document(name: &str) -> InputDocument {
    InputDocument::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(tiltcell(&["verify", "--catalog", "semisimple2"]).status.code(), Some(EXIT_PASS));
    assert_eq!(tiltcell(&["verify", "--catalog", "dualnumbers"]).status.code(), Some(EXIT_VIOLATION));
    assert_eq!(tiltcell(&["verify", "--catalog", "nonesuch"]).status.code(), Some(EXIT_INPUT));
    assert_eq!(tiltcell(&["verify", "--catalog", "a2path", "--field", "Fp 6"]).status.code(), Some(EXIT_INPUT));
    assert_eq!(tiltcell(&["cellular", "--catalog", "a2path"]).status.code(), Some(EXIT_INPUT));
    assert_eq!(tiltcell(&["verify"]).status.code(), Some(EXIT_INPUT));
    assert_eq!(tiltcell(&["basis", "--catalog", "a2path", "--tilting", "3=1"]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn list_prints_the_catalog() {
    let out = tiltcell(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), tiltcell::catalog::NAMES);
}

#[test]
fn unknown_keys_are_rejected() {
    let text = std::fs::read_to_string(data("a2path.json")).unwrap().replace("\"tilting\"", "\"tilt\"");
    assert!(InputDocument::parse(&text).is_err());
    let path = scratch("unknown_key.json", &text);
    let out = tiltcell(&["verify", "--input", &path]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown field"));
}

#[test]
fn malformed_scalars_are_input_errors() {
    let text = std::fs::read_to_string(data("scaled_k2.json")).unwrap().replace("\"1/2\"", "\"0.5\"");
    let path = scratch("decimal.json", &text);
    assert_eq!(tiltcell(&["verify", "--input", &path]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn document_fields_parse_exactly() {
    let d = document("scaled_k2.json");
    assert_eq!(d.algebra.unit, [Number::Int(1), Number::Text("1/2".into())]);
    assert_eq!(
        d.tilting,
        Some(TiltingRequest::Sum(vec![
            Summand { label: "a".into(), multiplicity: 2 },
            Summand { label: "b".into(), multiplicity: 1 }
        ]))
    );
    assert_eq!(TiltingRequest::parse("a=2, b=1").unwrap(), d.tilting.unwrap());
    assert!(TiltingRequest::parse("a").is_err());
}

#[test]
fn input_document_matches_catalog() {
    let d = document("a2path.json");
    for command in [Command::Verify, Command::Tilting, Command::Basis, Command::Cells] {
        let from_doc = run(&Request {
            command,
            source: Source::Document(Box::new(d.clone())),
            field: None,
            seed: None,
            trials: None,
            dim_bound: None,
            tilting: None,
        })
        .unwrap();
        let mut req = Request::catalog(command, "a2path");
        req.seed = Some(4);
        req.trials = Some(20);
        let from_catalog = run(&req).unwrap();
        assert!(from_doc.passed, "{command:?}");
        assert_eq!(from_doc.sections, from_catalog.sections, "{command:?}");
    }
}

#[test]
fn fractions_and_explicit_tilting_request() {
    let path = data("scaled_k2.json");
    for command in ["tilting", "basis", "cells", "cellular"] {
        let out = tiltcell(&[command, "--input", &path, "--format", "json"]);
        assert_eq!(out.status.code(), Some(EXIT_PASS), "{command}");
    }
    let out = tiltcell(&["cells", "--input", &path, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cells = &v["sections"][0]["data"];
    let ranks: Vec<u64> = cells.as_array().unwrap().iter().map(|c| c["rank"].as_u64().unwrap()).collect();
    let mut ranks_sorted = ranks.clone();
    ranks_sorted.sort();
    assert_eq!(ranks_sorted, [1, 2]);
    assert_eq!(v["sections"][1]["data"]["by_radical"], true);
}

#[test]
fn catalog_verdicts() {
    for name in ["trivial", "semisimple2", "a2path", "auslander-dualnumbers", "ut3"] {
        let report = run(&Request::catalog(Command::Verify, name)).unwrap();
        assert!(report.passed, "{name}");
        assert_eq!(report.exit_code(), EXIT_PASS);
    }
    let report = run(&Request::catalog(Command::Verify, "dualnumbers")).unwrap();
    assert_eq!(report.exit_code(), EXIT_VIOLATION);
    let failure = report.failure.unwrap();
    assert_eq!(failure.kind, "AxiomViolation");
    assert!(failure.message.contains("Ext¹(Δ(1), ∇(1))"));
}

#[test]
fn tilting_on_dualnumbers_is_a_violation() {
    let out = tiltcell(&["tilting", "--catalog", "dualnumbers"]);
    assert_eq!(out.status.code(), Some(EXIT_VIOLATION));
}

#[test]
fn prime_fields() {
    for field in ["Fp 5", "F7", "Fp 11"] {
        let mut req = Request::catalog(Command::Basis, "auslander-dualnumbers");
        req.field = Some(field.into());
        req.trials = Some(10);
        let report = run(&req).unwrap();
        assert!(report.passed, "{field}");
    }
    let mut req = Request::catalog(Command::Cellular, "auslander-dualnumbers");
    req.field = Some("Fp 2".into());
    let report = run(&req).unwrap();
    assert_eq!(report.failure.unwrap().kind, "NotComputable");
}

#[test]
fn text_report_names_the_violated_statement() {
    let out = tiltcell(&["cells", "--catalog", "a2path", "--tilting", "1=1"]);
    assert_eq!(out.status.code(), Some(EXIT_VIOLATION));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] semisimplicity"));
    assert!(text.contains("violates cell module theorems"));
}
