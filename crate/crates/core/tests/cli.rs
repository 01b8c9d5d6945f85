use std::process::Command;

use braidrank::cli::{run_with, EnumerateReport, IdentifyReport, InvariantReport, ParseReport, ValidateReport, WitnessReport};
use braidrank::search::MinLength;
use braidrank::{BPrimeProfile, ExclusionCertificate};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("braidrank").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    let value: T = serde_json::from_str(&out).unwrap();
    // typed round trip reproduces the output byte for byte
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", out);
    value
}

fn strip_elapsed(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(m) => {
            m.remove("elapsed");
            m.values_mut().for_each(strip_elapsed);
        }
        serde_json::Value::Array(a) => a.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

#[test]
fn parse_and_invariants() {
    let p: ParseReport = json(&["parse", "--word", "B3:-2,1,-2,1"]);
    assert_eq!((p.strands, p.length, p.components), (3, 4, 1));
    assert_eq!(p.canonical_form.to_string(), "B3:1,-2,1,-2");
    let i: InvariantReport = json(&["invariants", "--word", "B2:1,1,1"]);
    assert_eq!(i.jones.to_string(), "1;1,0,1,-1");
    assert_eq!(i.alexander.to_string(), "-1;1,-1,1");
    assert_eq!(i.homogeneous_genus, Some(1));
    let (code, out, _) = run(&["invariants", "--word", "B3:1,-2,1,-2"]);
    assert_eq!(code, 0);
    assert!(out.contains("alexander"));
}

#[test]
fn identify() {
    let id: IdentifyReport = json(&["identify", "--word", "B2:-1,-1,-1"]);
    assert_eq!(id.matches.len(), 1);
    assert_eq!((id.matches[0].name.as_str(), id.matches[0].mirror), ("3_1", true));
    let none: IdentifyReport = json(&["identify", "--word", "B2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"]);
    assert!(none.matches.is_empty());
}

#[test]
fn enumerate_counts() {
    let e: EnumerateReport = json(&["enumerate", "--strands", "5", "--occurrence", "2,2,2,2", "--all-words", "--links", "--count"]);
    assert_eq!(e.count, 645_120);
    assert!(e.words.is_none());
    let e: EnumerateReport = json(&["enumerate", "--strands", "2", "--length", "3"]);
    // σ1^3, σ1^2σ1^-1, σ1σ1^-2, σ1^-3
    assert_eq!(e.count, 4);
    assert_eq!(e.words.unwrap().len(), 4);
}

#[test]
fn exclude_witness_minlen() {
    let cert: ExclusionCertificate = json(&["exclude", "--strands", "3", "--length", "4", "--targets", "5_2,3_1"]);
    assert!(cert.result["5_2"].is_absent());
    assert!(!cert.result["3_1"].is_absent());
    let w: WitnessReport = json(&["witness", "5_2", "--strands", "3", "--length", "6"]);
    assert!(w.witness.is_some());
    let m: MinLength = json(&["minlen", "5_2", "--strands", "3", "--upper", "8"]);
    assert_eq!(m.value, 6);
}

#[test]
fn solve_and_validate() {
    let p: BPrimeProfile = json(&["solve", "6_1"]);
    assert_eq!(p.eventual.as_ref().map(|e| (e.from, e.value)), Some((4, 3)));
    let v: ValidateReport = json(&["table", "validate"]);
    assert!(v.failures.is_empty());
    assert!(v.rows >= 260);
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["--format", "json", "exclude", "--strands", "4", "--length", "7", "--targets", "6_2,6_3,7_7"];
    let mut outputs = Vec::new();
    for t in ["1", "3"] {
        let mut args = vec!["--threads", t];
        args.extend_from_slice(&base);
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{err}");
        let mut v: serde_json::Value = serde_json::from_str(&out).unwrap();
        strip_elapsed(&mut v);
        outputs.push(v);
    }
    assert_eq!(outputs[0], outputs[1]);
    let (_, a, _) = run(&["--threads", "1", "--format", "json", "witness", "6_2", "--strands", "4", "--length", "7"]);
    let (_, b, _) = run(&["--threads", "4", "--format", "json", "witness", "6_2", "--strands", "4", "--length", "7"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["identify", "--word", "B2:1,1"]).0, 1);
    assert_eq!(run(&["solve", "99_1"]).0, 1);
    assert_eq!(run(&["minlen", "4_1", "--strands", "2", "--upper", "9"]).0, 1);
    assert_eq!(run(&["parse", "--word", "B2:3"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--threads", "0", "parse", "--word", "B2:1"]).0, 2);
    assert_eq!(run(&["exclude", "--strands", "3", "--length", "4"]).0, 2);
    assert_eq!(run(&["--budget", "100", "exclude", "--strands", "5", "--length", "10", "--targets", "10_136"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("solve"));
    let (code, _, err) = run(&["--table", "/nonexistent/knots.csv", "solve", "3_1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_braidrank");
    let out = Command::new(bin).args(["--format", "json", "parse", "--word", "B3:1,2"]).output().unwrap();
    assert!(out.status.success());
    let (_, lib, _) = run(&["--format", "json", "parse", "--word", "B3:1,2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib);
    let out = Command::new(bin).args(["identify", "--word", "B3:1,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
