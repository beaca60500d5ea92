//! Whole-command tests through the same entry point the binary uses.

use std::fs;
use std::path::Path;

use crate::main_with_args;

struct Output {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn iring(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("iring").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    Output {
        code,
        stdout: out,
        stderr: err,
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn relations_json_matches_golden() {
    let o = iring(&["relations", "-g", "2", "--format", "json"]);
    assert_eq!(o.code, 0);
    assert_eq!(stdout(&o), golden("relations_g2.json"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "f1",
            "f2",
            "f3",
            "genus",
            "initial_terms",
            "paths_agree",
            "weighted_degrees"
        ]
    );
}

#[test]
fn groebner_and_hilbert_golden() {
    assert_eq!(
        stdout(&iring(&["groebner", "-g", "2", "--format", "json"])),
        golden("groebner_g2.json")
    );
    assert_eq!(
        stdout(&iring(&["hilbert", "-g", "3", "--format", "json"])),
        golden("hilbert_g3.json")
    );
    assert_eq!(
        stdout(&iring(&[
            "chern", "-g", "2", "--target", "ng", "--format", "latex"
        ])),
        golden("chern_ng_g2.tex")
    );
}

#[test]
fn output_is_deterministic() {
    let a = iring(&["groebner", "-g", "4", "--format", "json"]);
    let b = iring(&["groebner", "-g", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn normal_form_verb() {
    let o = iring(&["nf", "-g", "2", "--poly", "a^2"]);
    assert_eq!(o.code, 0);
    assert_eq!(stdout(&o), "-b\n");
    let o = iring(&["nf", "-g", "2", "--poly", "alpha*beta", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_form"], "-c");
    assert_eq!(v["input"], "a*b");
}

#[test]
fn pairing_verb() {
    let o = iring(&["pairing", "-g", "2", "--mono", "a*b", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ratio"], "-1");
    assert_eq!(v["socle"], "c");
    let o = iring(&["pairing", "-g", "2", "--mono", "a^3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ratio"], "1");
    // wrong degree is a usage error
    assert_eq!(iring(&["pairing", "-g", "2", "--mono", "a"]).code, 2);
}

#[test]
fn basis_and_betti_verbs() {
    let o = iring(&["basis", "-g", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 10);
    let o = iring(&["betti", "-g", "3", "--format", "json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cross_check"], true);
    assert_eq!(v["enumeration"], serde_json::json!([1, 1, 2, 16, 2, 1, 1]));
}

#[test]
fn genus_ranges_emit_arrays() {
    let o = iring(&["relations", "-g", "1..3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let genera: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["genus"].as_u64().unwrap())
        .collect();
    assert_eq!(genera, [1, 2, 3]);
}

#[test]
fn exit_codes() {
    assert_eq!(iring(&["nf", "-g", "2", "--poly", ""]).code, 3);
    assert_eq!(iring(&["nf", "-g", "2", "--poly", "a^^2"]).code, 3);
    assert_eq!(iring(&["pairing", "-g", "2", "--mono", "a+b"]).code, 3);
    assert_eq!(iring(&["relations", "-g", "0"]).code, 2);
    assert_eq!(iring(&["betti", "-g", "1"]).code, 2);
    assert_eq!(iring(&["chern", "-g", "1", "--target", "ng"]).code, 2);
    assert_eq!(iring(&["frobnicate"]).code, 2);
    assert_eq!(iring(&["chern", "-g", "1"]).code, 0);
    let o = iring(&["nf", "-g", "2", "--poly", "a^2 + + b"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn cache_directory_is_used_and_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = iring(&["groebner", "-g", "3", "--format", "json"]);

    let first = iring(&["groebner", "-g", "3", "--format", "json", "--cache-dir", d]);
    assert!(String::from_utf8_lossy(&first.stderr).contains("computed"));
    let second = iring(&["groebner", "-g", "3", "--format", "json", "--cache-dir", d]);
    assert!(String::from_utf8_lossy(&second.stderr).contains("loaded"));
    assert_eq!(first.stdout, fresh.stdout);
    assert_eq!(second.stdout, fresh.stdout);

    let path = dir.path().join("ideal_g3.json");
    let saved = fs::read(&path).unwrap();
    fs::write(&path, b"{\"version\": 1}").unwrap();
    let third = iring(&["groebner", "-g", "3", "--format", "json", "--cache-dir", d]);
    assert!(String::from_utf8_lossy(&third.stderr).contains("recomputed"));
    assert_eq!(third.stdout, fresh.stdout);
    assert_eq!(fs::read(&path).unwrap(), saved);
}

#[test]
fn verify_small_range() {
    let o = iring(&["verify", "-g", "1..3", "--format", "json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let genera: Vec<u64> = v["genera"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["genus"].as_u64().unwrap())
        .collect();
    assert_eq!(genera, [1, 2, 3]);
}
