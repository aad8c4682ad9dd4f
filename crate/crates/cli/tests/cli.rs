use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fqhg::constructions::hecke_pair;
use fqhg::duality::verify_fqh;
use fqhg::FiniteGroup;

fn fqhg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqhg")).args(args).output().expect("binary runs")
}

fn build_to(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = fqhg(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hecke_builds_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["hecke", "--group", "S3", "--subgroup", "(1 2)"]);
    let out = fqhg(&["verify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = fqhg(&["verify", p.to_str().unwrap(), "--side", "b"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn round_trip_certificate_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["hecke", "--group", "S3", "--subgroup", "(1 2)"]);
    let from_cli = stdout(&fqhg(&["verify", p.to_str().unwrap()]));

    let g = FiniteGroup::symmetric(3).unwrap();
    let ex = hecke_pair(&g, &g.subgroup_from_labels(&["(1 2)".into()]).unwrap()).unwrap().example;
    let a = ex.algebra(fqhg::Side::A);
    let cert = verify_fqh(a, &ex.coproduct(fqhg::Side::A).unwrap(), &ex.counit(fqhg::Side::A), &ex.integral_a).unwrap();
    let in_memory = serde_json::to_string_pretty(&cert).unwrap() + "\n";
    assert_eq!(from_cli, in_memory);
}

#[test]
fn output_is_deterministic() {
    let args = ["build", "twosub", "--group", "S3", "--h", "(1 2)", "--k", "(1 2 3)"];
    let first = fqhg(&args);
    let second = fqhg(&args);
    assert_eq!(first.stdout, second.stdout);
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "t.json", &args[1..]);
    let r1 = fqhg(&["report", p.to_str().unwrap()]);
    let r2 = fqhg(&["report", p.to_str().unwrap()]);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn c3_fails_verification_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "c3.json", &["counterexample", "--name", "c3"]);
    let out = fqhg(&["verify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["integral_equation"], false);
    assert_eq!(cert["left_invariant"], true);
}

#[test]
fn broken_associativity_names_a_triple() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["hecke", "--group", "S3", "--subgroup", "(1 2)"]);
    let mut b: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    // u·v = 0 becomes u·v = v, so (vu)v = 0 but v(uv) = v
    b["fqh"]["algebra"]["mult"][1][1] = serde_json::json!({"re": "1", "im": "0"});
    b["pair"]["algebra_a"] = b["fqh"]["algebra"].clone();
    std::fs::write(&p, serde_json::to_string(&b).unwrap()).unwrap();
    let out = fqhg(&["verify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["algebra_ok"], false);
    assert_eq!(cert["witnesses"]["algebra_ok"].as_array().unwrap().len(), 3);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"schema\": \"fqhg/1\"").unwrap();
    assert_eq!(fqhg(&["verify", p.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&p, "{\"schema\": \"other\", \"source\": null}").unwrap();
    assert_eq!(fqhg(&["verify", p.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fqhg(&["verify", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fqhg(&["build", "hecke", "--group", "Q8", "--subgroup", "e"]).status.code(), Some(2));
    assert_eq!(fqhg(&["build", "family", "--alpha", "one"]).status.code(), Some(2));
    assert_eq!(fqhg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn precondition_violations_exit_3() {
    let out = fqhg(&["build", "family", "--kind", "vw", "--alpha", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("α=-1 forbidden: φ cannot be faithful"));
    assert_eq!(fqhg(&["build", "counterexample", "--name", "m2", "--p", "2", "--q", "2"]).status.code(), Some(3));
    let out = fqhg(&["build", "twosub", "--group", "S3", "--h", "(1 2)", "--k", "(1 2)"]);
    assert_eq!(out.status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "c3.json", &["counterexample", "--name", "c3"]);
    assert_eq!(fqhg(&["dualize", p.to_str().unwrap()]).status.code(), Some(3));
    let f = build_to(dir.path(), "f.json", &["family", "--alpha", "5/7"]);
    assert_eq!(fqhg(&["pair-check", f.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn double_dual_returns_the_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["twosub", "--free", "H=Z2", "K=Z2"]);
    let d = dir.path().join("d.json");
    let dd = dir.path().join("dd.json");
    assert!(fqhg(&["dualize", p.to_str().unwrap(), "--out", d.to_str().unwrap()]).status.success());
    assert!(fqhg(&["verify", d.to_str().unwrap()]).status.success());
    assert!(fqhg(&["dualize", d.to_str().unwrap(), "--out", dd.to_str().unwrap()]).status.success());
    let read = |p: &Path| serde_json::from_str::<serde_json::Value>(&std::fs::read_to_string(p).unwrap()).unwrap();
    let (orig, back) = (read(&p), read(&dd));
    assert_eq!(orig["fqh"], back["fqh"]);
    assert_eq!(orig["pair"], back["pair"]);
}

#[test]
fn report_renders_tensor_sums() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["hecke", "--group", "S3", "--subgroup", "(1 2)"]);
    let out = fqhg(&["report", p.to_str().unwrap(), "--format", "text", "--labels", "u,v"]);
    let text = stdout(&out);
    assert!(text.contains("Δ(u) = u⊗u + 1/2 v⊗v"), "{text}");
    assert!(text.contains("Δ(v) = u⊗v + v⊗u + 1/2 v⊗v"), "{text}");
    assert!(text.contains("φ(v) = 4"));
}

#[test]
fn seed_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let p = build_to(dir.path(), "h.json", &["hecke", "--group", "S3", "--subgroup", "(1 2)"]);
    let out = Command::new(env!("CARGO_BIN_EXE_fqhg"))
        .args(["report", p.to_str().unwrap()])
        .env("FQHG_SEED", "42")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["plancherel"]["random_ok"], true);
}

#[test]
fn pair_check_passes_on_presets() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("h.json", vec!["hecke", "--group", "S3", "--subgroup", "(1 2)"]),
        ("t.json", vec!["twosub", "--free", "H=Z2", "K=Z2"]),
        ("g.json", vec!["group", "--group", "D4"]),
        ("f.json", vec!["family", "--kind", "vy", "--alpha", "-3/2"]),
    ] {
        let p = build_to(dir.path(), name, &args);
        let out = fqhg(&["pair-check", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}
