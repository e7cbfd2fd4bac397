//! End-to-end tests of the `npb` binary: outputs, exit codes and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use npb_core::actions::{derivations, Representation};
use npb_core::algebra::{algebra_from_json, VarietyTag};
use npb_core::exactlin::Rationals;
use serde_json::{json, Value};
use tempfile::TempDir;

fn npb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_npb")).args(args).env_remove("NPB_GUARD_DIM").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8")
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files { dir: tempfile::tempdir().expect("tempdir") }
    }

    fn write(&self, name: &str, v: &Value) -> PathBuf {
        self.raw(name, &v.to_string())
    }

    fn raw(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).expect("write");
        p
    }
}

fn s(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

/// The two-dimensional nonabelian Lie algebra `[a,b] = b` with zero product.
fn lie() -> Value {
    json!({"field": "Q", "dim": 2, "basis": ["a", "b"], "bracket": [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]})
}

fn zero_f2() -> Value {
    json!({"field": "F2", "dim": 1, "basis": ["x"]})
}

#[test]
fn classify_lists_every_variety() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    let o = npb(&["classify", s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Assoc Leibniz AWBl AWBr AWBlr NPl NPr NPlr Poisson\n");
    let o = npb(&["classify", s(&p), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["varieties"].as_array().unwrap().len(), 9);
}

#[test]
fn failed_membership_exits_one_with_witness() {
    let f = Files::new();
    let p = f.write("b.json", &json!({"field": "Q", "dim": 1, "basis": ["u"], "bracket": [[[1]]]}));
    let o = npb(&["check", s(&p), "--variety", "npl"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "FAIL algebra is not NPl: leibniz fails at (u, u, u)\n");
    let o = npb(&["check", s(&p), "--variety", "assoc"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn invalid_action_is_reported() {
    let f = Files::new();
    let p = f.write("z.json", &zero_f2());
    let r = f.write("r.json", &json!({"module_dim": 1, "dotL": [[[1]]]}));
    let o = npb(&["check", s(&p), "--variety", "npl", "--rep", s(&r)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL not a NPl representation: "), "{}", stdout(&o));
    let o = npb(&["cohomology", s(&p), "--rep", s(&r), "--variety", "npl"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn derived_identities_hold_on_a_lie_algebra() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    let o = npb(&["check", s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    assert!(!stdout(&o).contains("VIOLATED"));
}

#[test]
fn parse_errors_carry_file_line_and_column() {
    let f = Files::new();
    let p = f.raw("bad.json", "{\n  \"field\": \"Q\",\n  \"dim\": ]\n}");
    let o = npb(&["classify", s(&p)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(&format!("{}:3:10", s(&p))), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    assert_eq!(npb(&["classify", s(&p), "--field", "F2"]).status.code(), Some(2));
    assert_eq!(npb(&["cohomology", s(&p), "--variety", "poisson"]).status.code(), Some(2));
    assert_eq!(npb(&["cohomology", s(&p), "--variety", "nope"]).status.code(), Some(2));
    assert_eq!(npb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(npb(&["report", "--criterion", "13"]).status.code(), Some(2));
    assert_eq!(npb(&["classify", "/nonexistent/a.json"]).status.code(), Some(2));
}

#[test]
fn cohomology_json_is_deterministic_and_matches_derivations() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    let args = ["cohomology", s(&p), "--variety", "nplr", "--max-degree", "3", "--format", "json"];
    let a = npb(&args);
    let b = npb(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0]["variety"], "NPlr");
    assert_eq!(lines[0]["input_sha256"].as_str().unwrap().len(), 64);
    let alg = algebra_from_json(&Rationals, &lie()).unwrap();
    let der = derivations(VarietyTag::NPlr, &Representation::regular(&alg)).dim();
    assert_eq!(lines[1]["h_dim"], 0);
    assert_eq!(lines[2]["h_dim"], der);
}

#[test]
fn dimension_guard_is_enforced() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    let o = Command::new(env!("CARGO_BIN_EXE_npb"))
        .args(["cohomology", s(&p), "--variety", "nplr"])
        .env("NPB_GUARD_DIM", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("dim P + dim M = 4 > 3"), "{}", stderr(&o));
}

#[test]
fn les_exits_zero_when_exact() {
    let f = Files::new();
    let p = f.write("lie.json", &lie());
    let o = npb(&["les", s(&p), "--tag", "A1", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("exact\n"));
    let o = npb(&["les", s(&p), "--tag", "A1", "--max-degree", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], true);
}

#[test]
fn extension_counts() {
    let f = Files::new();
    let p = f.write("z.json", &zero_f2());
    let o = npb(&["extensions", s(&p), "--variety", "npl", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["h2"].as_u64(), v["classes"].as_u64()), (Some(2), Some(4)));
    let o = npb(&["extensions", s(&p), "--variety", "awbl"]);
    assert_eq!(o.status.code(), Some(0));
    // two independent bracket factor sets in the cone against one in an extension
    let o = npb(&["extensions", s(&p), "--variety", "awblr", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["h2"].as_u64(), v["classes"].as_u64()), (Some(3), Some(4)));
    let q = f.write("lie.json", &lie());
    assert_eq!(npb(&["extensions", s(&q), "--variety", "npl"]).status.code(), Some(2));
}

#[test]
fn free_algebra_commands() {
    let o = npb(&["free", "--variety", "nplr", "--gens", "x,y", "--max-degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let dims: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 1, 2, 4, 2]);
    let o = npb(&["free", "--variety", "nplr", "--gens", "x", "--term", "[x*x,x]"]);
    assert_eq!(o.status.code(), Some(0));
    let o = npb(&["free", "--variety", "npl", "--gens", "x,y", "--confluence", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = npb(&["free", "--variety", "npl", "--gens", "x", "--underlying", "assoc", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = npb(&["free", "--variety", "nplr", "--gens", "x", "--term", "[x,z]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_is_seeded_and_reproducible() {
    let args = ["report", "--quick", "--criterion", "3", "--seed", "7", "--format", "json"];
    let a = npb(&args);
    let b = npb(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let first: Value = serde_json::from_str(stdout(&a).lines().next().unwrap()).unwrap();
    assert_eq!(first["seed"], 7);
    let o = npb(&["report", "--quick", "--criterion", "10", "--criterion", "12", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("criterion 12: PASS"));
}
