use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use liebra::catalog::{self, families, invariant_fingerprint, Params};
use liebra::dercalc::{conjugate, derivation_space, inner_derivations};
use liebra::exactmat::{Mat, Rat};
use liebra::freenilp::build_free_nilpotent;
use liebra::liecore::{matrix_to_json, LieAlg, LieAlgBuilder};
use serde_json::Value;

fn liebra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebra")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn n23_file(dir: &Path) -> String {
    write(dir, "n23.json", &build_free_nilpotent(3).unwrap().alg.to_json())
}

#[test]
fn build_free_nilpotent_is_deterministic() {
    let a = liebra(&["build", "--free-nilpotent", "3"]);
    let b = liebra(&["build", "--free-nilpotent", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let alg = LieAlg::from_json(&stdout(&a)).unwrap();
    assert_eq!(alg.dim(), 5);
    assert_eq!(alg, build_free_nilpotent(3).unwrap().alg);
    assert!(json(&a)["grading"].is_array());
}

#[test]
fn build_catalog_entry_with_parameter() {
    let o = liebra(&["build", "--catalog", "r_{2,3}^{1,alpha}", "--param", "alpha=1/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let p = Params::from([("alpha".to_string(), Rat::new(1, 2))]);
    assert_eq!(LieAlg::from_json(&stdout(&o)).unwrap(), catalog::algebra_by_name("r_{2,3}^{1,alpha}", &p).unwrap());

    let missing = liebra(&["build", "--catalog", "r_{2,3}^{1,alpha}"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = liebra(&["build", "--catalog", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn check_reports_pass_and_defects() {
    let dir = tempfile::tempdir().unwrap();
    let ab = write(dir.path(), "ab.json", &LieAlg::abelian(3).to_json());
    let o = liebra(&["check", &ab, "--text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "jacobi: PASS");

    let mut b = LieAlgBuilder::new(["a", "b", "c"]);
    b.set_labels("a", "b", &[("b", Rat::one())]).unwrap();
    b.set_labels("b", "c", &[("a", Rat::one())]).unwrap();
    let bad = write(dir.path(), "bad.json", &b.build().unwrap().to_json());
    let o = liebra(&["check", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["jacobi"], "fail");
    assert_eq!(v["defects"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(liebra(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(liebra(&["check", "/nonexistent/alg.json"]).status.code(), Some(2));
    assert_eq!(liebra(&["build"]).status.code(), Some(2));
    assert_eq!(liebra(&["--help"]).status.code(), Some(0));
}

#[test]
fn derivations_series_center_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let f = n23_file(dir.path());
    let a = build_free_nilpotent(3).unwrap().alg;

    let d = json(&liebra(&["derivations", &f]));
    assert_eq!(d["dim"], derivation_space(&a).dim());
    assert_eq!(d["inner_dim"], inner_derivations(&a).dim());
    assert_eq!(d["dim"], 10);
    assert_eq!(d["basis"].as_array().unwrap().len(), 10);

    let s = json(&liebra(&["series", &f]));
    assert_eq!(s["lower_central_series"], serde_json::json!([5, 3, 2, 0]));
    assert_eq!(s["nilindex"], 3);
    assert_eq!(s["type"], 2);

    let c = json(&liebra(&["center", &f]));
    assert_eq!(c["dim"], 2);
    assert_eq!(c["basis"], serde_json::json!(["z0", "z1"]));
}

#[test]
fn quotient_by_central_element() {
    let dir = tempfile::tempdir().unwrap();
    let f = n23_file(dir.path());
    let o = liebra(&["quotient", &f, "--ideal", "z0 - 2 z1"]);
    assert_eq!(o.status.code(), Some(0));
    let q = LieAlg::from_json(&stdout(&o)).unwrap();
    assert_eq!(q.dim(), 4);
    assert_eq!(q.type_of(), 2);
    assert_eq!(q.nilindex(), Some(3));
    assert_eq!(liebra(&["quotient", &f, "--ideal", "v0"]).status.code(), Some(1));
}

#[test]
fn extend_reproduces_catalog_entry() {
    let dir = tempfile::tempdir().unwrap();
    let f = n23_file(dir.path());
    let d = write(dir.path(), "d.json", &matrix_to_json(&families::jordan_derivation(3).unwrap()));
    let o = liebra(&["extend", &f, "--derivation", &d]);
    assert_eq!(o.status.code(), Some(0));
    let want = catalog::algebra_by_name("r_{2,3}^{1}", &Params::new()).unwrap();
    assert_eq!(LieAlg::from_json(&stdout(&o)).unwrap().to_json(), want.to_json());

    let mut m = Mat::zeros(5, 5).entries().to_vec();
    m[0] = Rat::one();
    let not_der = write(dir.path(), "nd.json", &matrix_to_json(&Mat::from_vector(5, 5, &m).unwrap()));
    assert_eq!(liebra(&["extend", &f, "--derivation", &not_der]).status.code(), Some(1));
}

#[test]
fn conjugate_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let f = n23_file(dir.path());
    let a = build_free_nilpotent(3).unwrap().alg;
    let phi = Mat::diag(&[2, 1, 2, 4, 2].map(Rat::from));
    let d = families::jordan_derivation(3).unwrap();
    let pf = write(dir.path(), "phi.json", &matrix_to_json(&phi));
    let df = write(dir.path(), "d.json", &matrix_to_json(&d));
    let o = liebra(&["conjugate", &f, "--phi", &pf, "--derivation", &df]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), matrix_to_json(&conjugate(&a, &phi, &d).unwrap()));

    let sing = write(dir.path(), "s.json", &matrix_to_json(&Mat::zeros(5, 5)));
    assert_eq!(liebra(&["conjugate", &f, "--phi", &sing, "--derivation", &df]).status.code(), Some(1));
}

#[test]
fn sl2_decompose_weights_and_algebras() {
    let o = liebra(&["sl2-decompose", "--weights", "1,-1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["highest_weights"], serde_json::json!([1, 0]));
    assert_eq!(v["weights"], serde_json::json!([-1, 0, 1]));

    let bad = liebra(&["sl2-decompose", "--weights", "1,-2,-1,0,-3"]);
    assert_eq!(bad.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let g = catalog::algebra_by_name("g_{2,3}", &Params::new()).unwrap();
    let f = write(dir.path(), "g.json", &g.to_json());
    let o = liebra(&["sl2-decompose", &f, "--text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("V(1) + V(1) + V(0)"), "{}", stdout(&o));
}

#[test]
fn pencil_test_on_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &matrix_to_json(&Mat::diag(&[1, -1].map(Rat::from))));
    let b = write(dir.path(), "b.json", &matrix_to_json(&Mat::identity(2)));
    let n = write(dir.path(), "n.json", &matrix_to_json(&Mat::from_i64(&[&[0, 1], &[0, 0]])));
    assert_eq!(json(&liebra(&["pencil-test", &a, &b]))["contains_nilpotent"], false);
    assert_eq!(json(&liebra(&["pencil-test", &a, &n]))["contains_nilpotent"], true);
}

#[test]
fn fingerprint_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let a = catalog::algebra_by_name("r_{2,3}^{3}", &Params::new()).unwrap();
    let f = write(dir.path(), "r.json", &a.to_json());
    let v = json(&liebra(&["fingerprint", &f]));
    assert_eq!(v, serde_json::to_value(invariant_fingerprint(&a)).unwrap());
}

#[test]
fn audit_reports_exit_zero() {
    let all = liebra(&["audit", "--all"]);
    assert_eq!(all.status.code(), Some(0), "{}", String::from_utf8_lossy(&all.stderr));
    let v = json(&all);
    assert_eq!(v["passed"], true);
    assert_eq!(v["tally"]["fail"], 0);

    let neg = liebra(&["audit", "--negative-controls", "--text"]);
    assert_eq!(neg.status.code(), Some(0));
    assert!(stdout(&neg).contains("(v1, w0, x) -> -z1"));

    let one = liebra(&["audit", "--entry", "r_{2,3}^{1,alpha}", "--param", "alpha=3"]);
    assert_eq!(one.status.code(), Some(0));
}

#[test]
fn catalog_dir_override_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    let o = liebra(&["export-catalog", data.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let out = dir.path().join("g.json");
    let run = |catalog_dir: &Path| {
        Command::new(env!("CARGO_BIN_EXE_liebra"))
            .args(["build", "--catalog", "g_{2,3}^{1}", "--from-data", "--out", out.to_str().unwrap()])
            .env("LIEBRA_CATALOG_DIR", catalog_dir)
            .output()
            .unwrap()
    };
    assert_eq!(run(&data).status.code(), Some(0));
    let stored = LieAlg::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(stored, catalog::algebra_by_name("g_{2,3}^{1}", &Params::new()).unwrap());
    assert_eq!(run(&dir.path().join("empty")).status.code(), Some(2));
}
