use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_parastat"));
    cmd.env_remove("PARASTAT_TOL");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, value: Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_then_srank_ghz() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "--what", "ghz", "--n", "2", "--k", "3"]);
    assert!(out.status.success());
    let file = json(&out);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert_eq!(file["re"][0].as_f64().unwrap(), h);
    assert_eq!(file["re"][7].as_f64().unwrap(), h);
    let path = write(dir.path(), "ghz.json", file);
    let out = run(&["srank", p(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["s_rank"], 2);
    assert_eq!(v["per_slot"], serde_json::json!([2, 2, 2]));
}

#[test]
fn w_state_coefficients() {
    let v = json(&run(&["gen", "--what", "w", "--n", "2", "--k", "3"]));
    let re: Vec<f64> = v["re"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let s = 1.0 / 3f64.sqrt();
    for (i, c) in re.iter().enumerate() {
        let expected = if [1, 2, 4].contains(&i) { s } else { 0.0 };
        assert!((c - expected).abs() < 1e-15, "index {i}");
    }
}

#[test]
fn srank_zero_tensor_is_numerical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "z.json", serde_json::json!({"dim": 2, "order": 2, "re": [0, 0, 0, 0]}));
    let out = run(&["srank", p(&path)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero tensor"));
}

#[test]
fn malformed_inputs_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad_len = write(dir.path(), "a.json", serde_json::json!({"dim": 2, "order": 2, "re": [1, 0, 0]}));
    assert_eq!(run(&["srank", p(&bad_len)]).status.code(), Some(2));
    let junk = dir.path().join("b.json");
    std::fs::write(&junk, "not json").unwrap();
    assert_eq!(run(&["srank", p(&junk)]).status.code(), Some(2));
    let t = write(dir.path(), "t.json", serde_json::json!({"dim": 3, "order": 3, "re": vec![0.0; 27]}));
    assert_eq!(run(&["check", "--stats", "alpha", p(&t)]).status.code(), Some(2));
}

#[test]
fn check_reports_for_each_class() {
    let dir = tempfile::tempdir().unwrap();
    // e1∨e1∨e2 in n = 2: coefficient 1/3 at (1,1,2), (1,2,1), (2,1,1).
    let mut re = vec![0.0; 8];
    for i in [1, 2, 4] {
        re[i] = 1.0 / 3.0;
    }
    let boson = write(dir.path(), "b.json", serde_json::json!({"dim": 2, "order": 3, "re": re}));
    let v = json(&run(&["check", "--stats", "bose", p(&boson)]));
    assert_eq!(v["simple"], false);
    assert_eq!(v["s_rank"], 2);
    assert_eq!(v["witness"]["kind"], "quadratic");
    // witness indices are 1-based
    assert!(v["witness"]["left"].as_array().unwrap().iter().all(|i| i.as_u64().unwrap() >= 1));

    let alpha = write(dir.path(), "alpha.json", serde_json::json!({"rows": [[1, 2], [3]]}));
    let mut re = vec![0.0; 27];
    re[1] = 1.0; // e1⊗e1⊗e2
    re[9] = -1.0; // e2⊗e1⊗e1
    let v1 = write(dir.path(), "v1.json", serde_json::json!({"dim": 3, "order": 3, "re": re}));
    let out = run(&["check", "--stats", "alpha", "--tableau", p(&alpha), p(&v1)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["simple"], true);
    assert_eq!(v["s_rank"], 2);

    let out = run(&["check", "--stats", "fermi", p(&boson)]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["error"], "not in symmetry class");
}

#[test]
fn segre_commands() {
    let dir = tempfile::tempdir().unwrap();
    let e1 = serde_json::json!({"re": [1, 0, 0]});
    let e2 = serde_json::json!({"re": [0, 1, 0]});
    let one = write(dir.path(), "one.json", serde_json::json!({"vectors": [e1]}));
    let out = run(&["segre", "--stats", "bose", "--k", "3", p(&one)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tensor"]["re"][0], 1.0);
    assert_eq!(v["simple"], true);

    let same = write(dir.path(), "same.json", serde_json::json!({"vectors": [e1, e1]}));
    assert_eq!(run(&["segre", "--stats", "fermi", p(&same)]).status.code(), Some(4));

    let tab = write(dir.path(), "alpha.json", serde_json::json!({"rows": [[1, 2], [3]]}));
    let pair = write(dir.path(), "pair.json", serde_json::json!({"vectors": [e1, e2]}));
    let out_file = dir.path().join("out.json");
    let out = run(&["segre", "--stats", "alpha", "--tableau", p(&tab), "--out", p(&out_file), p(&pair)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let re: Vec<f64> = v["tensor"]["re"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    // ∝ e1⊗e1⊗e2 − e2⊗e1⊗e1
    assert!(re[1] > 0.0 && (re[1] + re[9]).abs() < 1e-15);
    assert_eq!(re.iter().filter(|x| x.abs() > 1e-15).count(), 2);
    assert!(out_file.exists());
}

#[test]
fn dims_examples() {
    let v = json(&run(&["dims", "--n", "2", "--k", "3"]));
    let col = v["rows"].as_array().unwrap().iter().find(|r| r["partition"] == serde_json::json!([1, 1, 1])).unwrap();
    assert_eq!(col["gl_dim"], 0);
    let v = json(&run(&["dims", "--n", "4", "--k", "2"]));
    assert_eq!(v["sum"], 16);
    assert_eq!(run(&["dims", "--n", "3", "--k", "12"]).status.code(), Some(2));
}

#[test]
fn decompose_ghz() {
    let dir = tempfile::tempdir().unwrap();
    let ghz = json(&run(&["gen", "--what", "ghz", "--n", "2", "--k", "3"]));
    let path = write(dir.path(), "ghz.json", ghz);
    let v = json(&run(&["decompose", p(&path)]));
    assert!(v["residual"].as_f64().unwrap() < 1e-10);
    let sym = json(&run(&["gen", "--what", "bose", "--n", "3", "--k", "3", "--seed", "4"]));
    let path = write(dir.path(), "sym.json", sym);
    let v = json(&run(&["decompose", p(&path)]));
    let comps = v["components"].as_array().unwrap();
    let total = v["norm_sq"].as_f64().unwrap();
    assert!((comps[0]["norm_sq"].as_f64().unwrap() - total).abs() < 1e-10 * total);
}

#[test]
fn roof_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    // ½|00⟩⟨00| + ½|11⟩⟨11|
    let mut re = vec![0.0; 16];
    re[0] = 0.5;
    re[15] = 0.5;
    let path = write(dir.path(), "rho.json", serde_json::json!({"dim": 4, "re": re, "n": 2, "k": 2}));
    let args = ["roof", "--stats", "dist", "--restarts", "20", "--seed", "5", p(&path)];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a)["upper_bound"].as_f64().unwrap() <= 1e-3);

    let mut bad = vec![0.0; 16];
    bad[0] = 2.0;
    let path = write(dir.path(), "bad.json", serde_json::json!({"dim": 4, "re": bad, "n": 2, "k": 2}));
    assert_eq!(run(&["roof", "--stats", "dist", p(&path)]).status.code(), Some(4));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--trials", "2", "--kmax", "3", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let out = run(&["verify", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    let out = run(&["--tol", "0.5", "verify", "--trials", "3", "--kmax", "3", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tolerance_from_environment() {
    let out = bin()
        .env("PARASTAT_TOL", "not-a-number")
        .args(["dims", "--n", "2", "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alpha_generator_is_member() {
    let dir = tempfile::tempdir().unwrap();
    let tab = write(dir.path(), "alpha.json", serde_json::json!({"rows": [[1, 2], [3]]}));
    let out = run(&["gen", "--what", "alpha", "--n", "3", "--tableau", p(&tab), "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let path = write(dir.path(), "v.json", json(&out));
    // membership is checked by `check`; failure would exit 4
    let out = run(&["check", "--stats", "alpha", "--tableau", p(&tab), p(&path)]);
    assert_eq!(out.status.code(), Some(0));
}
