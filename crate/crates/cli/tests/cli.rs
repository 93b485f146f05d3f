use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qg_core::simplicial::random_pure_complex;
use serde_json::Value;
use tempfile::TempDir;

fn qg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qg")).args(args).output().expect("qg runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write_complex(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn hollow(dir: &Path) -> PathBuf {
    write_complex(dir, "hollow.json", r#"{"m": 6, "facets": [[0, 1, 3], [1, 2, 4], [0, 2, 5]]}"#)
}

#[test]
fn turan_report_to_file() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("r.json");
    let out = qg(&["turan", "--orders", "2,2,2", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(r["hilbert"], serde_json::json!([1, 14, 24, 14, 1]));
    assert_eq!(r["presented_by_quadrics"], true);
    assert_eq!(r["codimension"], 14);
}

#[test]
fn turan_counterexample_and_csv() {
    let r = json(&qg(&["turan", "--orders", "6,6,6"]));
    assert_eq!(r["hilbert"], serde_json::json!([1, 234, 216, 234, 1]));
    assert_eq!(r["totally_nonunimodal"], true);
    let csv = qg(&["turan", "--orders", "6,6,6", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "k,h,h_0k,h_1k\n0,1,1,0\n1,234,18,216\n2,216,108,108\n3,234,216,18\n4,1,0,1\n");
}

#[test]
fn turan_rejects_small_orders() {
    assert_eq!(code(&qg(&["turan", "--orders", "1,2"])), 2);
    assert_eq!(code(&qg(&["turan", "--orders", "3"])), 2);
}

#[test]
fn analyze_complex_files() {
    let dir = TempDir::new().unwrap();
    let r = json(&qg(&["analyze", "--complex", hollow(dir.path()).to_str().unwrap()]));
    assert_eq!(r["presented_by_quadrics"], false);
    assert_eq!(r["certificate"]["kind"], "non_face_clique");
    assert_eq!(r["certificate"]["face"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["generator_counts"]["by_degree"]["3"], 4);

    let simplex = write_complex(dir.path(), "simplex.json", r#"{"m": 3, "facets": [[2, 0, 1]]}"#);
    let r = json(&qg(&["analyze", "--complex", simplex.to_str().unwrap()]));
    assert_eq!(r["presented_by_quadrics"], true);
    assert_eq!(r["generators"]["class_a"].as_array().unwrap().len(), 4);
}

#[test]
fn analyze_reports_parse_position() {
    let dir = TempDir::new().unwrap();
    let bad = write_complex(dir.path(), "bad.json", "{\"m\": 4,\n \"facets\": [[0, 1], [2, 3]\n");
    let out = qg(&["analyze", "--complex", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));
    let nonpure = write_complex(dir.path(), "np.json", r#"{"m": 3, "facets": [[0, 1], [0, 1, 2]]}"#);
    assert_eq!(code(&qg(&["analyze", "--complex", nonpure.to_str().unwrap()])), 2);
    assert_eq!(code(&qg(&["analyze", "--complex", "/nonexistent/complex.json"])), 2);
}

#[test]
fn oracle_passes_on_small_instances() {
    let out = qg(&["oracle", "--orders", "2,2,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "passed");

    let dir = TempDir::new().unwrap();
    for seed in 0..4 {
        let c = random_pure_complex(3, 5, 4, seed).unwrap();
        let path = dir.path().join(format!("r{seed}.json"));
        std::fs::write(&path, serde_json::to_string(&c.to_file()).unwrap()).unwrap();
        assert_eq!(code(&qg(&["oracle", "--complex", path.to_str().unwrap()])), 0, "seed {seed}");
    }
}

#[test]
fn oracle_guard_writes_partial_report() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("big.json");
    let out = qg(&["oracle", "--orders", "6,6,6", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(r["status"], "instance_too_large");
    assert_eq!(r["guard"]["degree"], 3);
    // dim Q_2 = C(235, 2) = 27495 fits under the default guard
    assert_eq!(r["degrees"][2]["dim_q"], 27495);
    assert_eq!(r["degrees"][2]["h_brute"], 216);
}

#[test]
fn wlp_exit_codes() {
    let r = qg(&["wlp", "--orders", "6,6,6"]);
    assert_eq!(code(&r), 1);
    let v = json(&r);
    assert_eq!(v["verdict"], "PROVEN_FAIL");
    assert_eq!(v["obstructions"], serde_json::json!(["h1 > h2"]));

    let dir = TempDir::new().unwrap();
    let edge = write_complex(dir.path(), "edge.json", r#"{"m": 2, "facets": [[0, 1]]}"#);
    assert_eq!(code(&qg(&["wlp", "--complex", edge.to_str().unwrap()])), 0);
    assert_eq!(code(&qg(&["wlp", "--orders", "2,2,2", "--trials", "0"])), 2);
    assert_eq!(code(&qg(&["wlp", "--orders", "2,2,2", "--format", "csv"])), 2);
}

#[test]
fn wlp_not_witnessed_on_octahedron() {
    // multiplication A_1 -> A_2 has rank 13 < 14 for every sampled form
    let out = qg(&["wlp", "--orders", "2,2,2", "--seed", "9"]);
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["levels"][1]["achieved"], 13);
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &Path| vec!["wlp".to_string(), "--orders".into(), "2,3,2".into(), "--seed".into(), "5".into(), "--out".into(), p.to_str().unwrap().into()];
    let run = |p: &Path, threads: &str| {
        let status = Command::new(env!("CARGO_BIN_EXE_qg")).args(args(p)).env("QG_THREADS", threads).status().unwrap();
        assert!(matches!(status.code(), Some(0 | 4)));
    };
    run(&a, "1");
    run(&b, "4");
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn bad_thread_count_is_rejected() {
    let out = Command::new(env!("CARGO_BIN_EXE_qg")).args(["hunt", "4"]).env("QG_THREADS", "zero").output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn slp_probe_and_guard() {
    let dir = TempDir::new().unwrap();
    let edge = write_complex(dir.path(), "edge.json", r#"{"m": 2, "facets": [[0, 1]]}"#);
    assert_eq!(code(&qg(&["slp", "--complex", edge.to_str().unwrap()])), 0);
    assert_eq!(code(&qg(&["slp", "--orders", "6,6,6", "--max-level-dim", "100"])), 3);
}

#[test]
fn hunt_finds_smallest_equal_orders() {
    let r = json(&qg(&["hunt", "4"]));
    assert_eq!(r["orders"], serde_json::json!([6, 6, 6]));
    assert_eq!(r["codimension"], 234);
    assert_eq!(r["presented_by_quadrics"], true);
    // s(6,6,6,6) = (24, 216, 864, 1296); a = 5 gives h1 = 645 < h2 = 650
    let r = json(&qg(&["hunt", "5"]));
    assert_eq!(r["orders"], serde_json::json!([6, 6, 6, 6]));
    assert_eq!(r["hilbert"], serde_json::json!([1, 1320, 1080, 1080, 1320, 1]));
    assert_eq!(code(&qg(&["hunt", "3"])), 2);
}
