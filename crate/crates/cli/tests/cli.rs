//! End-to-end tests of the binary: exit codes, JSON shapes and the
//! documented subcommands.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eckardt"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("eckardt-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn lattice_info_on_m() {
    let m = eckardt_core::cubic_pair::build_m();
    let path = write_temp("m.json", &m.to_json().unwrap());
    let out = bin()
        .args(["lattice", "info", "--file"])
        .arg(&path)
        .arg("--format")
        .arg("json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["det"], "64");
    assert_eq!(v["signature"], serde_json::json!([7, 0, 0]));
    assert_eq!(v["even"], false);
    assert_eq!(v["discriminant_group_orders"].as_array().unwrap().len(), 6);
}

#[test]
fn lattice_info_rejects_asymmetric_input() {
    let path = write_temp(
        "bad.json",
        r#"{"labels": ["a", "b"], "gram": [[1, 2], [0, 1]]}"#,
    );
    let out = bin()
        .args(["lattice", "info", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lattice_roots_on_d4_cubed() {
    let d4 = eckardt_core::GramLattice::root_d(4).unwrap();
    let l = eckardt_core::lattice::direct_sum(&[&d4, &d4, &d4]);
    let path = write_temp("d4cubed.json", &l.to_json().unwrap());
    let out = bin()
        .args(["lattice", "roots", "--norm", "2", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "72");
}

#[test]
fn lattice_discriminant_of_d4() {
    let d4 = eckardt_core::GramLattice::root_d(4).unwrap();
    let path = write_temp("d4.json", &d4.to_json().unwrap());
    let out = bin()
        .args(["lattice", "discriminant", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["orders"], serde_json::json!([2, 2]));
    assert_eq!(v["quadratic"], serde_json::json!(["1", "1"]));
}

#[test]
fn lattice_complement_roundtrip() {
    // D4 inside E8 via the four middle simple roots
    let e8 = eckardt_core::GramLattice::root_e(8).unwrap();
    let images = eckardt_core::IntMatrix::from_rows(&[
        vec![0, 1, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0, 0],
    ]);
    let emb = eckardt_core::LatticeEmbedding::from_images(&e8, images).unwrap();
    let path = write_temp("d4_in_e8.json", &emb.to_json().unwrap());
    let out = bin()
        .args(["lattice", "complement", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let comp = eckardt_core::LatticeEmbedding::from_json(&stdout(&out)).unwrap();
    assert_eq!(comp.sub.rank(), 4);
    assert_eq!(comp.sub.det(), eckardt_core::matrix::int(4));
}

#[test]
fn verify_subset_and_full_schema() {
    let out = bin()
        .args(["verify-paper", "--only", "bruinier", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["status"], "pass");
    assert!(entries[0]["paper_anchor"].is_string());
    assert!(entries[0]["detail"].is_string());
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn wps_classify_emits_seventeen_rows() {
    let out = bin()
        .args([
            "wps", "classify", "--dim", "4", "--fermat", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 17);
    let n2 = rows.iter().find(|r| r["case"] == "N2").unwrap();
    assert_eq!(n2["weights"], serde_json::json!([1, 2, 2, 2, 2, 3]));
    assert_eq!(n2["degree"], 6);
    assert_eq!(n2["h22_prim"], 14);
}

#[test]
fn wps_hodge_of_n3() {
    let out = bin()
        .args(["wps", "hodge", "--weights", "3,3,4,4,4,6", "--degree", "12"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hodge_prim"], serde_json::json!([0, 1, 2, 1, 0]));
    assert_eq!(v["quasi_k3"], true);
}

#[test]
fn wps_partitions_count() {
    let out = bin()
        .args(["wps", "partitions", "--target", "1", "--parts", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 14);
}

#[test]
fn wps_hodge_rejects_fermat_free_family() {
    let out = bin()
        .args([
            "wps",
            "hodge",
            "--weights",
            "1,4,5,5,10,15",
            "--degree",
            "20",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
