use std::path::Path;
use std::process::{Command, Output};

use cyclegap::io::{read, write, FormatTag};
use cyclegap::spectrum::cycles_up_to;
use cyclegap::{build_counterexample, fixtures, FamilyParams};
use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> (i32, Value) {
    run_env(dir, args, &[])
}

fn run_env(dir: &Path, args: &[&str], env: &[(&str, &Path)]) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclegap"));
    cmd.args(args).current_dir(dir).env_remove("CYCLEGAP_DATA_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out: Output = cmd.output().unwrap();
    let code = out.status.code().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn write_fixture(dir: &Path, name: &str, g: &cyclegap::PlaneGraph) {
    std::fs::write(dir.join(name), write(g, FormatTag::PlanarCode).unwrap()).unwrap();
}

#[test]
fn generate_r0_t_min() {
    let dir = TempDir::new().unwrap();
    let (code, rep) =
        run(dir.path(), &["generate", "--r", "0", "--t-min", "--format", "planar_code", "--output", "g0.pc"]);
    assert_eq!(code, 0);
    assert_eq!(rep["schema_version"], 1);
    assert_eq!(rep["exit_code"], 0);
    assert_eq!(rep["results"]["k"], 6);
    assert_eq!(rep["results"]["gap_interval"], serde_json::json!([6, 14]));
    let bytes = std::fs::read(dir.path().join("g0.pc")).unwrap();
    let g = &read(&bytes, FormatTag::PlanarCode).unwrap()[0];
    let lib = build_counterexample(FamilyParams::with_t_min(0).unwrap()).unwrap();
    assert_eq!(g.rotation_lists(), lib.rotation_lists());
    assert_eq!(rep["results"]["vertices"], lib.vertex_count());
}

#[test]
fn generate_r1_reports_gap() {
    let dir = TempDir::new().unwrap();
    let (code, rep) = run(dir.path(), &["generate", "--r", "1", "--t-min"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["gap_interval"], serde_json::json!([8, 18]));
    assert!(dir.path().join("G_r1_t4.pc").exists());
}

#[test]
fn generate_usage_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(dir.path(), &["generate", "--r", "0", "--t", "0"]).0, 2);
    let (code, rep) = run(dir.path(), &["generate", "--r", "3", "--t", "1"]);
    assert_eq!(code, 2);
    assert!(rep["error"].as_str().unwrap().contains("boundary"));
}

#[test]
fn check_reports_violation_as_data() {
    let dir = TempDir::new().unwrap();
    run(dir.path(), &["generate", "--r", "0", "--t-min", "--output", "g0.pc"]);
    let (code, rep) = run(dir.path(), &["check", "g0.pc", "--k", "6"]);
    assert_eq!(code, 0);
    let g = &rep["results"]["graphs"][0];
    assert_eq!(g["merker_holds"], false);
    assert_eq!(g["three_connected"], true);
    assert_eq!(g["message"], "VIOLATION at k=6");
}

#[test]
fn check_cube_holds() {
    let dir = TempDir::new().unwrap();
    write_fixture(dir.path(), "cube.pc", &fixtures::cube());
    let (code, rep) = run(dir.path(), &["check", "cube.pc", "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["graphs"][0]["merker_holds"], true);
}

#[test]
fn check_truncated_input() {
    let dir = TempDir::new().unwrap();
    let bytes = write(&fixtures::cube(), FormatTag::PlanarCode).unwrap();
    std::fs::write(dir.path().join("broken.pc"), &bytes[..bytes.len() - 4]).unwrap();
    assert_eq!(run(dir.path(), &["check", "broken.pc"]).0, 3);
    assert_eq!(run(dir.path(), &["check", "missing.pc"]).0, 3);
}

#[test]
fn check_non_polyhedral_fails_verification() {
    let dir = TempDir::new().unwrap();
    write_fixture(dir.path(), "long.pc", &fixtures::prism_with_long_rung());
    let (code, rep) = run(dir.path(), &["check", "long.pc"]);
    assert_eq!(code, 1);
    assert_eq!(rep["results"]["graphs"][0]["cut"]["vertices"], serde_json::json!([0, 3]));
}

#[test]
fn spectrum_cube() {
    let dir = TempDir::new().unwrap();
    write_fixture(dir.path(), "cube.pc", &fixtures::cube());
    let (code, rep) = run(dir.path(), &["spectrum", "cube.pc", "--upto", "8"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["graphs"][0]["lengths"], serde_json::json!([4, 6, 8]));
}

#[test]
fn spectrum_of_family_graph() {
    let dir = TempDir::new().unwrap();
    run(dir.path(), &["generate", "--r", "0", "--t-min", "--output", "g0.pc"]);
    let (code, rep) = run(dir.path(), &["spectrum", "g0.pc", "--upto", "15"]);
    assert_eq!(code, 0);
    let g = build_counterexample(FamilyParams::with_t_min(0).unwrap()).unwrap();
    let lib: Vec<usize> = cycles_up_to(&g, 15).unwrap().lengths.into_iter().collect();
    assert_eq!(lib, vec![3, 4, 5, 15]);
    assert_eq!(rep["results"]["graphs"][0]["lengths"], serde_json::json!(lib));
    assert_eq!(rep["results"]["graphs"][0]["gaps"], serde_json::json!([[6, 14]]));
    assert_eq!(run(dir.path(), &["spectrum", "g0.pc", "--upto", "30"]).0, 2);
}

#[test]
fn gadget_validate_shipped() {
    let dir = TempDir::new().unwrap();
    let (code, rep) = run(dir.path(), &["gadget-validate", "A", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["circumference"], 5);
    let (code, rep) = run(dir.path(), &["gadget-validate", "B", "3"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["circumference"], 11);
    let (code, rep) = run(dir.path(), &["gadget-validate", "H", "3"]);
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["boundary_lengths"], serde_json::json!([9, 9]));
}

#[test]
fn gadget_validate_corrupted_file() {
    let dir = TempDir::new().unwrap();
    let text = cyclegap::gadget::data::shipped_text(cyclegap::TranscriptionKind::A, 3).unwrap();
    // Swap the two port labels on the bottom rung.
    let bad = text.replace("P2", "PX").replace("P3", "P2").replace("PX", "P3");
    std::fs::write(dir.path().join("A_3.gadget"), bad).unwrap();
    let (code, rep) = run_env(dir.path(), &["gadget-validate", "A", "3"], &[("CYCLEGAP_DATA_DIR", dir.path())]);
    assert_eq!(code, 1);
    assert!(rep["error"].as_str().unwrap().contains("Euler"), "{rep}");
    let (code, _) = run(dir.path(), &["gadget-validate", "A", "3", "--file", "A_3.gadget"]);
    assert_eq!(code, 1);
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    write_fixture(dir.path(), "cube.pc", &fixtures::cube());
    let once = || {
        Command::new(env!("CARGO_BIN_EXE_cyclegap"))
            .args(["check", "cube.pc", "--k", "4"])
            .current_dir(dir.path())
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(once(), once());
}
