//! End-to-end runs of the binary: solve, render, bench, and the documented
//! exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn guard2d(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_guard2d"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn solve_square_ilp_writes_verified_solution() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("solution.json");
    let output = guard2d(&[
        "solve",
        fixture("square.json").to_str().unwrap(),
        "--method",
        "ilp",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let doc = std::fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["method"], "ilp");
    assert_eq!(v["verify"]["ok"], true);
    let radius = v["radius"].as_f64().unwrap();
    assert!((radius - std::f64::consts::SQRT_2 / 2.0).abs() <= 0.09);
}

#[test]
fn solve_overrides_k_and_epsilon() {
    let output = guard2d(&[
        "solve",
        fixture("square.json").to_str().unwrap(),
        "--method",
        "gonzalez",
        "--k",
        "3",
        "--epsilon",
        "0.1",
    ]);
    assert!(output.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("solution document on stdout");
    assert_eq!(v["centers"].as_array().unwrap().len(), 3);
}

#[test]
fn cont_on_region_mode_is_a_usage_error() {
    let output = guard2d(&[
        "solve",
        fixture("museum.json").to_str().unwrap(),
        "--method",
        "cont",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("perimeter"), "stderr: {err}");
}

#[test]
fn missing_file_is_an_input_error() {
    let output = guard2d(&["solve", "/nonexistent/problem.json", "--method", "ilp"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn render_produces_svg_with_one_circle_per_center() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("solution.json");
    let svg = dir.path().join("figure.svg");
    let problem = fixture("plus.json");

    let output = guard2d(&[
        "solve",
        problem.to_str().unwrap(),
        "--method",
        "cont",
        "--out",
        sol.to_str().unwrap(),
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );

    let output = guard2d(&[
        "render",
        problem.to_str().unwrap(),
        sol.to_str().unwrap(),
        svg.to_str().unwrap(),
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let content = std::fs::read_to_string(&svg).unwrap();
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sol).unwrap()).unwrap();
    let centers = v["centers"].as_array().unwrap().len();
    assert_eq!(content.matches("<circle").count(), centers);

    // Re-render is byte-stable.
    let svg2 = dir.path().join("figure2.svg");
    let output = guard2d(&[
        "render",
        problem.to_str().unwrap(),
        sol.to_str().unwrap(),
        svg2.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert_eq!(content, std::fs::read_to_string(&svg2).unwrap());
}

#[test]
fn render_rejects_mismatched_documents() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("solution.json");
    // A solution for the square does not cover the plus shape.
    let output = guard2d(&[
        "solve",
        fixture("square.json").to_str().unwrap(),
        "--method",
        "ilp",
        "--out",
        sol.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let svg = dir.path().join("figure.svg");
    let output = guard2d(&[
        "render",
        fixture("plus.json").to_str().unwrap(),
        sol.to_str().unwrap(),
        svg.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn bench_cont_emits_csv_rows() {
    let output = guard2d(&[
        "bench",
        "cont",
        "--instances",
        "1",
        "--n-vertices",
        "12",
        "--n-list",
        "40",
        "--k-list",
        "2,4",
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let text = String::from_utf8(output.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "suite,seed,n_vertices,method,N,grid_m,grid_n,k,wall_time_ms,radius,gain_percent"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row.split(',').count(), 11);
        assert!(row.starts_with("cont,"));
    }
}

#[test]
fn bench_gain_reports_baseline_zero() {
    let output = guard2d(&[
        "bench",
        "gain",
        "--instances",
        "1",
        "--n-vertices",
        "16",
        "--k-list",
        "2",
        "--grid-list",
        "12",
        "--samples",
        "60",
    ]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let text = String::from_utf8(output.stdout).unwrap();
    let baseline: Vec<&str> = text.lines().filter(|l| l.contains(",gonzalez,")).collect();
    assert!(!baseline.is_empty());
    for row in baseline {
        assert!(row.trim_end().ends_with("0.000"), "row: {row}");
    }
}

#[test]
fn unknown_suite_fails() {
    let output = guard2d(&["bench", "nope"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn exhausted_solver_budget_exits_two() {
    let output = guard2d(&[
        "solve",
        fixture("square.json").to_str().unwrap(),
        "--method",
        "ilp",
        "--node-budget",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("budget"), "stderr: {err}");
}

#[test]
fn all_fixture_documents_parse() {
    for name in [
        "square.json",
        "plus.json",
        "castle.json",
        "museum.json",
        "building.json",
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        guard2d::load_problem(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
