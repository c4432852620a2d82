use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn minperim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minperim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, json).unwrap();
    path
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct Fixture {
    dir: TempDir,
    disk: PathBuf,
    ellipse: PathBuf,
    triangle: PathBuf,
}

fn fixture() -> Fixture {
    let dir = TempDir::new().unwrap();
    let disk = write(dir.path(), "disk.json", r#"{"type": "disk"}"#);
    let ellipse = write(dir.path(), "ellipse.json", r#"{"type": "ellipse_focus", "p": 1.0, "e": [0.4, 0.1]}"#);
    let triangle = write(
        dir.path(),
        "triangle.json",
        r#"{"type": "polygon", "vertices": [[2, -1], [-1, 2], [-1, -1]]}"#,
    );
    Fixture {
        dir,
        disk,
        ellipse,
        triangle,
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_vp_on_disk() {
    let f = fixture();
    let v = json_of(&minperim(&["solve-vp", "--body", s(&f.disk), "--json"]));
    assert!((v["a"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert!(v["b"].as_f64().unwrap().abs() < 1e-10);
    assert!((v["alpha"].as_f64().unwrap() - PI * 6f64.sqrt() / 9.0).abs() < 1e-9);
    assert_eq!(v["r_samples"].as_array().unwrap().len(), 2048);
    assert_eq!(v["residuals"].as_array().unwrap().len(), 3);
}

#[test]
fn exact_square_on_disk() {
    let f = fixture();
    let v = json_of(&minperim(&["exact", "--n", "4", "--body", s(&f.disk), "--json"]));
    assert!((v["perimeter"].as_f64().unwrap() - 4.0 * PI.sqrt()).abs() < 1e-12);
    assert_eq!(v["certified"], Value::Bool(true));
    assert_eq!(v["method"], "exact");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert!(v.get("special_edge").is_none());
}

#[test]
fn body_is_rescaled_to_unit_area() {
    let f = fixture();
    let big = write(f.dir.path(), "big.json", r#"{"type": "disk", "radius": 3.0}"#);
    let a = json_of(&minperim(&["exact", "--n", "5", "--body", s(&f.disk), "--json"]));
    let b = json_of(&minperim(&["exact", "--n", "5", "--body", s(&big), "--json"]));
    assert!((a["perimeter"].as_f64().unwrap() - b["perimeter"].as_f64().unwrap()).abs() < 1e-9);
}

#[test]
fn reflect_matches_negated_body() {
    let f = fixture();
    let negated = write(
        f.dir.path(),
        "negated.json",
        r#"{"type": "polygon", "vertices": [[-2, 1], [1, -2], [1, 1]]}"#,
    );
    let a = json_of(&minperim(&["exact", "--n", "5", "--body", s(&f.triangle), "--reflect", "--json"]));
    let b = json_of(&minperim(&["exact", "--n", "5", "--body", s(&negated), "--json"]));
    assert!((a["perimeter"].as_f64().unwrap() - b["perimeter"].as_f64().unwrap()).abs() < 1e-12);
}

#[test]
fn greedy_and_shape_guided() {
    let f = fixture();
    let g = json_of(&minperim(&["greedy", "--n", "12", "--body", s(&f.ellipse), "--json"]));
    assert_eq!(g["vertices"].as_array().unwrap().len(), 12);
    let sg = json_of(&minperim(&["shape-guided", "--n", "40", "--body", s(&f.ellipse), "--json"]));
    assert_eq!(sg["method"], "shape_guided");
    assert_eq!(sg["edges"].as_array().unwrap().len(), 40);
    let with_shape = json_of(&minperim(&[
        "shape-guided",
        "--n",
        "40",
        "--body",
        s(&f.ellipse),
        "--shape",
        s(&f.disk),
        "--json",
    ]));
    assert_eq!(with_shape["vertices"].as_array().unwrap().len(), 40);
}

#[test]
fn alpha_reports_circle_limit() {
    let f = fixture();
    let v = json_of(&minperim(&["alpha", "--body", s(&f.ellipse), "--json"]));
    assert_eq!(v["circle_limit"], Value::Bool(true));
    assert!(v["relative_gap"].as_f64().unwrap() < 1e-8);
    let t = json_of(&minperim(&["alpha", "--body", s(&f.triangle), "--json"]));
    assert_eq!(t["circle_limit"], Value::Bool(false));
}

#[test]
fn converge_writes_deterministic_records() {
    let f = fixture();
    let run = |out: &str| {
        let out_dir = f.dir.path().join(out);
        let o = minperim(&[
            "converge",
            "--body",
            s(&f.disk),
            "--n",
            "4,8",
            "--method",
            "exact",
            "--out",
            s(&out_dir),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(out_dir.join("summary.txt").exists());
        fs::read_to_string(out_dir.join("records.jsonl")).unwrap()
    };
    let first = run("a");
    assert_eq!(first, run("b"));
    let rec: Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    assert_eq!(rec["n"], 4);
    assert!((rec["scaled"].as_f64().unwrap() - PI.sqrt() / 2.0).abs() < 1e-12);
    for line in first.lines() {
        let r: Value = serde_json::from_str(line).unwrap();
        assert!(r["scaled"].as_f64().unwrap() >= r["density_lower_bound"].as_f64().unwrap() - 1e-12);
    }
}

#[test]
fn converge_from_config_and_empty_sweep() {
    let f = fixture();
    let out_dir = f.dir.path().join("cfg_out");
    let cfg = write(
        f.dir.path(),
        "config.json",
        &serde_json::json!({
            "body_path": f.disk,
            "n_values": [],
            "output_dir": out_dir,
        })
        .to_string(),
    );
    let o = minperim(&["converge", "--config", s(&cfg), "--json"]);
    assert_eq!(json_of(&o), serde_json::json!([]));
    assert_eq!(fs::read_to_string(out_dir.join("records.jsonl")).unwrap(), "");
}

#[test]
fn render_and_limit_shape_write_svg() {
    let f = fixture();
    let out = f.dir.path().join("figs");
    let o = minperim(&["render", "--n", "60", "--body", s(&f.ellipse), "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = fs::read_to_string(out.join("polygon_60.svg")).unwrap();
    assert_eq!(svg.matches("<path").count(), 2);
    assert!(svg.contains("class=\"polygon\"") && svg.contains("class=\"limit\""));

    let lim = out.join("limit.svg");
    let v = json_of(&minperim(&["limit-shape", "--body", s(&f.triangle), "--svg", s(&lim), "--json"]));
    assert_eq!(v["convex"], Value::Bool(true));
    assert!(fs::read_to_string(lim).unwrap().starts_with("<svg"));
}

#[test]
fn validation_errors_exit_2() {
    let f = fixture();
    let bad = write(f.dir.path(), "bad.json", r#"{"type": "polygon", "vertices": [[1, 0], [0, 1], [-1, 0], [0.5, 0.2]]}"#);
    let cases: Vec<Vec<&str>> = vec![
        vec!["solve-vp"],
        vec!["solve-vp", "--body", "/nonexistent/body.json"],
        vec!["solve-vp", "--body", s(&bad)],
        vec!["solve-vp", "--body", s(&f.disk), "--grid", "1000"],
        vec!["exact", "--n", "11", "--body", s(&f.disk)],
        vec!["greedy", "--n", "2", "--body", s(&f.disk)],
        vec!["converge", "--body", s(&f.disk), "--n", "8,4"],
        vec!["converge", "--body", s(&f.disk), "--n", "4", "--reflect"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = minperim(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn exhausted_budget_exits_3_with_uncertified_result() {
    let f = fixture();
    let o = minperim(&["exact", "--n", "10", "--budget", "5", "--body", s(&f.disk), "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["certified"], Value::Bool(false));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}
