use std::path::Path;
use std::process::{Command, Output};
use tempex::cli_io::{parse_instance, CSV_HEADER};

fn tempex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tempex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn stats_reports_exact_degree() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.tgf");
    let gen = tempex(&["generate", "--kind", "rotating-star", "--n", "8", "--horizon", "64", "--out", &g]);
    assert_eq!(gen.status.code(), Some(0));
    let stats = tempex(&["stats", &g]);
    assert_eq!(stats.status.code(), Some(0));
    let text = stdout(&stats);
    assert!(text.contains("n = 8\n"));
    assert!(text.contains("T = 64\n"));
    assert!(text.contains("D = 7\n"));
    assert!(text.contains("always_connected = true\n"));
}

#[test]
fn explore_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.tgf");
    let w = path(dir.path(), "w.walk");
    let report = path(dir.path(), "report.txt");
    // no --horizon: sized so that explore always has room
    let gen = tempex(&["generate", "--kind", "rotating-star", "--n", "8", "--spec-only", "--out", &g]);
    assert_eq!(gen.status.code(), Some(0));
    let header = std::fs::read_to_string(&g).unwrap();
    assert!(header.lines().any(|l| l.starts_with("gen rotating-star n=8 horizon=")));

    let run = tempex(&["explore", "--algo", "thm1", "--in", &g, "--start", "0", "--out", &w, "--report", &report]);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(std::fs::read_to_string(&report).unwrap().contains("algo = thm1"));

    let check = tempex(&["validate", "--graph", &g, "--walk", &w, "--start", "0", "--check-bound"]);
    assert_eq!(check.status.code(), Some(0), "{}", String::from_utf8_lossy(&check.stderr));

    let wrong_start = tempex(&["validate", "--graph", &g, "--walk", &w, "--start", "3"]);
    assert_eq!(wrong_start.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&wrong_start.stderr).contains("wrong-start\t1\t"));
}

#[test]
fn greedy_and_oracle_agree_on_validity() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.tgf");
    let gen = tempex(&[
        "generate", "--kind", "random-trees", "--n", "6", "--horizon", "30", "--seed", "4", "--out", &g,
    ]);
    assert_eq!(gen.status.code(), Some(0));
    for algo in ["greedy", "oracle"] {
        let w = path(dir.path(), &format!("{algo}.walk"));
        let run = tempex(&["explore", "--algo", algo, "--in", &g, "--out", &w]);
        assert_eq!(run.status.code(), Some(0), "{algo}");
        assert!(stdout(&run).contains(&format!("algo = {algo}")));
        let check = tempex(&["validate", "--graph", &g, "--walk", &w, "--start", "0"]);
        assert_eq!(check.status.code(), Some(0), "{algo}");
    }
}

#[test]
fn oracle_refuses_large_instances() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.tgf");
    let w = path(dir.path(), "w.walk");
    tempex(&["generate", "--kind", "random-trees", "--n", "20", "--horizon", "40", "--seed", "1", "--out", &g]);
    let run = tempex(&["explore", "--algo", "oracle", "--in", &g, "--start", "0", "--out", &w]);
    assert_eq!(run.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&run.stderr).contains("too large"));
}

#[test]
fn thm1_reports_short_horizon() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.tgf");
    let w = path(dir.path(), "w.walk");
    tempex(&["generate", "--kind", "rotating-star", "--n", "8", "--horizon", "64", "--out", &g]);
    let run = tempex(&["explore", "--in", &g, "--out", &w]);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("steps required"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "out.csv");
    assert_eq!(tempex(&["bench", "--suite", "", "--csv", &csv]).status.code(), Some(2));
    assert_eq!(tempex(&["bench", "--suite", "nope", "--csv", &csv]).status.code(), Some(2));
    assert_eq!(tempex(&["stats", &path(dir.path(), "missing.tgf")]).status.code(), Some(2));
    assert_eq!(tempex(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        tempex(&["generate", "--kind", "grid-leaves", "--rows", "2", "--out", &csv]).status.code(),
        Some(2)
    );
    assert_eq!(tempex(&["--help"]).status.code(), Some(0));
}

#[test]
fn bench_smoke_suite_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "smoke.csv");
    let run = Command::new(env!("CARGO_BIN_EXE_tempex"))
        .args(["bench", "--suite", "smoke", "--csv", &csv])
        .env("TEMPEX_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for r in &rows {
        assert_eq!(r.len(), 10);
        if r[5] == "thm1" {
            assert!(r[7].parse::<u64>().unwrap() <= r[8].parse::<u64>().unwrap());
        }
        let secs = r[9];
        assert_eq!(secs.split_once('.').unwrap().1.len(), 3);
    }
}

#[test]
fn generated_body_matches_spec() {
    let dir = tempfile::tempdir().unwrap();
    let full = path(dir.path(), "full.tgf");
    let spec = path(dir.path(), "spec.tgf");
    let common = ["--kind", "bounded-degree", "--n", "12", "--horizon", "20", "--d", "4", "--seed", "9"];
    let mut a = vec!["generate"];
    a.extend(common);
    a.extend(["--out", &full]);
    let mut b = a.clone();
    b.pop();
    b.push(&spec);
    b.push("--spec-only");
    assert_eq!(tempex(&a).status.code(), Some(0));
    assert_eq!(tempex(&b).status.code(), Some(0));
    let from_body = parse_instance(&std::fs::read_to_string(&full).unwrap()).unwrap();
    let from_spec = parse_instance(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    assert_eq!(from_body, from_spec);
}
