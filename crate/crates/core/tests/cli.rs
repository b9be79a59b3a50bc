use std::path::Path;
use std::process::{Command, Output};

fn grh(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grh"))
        .args(args)
        .current_dir(dir)
        .env_remove("GRH_THREADS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&grh(dir.path(), &["nope"])), 2);
    assert_eq!(code(&grh(dir.path(), &["partitions", "count", "--k", "x", "--max-weight", "4"])), 2);
    assert_eq!(code(&grh(dir.path(), &["partitions", "density", "--k", "2", "--max-weight", "4", "--pred", "bogus"])), 2);
    assert_eq!(code(&grh(dir.path(), &["det", "cauchy", "--x", "1,2", "--y", "2,3"])), 2);
    assert_eq!(code(&grh(dir.path(), &["grassmann", "sample", "--n", "3", "--k", "3", "--count", "1", "--seed", "1"])), 2);
    assert_eq!(code(&grh(dir.path(), &["accept", "--suite", "most"])), 2);
    assert_eq!(code(&grh(dir.path(), &["--help"])), 0);
}

#[test]
fn partitions_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = grh(dir.path(), &["partitions", "density", "--k", "2", "--max-weight", "20", "--pred", "l2le:2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("# provenance: {"));
    assert!(text.lines().any(|l| l == "20,36,5,9"));
}

#[test]
fn determinants_print_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let o = grh(dir.path(), &["det", "factorial", "--k", "0", "--n", "1", "--verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("-1/2"));
    let o = grh(dir.path(), &["det", "cauchy", "--x", "0,1", "--y", "-1,-2", "--verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("1/12"));
}

#[test]
fn euler_kernel_column_is_constant() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("euler.json"),
        r#"{"k":2,"terms":[{"dx":[1,0],"x":[1,0],"c":"1/1"},{"dx":[0,1],"x":[0,1],"c":"1/1"}]}"#,
    )
    .unwrap();
    let o = grh(
        dir.path(),
        &["pde", "kernel-dims", "--op", "euler.json", "--m-max", "20", "--mu-check", "--density-bound", "--out", "k.csv", "--report", "r.json"],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(dir.path().join("k.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "m,dimP,dimKer,density_num,density_den");
    assert_eq!(rows.len(), 22);
    assert!(rows[1..].iter().all(|r| r.split(',').nth(2) == Some("1")));
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["report"]["density_bound"]["holds_at_all_m"], true);
    assert!(report["provenance"]["input_digest"].is_string());
}

#[test]
fn spectrum_is_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let args = |threads: &'static str| {
        vec![
            "--threads", threads, "transform", "spectrum", "--op", "cos", "--n", "4", "--k", "2", "--max-weight", "4",
            "--samples", "40000", "--seed", "7", "--out", "table.json",
        ]
    };
    assert_eq!(code(&grh(dir.path(), &args("1"))), 0);
    let first = std::fs::read(dir.path().join("table.json")).unwrap();
    assert_eq!(code(&grh(dir.path(), &args("3"))), 0);
    let second = std::fs::read(dir.path().join("table.json")).unwrap();
    assert_eq!(first, second);

    let o = grh(dir.path(), &["transform", "classify", "--table", "table.json", "--pred", "cos_image:1"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\"(4,0)\""));
    // Predicting that everything vanishes contradicts the estimates.
    let o = grh(dir.path(), &["transform", "classify", "--table", "table.json", "--pred", "not:all"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn zonal_and_grassmann_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let o = grh(dir.path(), &["zonal", "build", "--n", "5", "--k", "2", "--max-weight", "4", "--samples", "100000", "--seed", "3", "--out", "f.json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("f.json")).unwrap()).unwrap();
    assert_eq!(v["family"]["polys"].as_array().unwrap().len(), 4);
    assert_eq!(v["provenance"]["config"]["seed"], 3);

    let o = grh(dir.path(), &["grassmann", "flow", "--n", "4", "--k", "2", "--seed", "2", "--count", "2", "--eps", "1,0.5"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<String> = stdout(&o).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(rows[0], "sample,eps,y1,y2,eta,inv_abs_cos");
    assert_eq!(rows.len(), 5);
}

#[test]
fn tiny_samples_are_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let o = grh(dir.path(), &["zonal", "build", "--n", "6", "--k", "3", "--max-weight", "8", "--samples", "64", "--seed", "1", "--out", "f.json"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exact_acceptance_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = grh(dir.path(), &["accept", "--suite", "exact"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("[PASS]")).count(), 6);
}
