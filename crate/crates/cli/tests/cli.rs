use std::path::Path;
use std::process::{Command, Output};

fn detcx(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detcx")).args(args).arg("--cache-dir").arg(cache).output().expect("spawn detcx")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_generic_4x3_shape() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["build", "--f", "4", "--g", "3", "--i", "0", "--a", "2", "--matrix", "generic"]);
    assert_eq!(o.status.code(), Some(0));
    let ranks: Vec<String> =
        stdout(&o).lines().skip(1).map(|l| l.split_whitespace().nth(2).unwrap().to_string()).collect();
    assert_eq!(ranks, ["3", "6", "3"]);
}

#[test]
fn build_csv_lists_positions() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["build", "--f", "9", "--g", "5", "--i", "1", "--a", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let ranks: Vec<u64> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(ranks, [24, 45, 126, 360, 360, 105]);
}

#[test]
fn degenerate_parameters_need_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["build", "--f", "3", "--g", "2", "--i", "0", "--a", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = detcx(dir.path(), &["build", "--f", "3", "--g", "2", "--i", "0", "--a", "0", "--allow-degenerate"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_matrix_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["build", "--i", "0", "--matrix", r#"{"f":2,"g":2,"entries":[["1"]]}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = detcx(dir.path(), &["build", "--i", "0", "--matrix", "/no/such/file.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = detcx(dir.path(), &["build", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn matrix_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, r#"{"f":3,"g":2,"entries":[["x1","x2"],["x3","x4"],["x5","x6"]]}"#).unwrap();
    let o = detcx(
        dir.path(),
        &["homology", "--i", "0", "--a", "1", "--matrix", path.to_str().unwrap(), "--degree-cutoff", "3"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("acyclic up to degree 3: yes"));
}

#[test]
fn homology_of_unit_matrix_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(
        dir.path(),
        &["homology", "--i", "0", "--a", "1", "--matrix", r#"{"f":2,"g":2,"entries":[["1","0"],["0","1"]]}"#],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("acyclic: yes"));
}

#[test]
fn homology_csv_has_header() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(
        dir.path(),
        &["homology", "--f", "4", "--g", "3", "--i", "0", "--a", "2", "--degree-cutoff", "2", "--format", "csv"],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("position,deg0,deg1,deg2"));
    assert_eq!(lines.next(), Some("0,3,36,228"));
}

#[test]
fn quick_verification_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["verify", "--profile", "quick", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn corrupted_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(detcx(dir.path(), &["build", "--f", "4", "--g", "3", "--i", "0", "--a", "2"]).status.code(), Some(0));
    let hook = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.extension().is_some_and(|x| x == "hook"))
        .expect("a cached hook file");
    let mut bytes = std::fs::read(&hook).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0x5a;
    std::fs::write(&hook, bytes).unwrap();
    std::fs::write(dir.path().join("stray.hook"), "junk").unwrap();

    let o = detcx(dir.path(), &["cache", "check"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("rebuilt"), "{err}");
    assert!(err.contains("removed"), "{err}");
    assert!(stdout(&o).contains("rebuilt 1  removed 1"));

    let o = detcx(dir.path(), &["cache", "check"]);
    assert!(stdout(&o).contains("rebuilt 0  removed 0"));
    let o = detcx(dir.path(), &["cache", "clear"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cache_path_honours_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = detcx(dir.path(), &["cache", "path"]);
    assert_eq!(stdout(&o).trim(), dir.path().display().to_string());
}
