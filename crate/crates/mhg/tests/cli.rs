use std::path::Path;
use std::process::{Command, Output};

fn mhg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhg")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bounds_for_seven_five_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = mhg(dir.path(), &["bounds", "--set", "7,5,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "delta 11\ndelta_D 21\ndelta_C 8\n");
}

#[test]
fn gen_then_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let o = mhg(dir.path(), &["gen", "--set", "4,2", "--variant", "c-min", "--out", "h.mhg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "vertices 6\nc_edges 4\nd_edges 7\n");
    let o = mhg(dir.path(), &["spectrum", "h.mhg"]);
    assert_eq!(stdout(&o), "2 1\n4 1\n");
}

#[test]
fn gen_without_out_writes_mhg_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let o = mhg(dir.path(), &["gen", "--set", "3,2", "--variant", "d-min"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "MHG 1\nV 3\nL 0 (1,1)\nL 1 (2,2)\nL 2 (3,2)\nD 0 1\nD 0 2\n");
    assert_eq!(String::from_utf8(o.stderr).unwrap(), "vertices 3\nc_edges 0\nd_edges 2\n");
}

#[test]
fn verify_with_minimality() {
    let dir = tempfile::tempdir().unwrap();
    mhg(dir.path(), &["gen", "--set", "4,2", "--variant", "c-min", "--out", "h.mhg"]);
    let o = mhg(dir.path(), &["verify", "h.mhg", "--set", "4,2", "--minimality", "C"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict one-realization\n"));
    assert!(stdout(&o).contains("minimality C: 4 edges, 0 redundant\n"));
}

#[test]
fn redundant_edges_fail_minimality() {
    let dir = tempfile::tempdir().unwrap();
    mhg(dir.path(), &["gen", "--set", "4,2", "--variant", "full", "--out", "h.mhg"]);
    let o = mhg(dir.path(), &["verify", "h.mhg", "--set", "4,2", "--minimality", "D"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("redundant D-edge"));
}

#[test]
fn wrong_target_is_a_verdict_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    mhg(dir.path(), &["gen", "--set", "5,3", "--variant", "d-min", "--out", "h.mhg"]);
    let o = mhg(dir.path(), &["verify", "h.mhg", "--set", "5,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict not a one-realization"));
}

#[test]
fn operational_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.mhg"), "MHG 1\nV 2\nD 0 2\n").unwrap();
    let o = mhg(dir.path(), &["spectrum", "bad.mhg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));

    assert_eq!(mhg(dir.path(), &["spectrum", "missing.mhg"]).status.code(), Some(2));
    assert_eq!(mhg(dir.path(), &["bounds", "--set", "3,1"]).status.code(), Some(2));
    assert_eq!(mhg(dir.path(), &["min-search", "--vertices", "5", "--set", "3", "--kind", "D"]).status.code(), Some(2));

    mhg(dir.path(), &["gen", "--set", "7,2", "--variant", "full", "--out", "h.mhg"]);
    let o = mhg(dir.path(), &["spectrum", "h.mhg", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pair_graphs_report() {
    let dir = tempfile::tempdir().unwrap();
    mhg(dir.path(), &["gen", "--set", "5,3", "--variant", "c-min", "--out", "h.mhg"]);
    let o = mhg(dir.path(), &["pair-graphs", "h.mhg", "--set", "5,3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let classes: Vec<&str> = text.lines().filter(|l| l.starts_with("class ")).collect();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|l| l.ends_with("components 1")), "{text}");
}

#[test]
fn min_search_micro_cases() {
    let dir = tempfile::tempdir().unwrap();
    let o = mhg(dir.path(), &["min-search", "--vertices", "3", "--set", "3", "--kind", "D"]);
    assert_eq!(stdout(&o), "minimum D-edges 3\n");
    let o = mhg(dir.path(), &["min-search", "--vertices", "3", "--set", "3", "--kind", "C"]);
    assert_eq!(stdout(&o), "minimum C-edges 0\n");
}

#[test]
fn output_is_byte_identical_across_runs_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    mhg(dir.path(), &["gen", "--set", "6,5,3", "--variant", "full", "--out", "h.mhg"]);
    let first = mhg(dir.path(), &["verify", "h.mhg", "--set", "6,5,3"]).stdout;
    for jobs in ["1", "3"] {
        assert_eq!(mhg(dir.path(), &["--jobs", jobs, "verify", "h.mhg", "--set", "6,5,3"]).stdout, first);
    }
}
