//! The binary, driven as a subprocess.

use std::path::PathBuf;
use std::process::{Command, Output};

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("relcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn relcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relcat"))
        .args(args)
        .env_remove("RELCAT_MAX_CARRIER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn closure_prints_the_canonical_block() {
    let t = scratch("closure-t.rel", "rel 3\n0 1\n1 2\n");
    let o = relcat(&["closure", "--kind", "preorder", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "rel 3\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
}

#[test]
fn exhaustive_bijection_check_passes() {
    let o = relcat(&["check", "thm-main3-bijection", "--exhaustive", "--size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("pass ("), "{out}");
    assert!(out.contains("search: exhaustive"));
}

#[test]
fn preorder_count_on_three_points() {
    let o = relcat(&["enum", "--kind", "preorder", "--size", "3", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "29\n");
}

#[test]
fn compose_reads_left_after_right() {
    let a = scratch("compose-a.rel", "rel 3\n1 2\n");
    let b = scratch("compose-b.rel", "rel 3\n0 1\n");
    let o = relcat(&["compose", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "rel 3\n0 2\n");
}

#[test]
fn falsify_prints_a_replayable_witness() {
    let o = relcat(&["falsify", "goursat-direct-image", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let body = &out[out.find("witness #").unwrap()..];
    let body = &body[body.find('\n').unwrap() + 1..];
    let w = scratch("goursat.inst", body);
    let r = relcat(&["replay", "goursat-direct-image", w.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).starts_with("violated: "));
}

#[test]
fn replay_of_a_holding_instance() {
    let w = scratch("bij.inst", "@map f\nmap 2 2\n0 1\n");
    let o = relcat(&["replay", "thm-main3-bijection", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn modularity_of_small_algebras() {
    let z4 = scratch("z4.alg", "alg 4\nop add 2\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    let o = relcat(&["alg", "modular", z4.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "modular\n"));
    let bare = scratch("bare4.alg", "alg 4\n");
    let o = relcat(&["alg", "modular", bare.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not modular\n"));
    let o = relcat(&["alg", "congruences", z4.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("congruences: 3\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["check", "no-such-theorem"],
        &["check", "thm-main3-bijection", "--size", "99"],
        &["enum", "--kind", "lattice", "--size", "2"],
    ] {
        let o = relcat(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error: "), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}");
    }
}

#[test]
fn input_errors_exit_three() {
    let bad = scratch("bad.rel", "rel 2\n0 5\n");
    let o = relcat(&["closure", "--kind", "preorder", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(err.starts_with("error: ") && err.contains("bad.rel"), "{err}");

    let o = relcat(&["closure", "--kind", "preorder", "/nonexistent/t.rel"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn capacity_errors_exit_four() {
    let t = scratch("cap.rel", "rel 3\n0 1\n");
    let o = Command::new(env!("CARGO_BIN_EXE_relcat"))
        .args(["closure", "--kind", "preorder", t.to_str().unwrap()])
        .env("RELCAT_MAX_CARRIER", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["check", "supermain-sigma-preorder", "--sampled", "--samples", "300", "--seed", "17"];
    let a = relcat(&args);
    let b = relcat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = relcat(&["gen", "--kind", "preorder", "--size", "6", "--seed", "5"]);
    let b = relcat(&["gen", "--kind", "preorder", "--size", "6", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
}
