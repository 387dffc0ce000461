//! End-to-end tests of the command line binary: output shapes, exit codes,
//! and reproducibility.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oriented-diameter"))
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("od-cli-{name}"));
    fs::write(&path, content).unwrap();
    path
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

const KITE: &str = "n 4\nd 0 1\nd 3 0\nu 0 2\nu 1 2\nu 2 3\n";
const PATH3: &str = "n 3\nu 0 1\nu 1 2\n";
const C4: &str = "n 4\nu 0 1\nu 1 2\nu 2 3\nu 3 0\n";
const C5: &str = "n 5\nu 0 1\nu 1 2\nu 2 3\nu 3 4\nu 4 0\n";

#[test]
fn orient_prints_cert_for_fixed_base() {
    let path = write_tmp("kite.txt", KITE);
    let out = bin().args(["orient", "-u", "0"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(
        lines,
        vec![
            "o 0 2",
            "o 1 2",
            "o 2 3",
            "cert u=0 case=two-sided bound=6 diam=3 z0=- t0=-",
        ]
    );
    fs::remove_file(path).ok();
}

#[test]
fn orient_picks_a_base_when_unspecified() {
    let chorded = format!("{C5}u 4 1\n");
    let path = write_tmp("chorded.txt", &chorded);
    let out = bin().arg("orient").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    let cert = lines.last().unwrap();
    assert!(cert.starts_with("cert u="), "unexpected tail: {cert}");
    assert!(cert.contains("bound=5"), "unexpected cert: {cert}");
    fs::remove_file(path).ok();
}

#[test]
fn orient_rejects_bridges() {
    let path = write_tmp("path3.txt", PATH3);
    let out = bin().arg("orient").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    fs::remove_file(path).ok();
}

#[test]
fn orient_rejects_malformed_input() {
    let path = write_tmp("garbled.txt", "n x\nu 0 1\n");
    let out = bin().arg("orient").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    fs::remove_file(path).ok();
}

#[test]
fn oracle_reports_value_and_witness() {
    let path = write_tmp("c4.txt", C4);
    let out = bin().arg("oracle").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "oracle diam=3 strong_count=2");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.starts_with("o ")));
    fs::remove_file(path).ok();
}

#[test]
fn oracle_respects_edge_limit() {
    let path = write_tmp("c5.txt", C5);
    let out = bin()
        .args(["oracle", "--max-undirected", "3"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));

    let mut k8 = String::from("n 8\n");
    for a in 0..8 {
        for b in (a + 1)..8 {
            k8.push_str(&format!("u {a} {b}\n"));
        }
    }
    let path8 = write_tmp("k8.txt", &k8);
    let out = bin().arg("oracle").arg(&path8).output().unwrap();
    assert_eq!(out.status.code(), Some(5));
    fs::remove_file(path).ok();
    fs::remove_file(path8).ok();
}

#[test]
fn gen_is_reproducible_and_orientable() {
    let args = ["gen", "random", "8", "4", "0.5", "--seed", "42"];
    let first = bin().args(args).output().unwrap();
    let second = bin().args(args).output().unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let path = write_tmp("random.txt", &String::from_utf8(first.stdout).unwrap());
    let out = bin().arg("orient").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    fs::remove_file(path).ok();
}

#[test]
fn gen_signals_figure_only_families() {
    let out = bin().args(["gen", "f", "10", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(6));
    let out = bin().args(["gen", "m", "9", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn gen_rejects_bad_params() {
    let out = bin().args(["gen", "g", "5", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn verify_suite_runs_and_writes_csv() {
    let csv = std::env::temp_dir().join("od-cli-verify.csv");
    let out = bin()
        .args(["verify", "bounds", "--max-n", "6", "--csv"])
        .arg(&csv)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert!(lines[0].starts_with("suite bounds:"), "got {:?}", lines);
    let body = fs::read_to_string(&csv).unwrap();
    assert!(body.starts_with("family,n,delta_star,case,certified_bound"));
    assert!(body.lines().count() > 1);
    fs::remove_file(csv).ok();
}

#[test]
fn verify_requires_a_suite() {
    let out = bin().arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
