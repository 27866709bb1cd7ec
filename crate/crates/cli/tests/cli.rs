use std::fs;
use std::path::Path;
use std::process::Command;

use homforge_core::chaincx::ComplexJson;
use homforge_core::constructions::{CheckStatus, Report, Verdict};
use homforge_core::SparseMatrix;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn homforge(args: &[&str]) -> Run {
    homforge_env(args, &[])
}

fn homforge_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_homforge"));
    cmd.args(args).env_remove("HOMFORGE_LOG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

fn report(path: &Path) -> Report {
    Report::from_json_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn exterior_rank_eight_and_nine() {
    let r = homforge(&["exterior", "--p", "3", "--r", "8"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["total_HD"], 252);
    assert_eq!(v["bound"], 256);
    assert_eq!(v["verdict"], "counterexample");
    let r = homforge(&["exterior", "--p", "3", "--r", "9"]);
    assert_eq!(r.code, 0);
    let v = json(&r.stdout);
    assert_eq!((v["total_HD"].as_u64(), v["bound"].as_u64()), (Some(504), Some(512)));
}

#[test]
fn exterior_characteristic_two_and_bad_input() {
    let r = homforge(&["exterior", "--p", "2", "--r", "8"]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["verdict"], "no_counterexample");
    assert_eq!(homforge(&["exterior", "--p", "3", "--r", "7"]).code, 2);
    assert_eq!(homforge(&["exterior", "--p", "9", "--r", "8"]).code, 2);
    assert_eq!(homforge(&["exterior", "--p", "3"]).code, 2);
}

#[test]
fn verify_koszul_rank_eight() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = homforge_env(
        &["verify", "--p", "3", "--r", "8", "--construction", "koszul", "--check-level", "kunneth", "--output", out.to_str().unwrap()],
        &[("HOMFORGE_LOG", "info")],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stderr.contains("verdict"));
    let rep = report(&out);
    assert_eq!(rep.verdict, Verdict::Counterexample);
    assert_eq!(rep.totals.cone, Some(252));
    assert!(rep.timings_ms.is_none());
}

#[test]
fn verify_pushout_full_small_rank() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = homforge(&[
        "verify", "--p", "3", "--r", "3", "--construction", "pushout", "--n", "2", "--zeta", "standard",
        "--check-level", "full", "--output", out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    let rep = report(&out);
    assert_eq!(rep.verdict, Verdict::NotApplicable);
    for (name, c) in rep.checks.iter() {
        assert_eq!(c.status, CheckStatus::Pass, "{name}: {}", c.detail);
    }
}

#[test]
fn verify_pushout_rank_eight_degree_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = homforge(&["verify", "--p", "3", "--r", "8", "--construction", "pushout", "--n", "4", "--output", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rep = report(&out);
    assert_eq!(rep.verdict, Verdict::Counterexample);
    assert_eq!(rep.checks.freeness.status, CheckStatus::Guaranteed);
    assert_eq!(rep.totals.cone, Some(252));
    assert!(!rep.checks.any_failed());
}

#[test]
fn reports_do_not_depend_on_threads() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for threads in ["1", "4", "1"] {
        let out = dir.path().join(format!("r{threads}-{}.json", texts.len()));
        let r = homforge(&[
            "--threads", threads, "verify", "--p", "3", "--r", "2", "--construction", "pushout", "--n", "4", "--zeta", "random",
            "--seed", "3", "--check-level", "full", "--output", out.to_str().unwrap(),
        ]);
        assert_eq!(r.code, 1, "{}", r.stderr);
        texts.push(fs::read(&out).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    assert_eq!(texts[0], texts[2]);
}

#[test]
fn random_parameters_that_fail_freeness_exit_two() {
    // seed 2 gives ζ_1, ζ_2 in degree 4 that are not a system of parameters
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = homforge(&[
        "verify", "--p", "3", "--r", "2", "--construction", "pushout", "--n", "4", "--zeta", "random", "--seed", "2",
        "--check-level", "full", "--output", out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("system of parameters"), "{}", r.stderr);
    let rep = report(&out);
    assert_eq!(rep.checks.freeness.status, CheckStatus::Fail);
}

#[test]
fn invalid_configurations_exit_two() {
    for args in [
        vec!["verify", "--p", "3", "--r", "2", "--construction", "pushout", "--zeta", "random"],
        vec!["verify", "--p", "3", "--r", "2", "--construction", "koszul", "--n", "4"],
        vec!["verify", "--p", "3", "--r", "2", "--n", "3", "--construction", "pushout"],
        vec!["verify", "--p", "2", "--r", "8"],
        vec!["verify", "--p", "3", "--r", "2", "--zeta", "standard", "--seed", "1"],
        vec!["verify", "--p", "3", "--r", "2", "--construction", "cube"],
    ] {
        let r = homforge(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.stderr.is_empty());
    }
    let r = homforge(&["verify", "--p", "2", "--r", "8", "--contrast"]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["verdict"], "no_counterexample");
}

#[test]
fn dump_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("u1.json");
    let b = dir.path().join("u1-again.json");
    let r = homforge(&["dump", "--p", "3", "--r", "2", "--complex", "u", "--index", "0", "--output", a.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = homforge(&["load", "--input", a.to_str().unwrap(), "--homology", "--output", b.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v = json(&r.stdout);
    assert_eq!(v["degrees"][0]["dim"], 3);
    assert_eq!(v["homology"][1]["dim"], 1);
}

#[test]
fn load_rejects_broken_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("k.json");
    let r = homforge(&["dump", "--p", "3", "--r", "2", "--complex", "koszul", "--output", a.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let text = fs::read_to_string(&a).unwrap();
    let good: ComplexJson = serde_json::from_str(&text).unwrap();

    // d_2 replaced by the inclusion of the first summand: d_1 d_2 = X_1 != 0
    let mut bad = good.clone();
    let d2 = bad.degrees[2].differential.as_ref().unwrap();
    let (rows, cols) = (d2.rows(), d2.cols());
    let f = d2.field();
    bad.degrees[2].differential = Some(SparseMatrix::identity(cols, f).embed(rows, cols, 0, 0));
    bad.seal().unwrap();
    let path = dir.path().join("d2.json");
    fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let r = homforge(&["load", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("d_1 d_2"), "{}", r.stderr);

    let mut bad = good.clone();
    bad.checksum = "0".repeat(64);
    fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let r = homforge(&["load", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("checksum"), "{}", r.stderr);

    let mut bad = good;
    bad.format = "homforge-complex/0".into();
    fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let r = homforge(&["load", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("homforge-complex/0"), "{}", r.stderr);
}

#[test]
fn dump_rank_eight_koszul_reloads_with_equal_homology() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("k8.json");
    let r = homforge(&["dump", "--p", "3", "--r", "8", "--complex", "koszul", "--output", a.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = homforge(&["load", "--input", a.to_str().unwrap(), "--homology"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    let loaded: Vec<u64> = v["homology"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(loaded, vec![1, 8, 28, 56, 70, 56, 28, 8, 1]);
}

#[test]
fn quasi_iso_subcommand() {
    let r = homforge(&["quasi-iso", "--p", "3", "--r", "3", "--index", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["quasi_iso"], true);
    assert_eq!(v["homology_commutes"], true);
    assert_eq!(homforge(&["quasi-iso", "--p", "3", "--r", "3", "--index", "3"]).code, 2);
}

#[test]
fn dump_pushout_factor_with_random_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("c.json");
    let args = ["dump", "--p", "3", "--r", "2", "--complex", "pushout", "--n", "4", "--zeta", "random", "--seed", "5", "--index", "1"];
    let mut with_out = args.to_vec();
    with_out.extend(["--output", a.to_str().unwrap()]);
    assert_eq!(homforge(&with_out).code, 0);
    let r = homforge(&["load", "--input", a.to_str().unwrap(), "--homology"]);
    let v = json(&r.stdout);
    let h: Vec<u64> = v["homology"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![1, 0, 0, 1]);
    assert_eq!(homforge(&["dump", "--p", "3", "--r", "2", "--complex", "u", "--zeta", "random", "--seed", "1"]).code, 2);
}
