use std::process::{Command, Output};

use serde_json::Value;

fn packed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_packed"))
        .args(args)
        .env_remove("PACKED_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = packed(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strip_elapsed(v: &mut Value) {
    if let Some(reports) = v["reports"].as_array_mut() {
        for r in reports {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
    }
}

#[test]
fn enumerate_row_counts() {
    assert_eq!(json(&["enumerate", "--n", "3", "--k", "1"])["count"], 13);
    assert_eq!(json(&["enumerate", "--n", "2", "--k", "2"])["count"], 2);
    assert_eq!(json(&["enumerate", "--n", "4", "--k", "1"])["count"], 75);
    let csv = stdout(&packed(&["enumerate", "--n", "3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("word,osp,code,boosted_code"));
    assert_eq!(csv.lines().count(), 14);
}

#[test]
fn algebra_examples() {
    assert_eq!(stdout(&packed(&["hilbert", "--ring", "S", "--n", "3", "--k", "1"])), "1 + 3q + 6q^2 + 3q^3\n");
    assert_eq!(stdout(&packed(&["hilbert", "--ring", "R", "--n", "3", "--k", "3"])), "1 + 2q + 2q^2 + q^3\n");
    assert_eq!(stdout(&packed(&["frobenius", "--ring", "S", "--n", "2", "--k", "1"])), "s[2] + q*(s[2] + s[1,1])\n");
    let csv = stdout(&packed(&["hilbert", "--n", "3", "--format", "csv"]));
    assert_eq!(csv, "ring,n,k,q0,q1,q2,q3\nS,3,1,1,3,6,3\n");

    let gb = json(&["groebner", "--n", "2", "--k", "2"]);
    assert_eq!(gb["order"], "lex");
    assert_eq!(gb["basis"].as_array().unwrap().len(), 2);
    assert_eq!(gb["basis"][1]["terms"][0]["expt"], serde_json::json!([0, 2]));

    let c = json(&["cfunction", "--n", "2", "--k", "1"]);
    assert_eq!(c["c"]["terms"][0]["lambda"], serde_json::json!([1, 1]));
    assert_eq!(c["convention"]["descent_weight"], "minus");
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        vec!["hilbert", "--n", "2", "--k", "3"],
        vec!["enumerate", "--n", "0"],
        vec!["enumerate", "--n", "7"],
        vec!["verify", "--suite", "nonsense"],
        vec!["verify", "--n-max", "9"],
        vec!["hilbert", "--ring", "T", "--n", "2"],
        vec!["groebner", "--n", "2", "--order", "revlex"],
        vec!["verify", "--suite", "orbit-harmonics", "--n-max", "2", "--alpha", "1,1"],
        vec!["verify", "--suite", "orbit-harmonics", "--n-max", "3", "--alpha", "1,2"],
        vec!["frobenius"],
    ] {
        let out = packed(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_exit_codes_and_reports() {
    let out = packed(&["verify", "--suite", "all", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("21 passed, 0 failed\n"));

    assert_eq!(packed(&["verify", "--suite", "bijection", "--n-max", "6"]).status.code(), Some(0));

    let report = json(&["verify", "--suite", "frobenius", "--n-max", "3"]);
    assert_eq!(report["calibration"]["reflection"], "own-degree");
    assert_eq!(report["reports"].as_array().unwrap().len(), 6);
    for r in report["reports"].as_array().unwrap() {
        assert_eq!(r["theorem"], "frobenius");
        assert_eq!(r["pass"], true);
    }
    assert!(json(&["verify", "--suite", "bijection", "--n-max", "2"])["calibration"].is_null());

    let csv = stdout(&packed(&["verify", "--suite", "dimension", "--n-max", "2", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("theorem,n,k,pass,elapsed_ms"));
}

#[test]
fn orbit_harmonics_with_custom_parameters() {
    let out = packed(&["verify", "--suite", "orbit-harmonics", "--n-max", "3", "--alpha", "1/2,-3,7/5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn output_is_deterministic() {
    let run = |jobs: &str| {
        let mut v = json(&["verify", "--n-max", "3", "--jobs", jobs]);
        strip_elapsed(&mut v);
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn cold_and_warm_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = json(&["groebner", "--n", "4", "--k", "2", "--cache-dir", d]);
    assert!(dir.path().join("J_n4_k2_lex.json").exists());
    let warm = json(&["groebner", "--n", "4", "--k", "2", "--cache-dir", d]);
    assert_eq!(cold, warm);
    assert_eq!(cold, json(&["groebner", "--n", "4", "--k", "2"]));

    let env_run = Command::new(env!("CARGO_BIN_EXE_packed"))
        .args(["hilbert", "--ring", "R", "--n", "4", "--k", "2"])
        .env("PACKED_CACHE_DIR", d)
        .output()
        .unwrap();
    assert!(env_run.status.success());
    assert!(dir.path().join("I_n4_k2_lex.json").exists());

    let mut cold = json(&["verify", "--suite", "hilbert-decomposition", "--n-max", "3", "--cache-dir", d]);
    let mut warm = json(&["verify", "--suite", "hilbert-decomposition", "--n-max", "3", "--cache-dir", d]);
    strip_elapsed(&mut cold);
    strip_elapsed(&mut warm);
    assert_eq!(cold, warm);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    std::fs::write(dir.path().join("J_n3_k1_lex.json"), "{ not json").unwrap();
    let out = packed(&["hilbert", "--n", "3", "--cache-dir", d]);
    assert_eq!(stdout(&out), "1 + 3q + 6q^2 + 3q^3\n");
}
