use std::process::{Command, Output};

fn spinfh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinfh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = spinfh(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn constants_table_json() {
    let v = json(&["constants", "--variant", "spin", "--lam", "4", "--mu", "2", "--n", "8", "--format", "json"]);
    let entries = v["entries"].as_object().unwrap();
    let got: Vec<(&str, i64)> = entries.iter().map(|(k, v)| (k.as_str(), v.as_i64().unwrap())).collect();
    assert_eq!(got, [("[2]", -60), ("[2,2]", -18), ("[4]", 15), ("[4,2]", 1), ("[6]", -7)]);
    assert_eq!(v["variant"], "spin");
}

#[test]
fn single_constant_agrees_with_table() {
    let out = spinfh(&["constants", "--lam", "2", "--mu", "2", "--nu", "4", "--n", "6"]);
    assert_eq!(stdout(&out), "-5\n");
    let out = spinfh(&["constants", "--lam", "2", "--mu", "2", "--nu", "0", "--n", "6", "--variant", "ordinary"]);
    assert_eq!(stdout(&out), "40\n");
}

#[test]
fn lagrange_suite() {
    let v = json(&["verify", "lagrange", "--rmax", "5", "--format", "json"]);
    assert_eq!(v["pass"], true);
    let values = &v["suites"][0]["checks"][0]["data"]["values"];
    assert_eq!(values, &serde_json::json!([-2, 2, -2, 2, -2]));
}

#[test]
fn jm_top_part() {
    let out = spinfh(&["jm", "--n", "6", "--r", "2", "--top"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "d_(2,2) - 2d_(4)\n");
}

#[test]
fn jm_targeted() {
    let v = json(&["jm", "--r", "4", "--n", "10", "--lam", "4,4", "--lam", "8", "--format", "json"]);
    assert_eq!(v["coords"]["[4,4]"], 4);
    assert_eq!(v["coords"]["[8]"], -14);
}

#[test]
fn graded_and_fit() {
    let out = spinfh(&["graded", "--lam", "2", "--mu", "2"]);
    assert_eq!(stdout(&out), "d_(2) * d_(2) = 2d_(2,2) - 5d_(4)\n");
    let v = json(&["fit", "--lam", "2", "--mu", "2", "--nu", "0", "--format", "json"]);
    assert_eq!(v["poly"]["binomial_coeffs"], serde_json::json!([0, 0, 0, 2]));
    assert_eq!(v["validated_on"], serde_json::json!([7, 8]));
}

#[test]
fn class_listing() {
    let out = spinfh(&["class", "--lam", "2", "--n", "4", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("perm,cycles,sign"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn csv_tables() {
    let out = spinfh(&["mult", "--lam", "2", "--mu", "2", "--n", "6", "--format", "csv"]);
    assert_eq!(stdout(&out), "nu,coefficient\n\"[]\",40\n\"[2]\",8\n\"[2,2]\",2\n\"[4]\",-5\n");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("spinfh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = spinfh(&["graded", "--lam", "2", "--mu", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["degree"], 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_across_thread_counts() {
    let args = ["mult", "--lam", "4", "--mu", "2,2", "--n", "8", "--format", "json"];
    let base = spinfh(&args).stdout;
    for t in ["1", "2", "3"] {
        let mut with = args.to_vec();
        with.extend(["--threads", t]);
        assert_eq!(spinfh(&with).stdout, base, "threads {t}");
    }
}

#[test]
fn seed_is_recorded() {
    let v = json(&["verify", "relations", "--seed", "0x2a", "--format", "json"]);
    assert_eq!(v["seed"], "0x2a");
    assert_eq!(v["pass"], true);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["frobnicate"],
        vec!["class", "--lam", "2"],
        vec!["class", "--lam", "2", "--n", "4", "--bogus"],
        vec!["class", "--lam", "3", "--n", "5"],
        vec!["class", "--lam", "x", "--n", "5"],
        vec!["graded", "--lam", "2", "--mu", "2", "--variant", "weird"],
        vec!["class", "--lam", "2", "--n", "4", "--format", "xml"],
        vec!["verify", "everything"],
        vec!["fit", "--lam", "2", "--mu", "2", "--nu", "0", "--from", "4"],
        vec!["class", "--lam", "2", "--n", "4", "--threads", "0"],
    ] {
        let out = spinfh(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn budgets_and_caps_exit_2() {
    let out = spinfh(&["mult", "--lam", "2", "--mu", "2", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--unsafe-n"));
    let out = spinfh(&["class", "--lam", "2", "--n", "11"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinfh(&["mult", "--lam", "2", "--mu", "2", "--n", "6", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinfh(&["class", "--lam", "2", "--n", "11", "--unsafe-n", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn failed_fit_exits_1() {
    // two points cannot pin the cubic 2 C(n, 3), so the held-out points disagree
    let out = spinfh(&["fit", "--lam", "2", "--mu", "2", "--nu", "0", "--from", "3", "--to", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_0() {
    for args in [vec!["--help"], vec!["--version"], vec!["verify", "--help"]] {
        let out = spinfh(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify", "all", "--format", "json"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 10);
}
