//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rdsolve"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rdsolve-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Seven-block example graph, 14 vertices, gamma_r = 4.
const SEVEN_BLOCK: &str = "p edge 14 21\n\
e 5 6\ne 5 7\ne 6 7\n\
e 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n\
e 1 2\n\
e 7 8\ne 7 9\ne 7 10\ne 8 9\ne 8 10\ne 9 10\n\
e 10 11\n\
e 11 12\n\
e 9 13\ne 9 14\ne 13 14\n";

const P4: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const P3: &str = "p edge 3 2\ne 1 2\ne 2 3\n";
const K2: &str = "p edge 2 1\ne 1 2\n";

#[test]
fn solve_block_graph_auto() {
    let path = write_temp("seven.gr", SEVEN_BLOCK);
    let out = run(&["solve", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["gamma_r"], 4);
    assert_eq!(v["method"], "block_dp");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn solve_p4_routes_to_block() {
    let path = write_temp("p4.gr", P4);
    let out = run(&["solve", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["gamma_r"], 2);
    assert_eq!(v["method"], "block_dp");
    assert_eq!(v["witness"], serde_json::json!([1, 4]));
}

#[test]
fn solve_human_output() {
    let path = write_temp("k2.gr", K2);
    let out = run(&["solve", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("gamma_r = 2"));
    assert!(text.contains("witness = {1, 2}"));
    assert!(text.contains("method = trivial"));
}

#[test]
fn explicit_methods_agree_on_star() {
    let star = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n";
    let path = write_temp("star.gr", star);
    for method in ["auto", "oracle", "block", "threshold", "cograph", "chain"] {
        let out = run(&["solve", path.to_str().unwrap(), "--method", method, "--json"]);
        assert!(out.status.success(), "method {method}");
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(v["gamma_r"], 4, "method {method}");
    }
}

#[test]
fn check_valid_and_invalid_witnesses() {
    let graph = write_temp("p4_check.gr", P4);
    let good = write_temp(
        "p4_good.json",
        r#"{"gamma_r":2,"witness":[1,4],"method":"oracle"}"#,
    );
    let out = run(&[
        "check",
        graph.to_str().unwrap(),
        good.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("valid restrained dominating set"));

    let graph3 = write_temp("p3_check.gr", P3);
    let bad = write_temp(
        "p3_bad.json",
        r#"{"gamma_r":1,"witness":[2],"method":"oracle"}"#,
    );
    let out = run(&["check", graph3.to_str().unwrap(), bad.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("INVALID: vertex 1 has no neighbor outside D"),
        "{text}"
    );

    let k2 = write_temp("k2_check.gr", K2);
    let bad2 = write_temp(
        "k2_bad.json",
        r#"{"gamma_r":1,"witness":[1],"method":"oracle"}"#,
    );
    let out = run(&["check", k2.to_str().unwrap(), bad2.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("INVALID: vertex 2"));
}

#[test]
fn oracle_subcommand() {
    let path = write_temp("p3_oracle.gr", P3);
    let out = run(&["oracle", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["gamma_r"], 3);
    assert_eq!(v["method"], "oracle");
}

#[test]
fn parse_error_exit_code() {
    let path = write_temp("loop.gr", "p edge 2 1\ne 1 1\n");
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["solve", "/nonexistent/definitely-missing.gr"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unsupported_class_exit_code() {
    // an odd cycle too large for the oracle is in none of the classes
    let n = 25;
    let mut text = format!("p edge {n} {n}\n");
    for i in 1..=n {
        text.push_str(&format!("e {} {}\n", i, i % n + 1));
    }
    let path = write_temp("c25.gr", &text);
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("--method random"), "{err}");

    // but the randomized method handles it
    let out = run(&[
        "solve",
        path.to_str().unwrap(),
        "--method",
        "random",
        "--seed",
        "7",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["method"], "randomized");
    assert_eq!(v["seed"], 7);
}

#[test]
fn wrong_class_request_exit_code() {
    let path = write_temp("p4_thresh.gr", P4);
    let out = run(&["solve", path.to_str().unwrap(), "--method", "threshold"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("threshold"));
}

#[test]
fn random_rds_deterministic_in_seed() {
    let path = write_temp("seven_rand.gr", SEVEN_BLOCK);
    let a = run(&[
        "random-rds",
        path.to_str().unwrap(),
        "--seed",
        "42",
        "--json",
    ]);
    let b = run(&[
        "random-rds",
        path.to_str().unwrap(),
        "--seed",
        "42",
        "--json",
    ]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["seed"], 42);
}

#[test]
fn gen_x3c_roundtrip() {
    let inst = write_temp("inst.x3c", "2 5\n1 4 6\n1 2 5\n2 3 5\n2 4 6\n3 5 6\n");
    let dir = std::env::temp_dir().join(format!("rdsolve-test-{}", std::process::id()));
    let graph_path = dir.join("x3c.gr");
    let roles_path = dir.join("x3c.roles.json");
    let out = run(&[
        "gen-x3c",
        inst.to_str().unwrap(),
        "--out",
        graph_path.to_str().unwrap(),
        "--roles",
        roles_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&graph_path).unwrap();
    assert!(text.starts_with("p edge 16 "));
    let roles: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&roles_path).unwrap()).unwrap();
    assert_eq!(roles["k"], 4);
    assert_eq!(roles["roles"][0], "x1");
    assert_eq!(roles["roles"][15], "r");
    assert_eq!(roles["dpeo"].as_array().unwrap().len(), 16);

    // the generated graph solves to gamma_r = k on this instance
    let solved = run(&["oracle", graph_path.to_str().unwrap(), "--json"]);
    assert!(solved.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&solved).trim()).unwrap();
    assert_eq!(v["gamma_r"], 4);
}

#[test]
fn gen_gp_roundtrip() {
    let base = write_temp("k1.gr", "p edge 1 0\n");
    let out = run(&["gen-gp", base.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
}

#[test]
fn bound_subcommand() {
    let out = run(&["bound", "--n", "10", "--delta", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let cf = v["closed_form"].as_f64().unwrap();
    assert!((cf - 11.93).abs() < 0.01);
    let out = run(&["bound", "--n", "10", "--delta", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
