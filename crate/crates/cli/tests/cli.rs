use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn support_levels() {
    assert_eq!(json(&["support", "--lambda", "3,1", "--m", "2", "--sign", "+"])["q"], 1);
    assert_eq!(json(&["support", "--lambda", "1", "--m", "5", "--sign", "+"])["q"], 0);
    assert_eq!(json(&["support", "--lambda", "2", "--m", "2", "--sign", "-"])["q"], 0);
    assert_eq!(json(&["support", "--lambda", "2", "--m", "2", "--sign", "−"])["q"], 0);
}

#[test]
fn census_strata() {
    let sizes = |n: &str, m: &str| -> Vec<u64> {
        json(&["census", "--n", n, "--m", m])["strata"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["size"].as_u64().unwrap())
            .collect()
    };
    assert_eq!(sizes("4", "2"), vec![2, 1, 2]);
    assert_eq!(sizes("1", "2"), vec![1]);
    assert_eq!(sizes("6", "3").iter().sum::<u64>(), 11);
}

#[test]
fn verification_commands_pass() {
    assert_eq!(json(&["bo-verify", "--n-max", "10", "--m", "2,3"])["ok"], true);
    assert_eq!(json(&["dunkl-check", "--n", "3", "--c", "5/7", "--degree", "3"])["ok"], true);
    assert_eq!(json(&["dunkl-check", "--n", "3", "--c", "-1/2", "--degree", "2"])["ok"], true);
    assert_eq!(json(&["weights", "--n", "4", "--c", "1/2"])["ok"], true);
    assert_eq!(json(&["lr", "--lambda", "2,1", "--mu", "2"])["ok"], true);
    assert_eq!(json(&["fock-trace", "--m", "3", "--max", "8"])["agree"], true);
    assert_eq!(json(&["ideal-check", "--n", "3", "--m", "3", "--q", "1", "--degree", "2"])["stable"], true);
    assert_eq!(json(&["singular", "--n", "3", "--c", "1/3", "--degree", "1"])["dim"], 2);
}

#[test]
fn hecke_simples_record() {
    let v = json(&["hecke-simples", "--p", "3", "--m", "2"]);
    for key in ["p", "m", "dim", "rad_dim", "simples", "expected_m_regular", "ok"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["simples"], 2);
    assert_eq!(v["rad_dim"], 1);
    assert_eq!(v["ok"], true);
}

#[test]
fn violation_exits_with_one() {
    let out = run(&["ideal-check", "--n", "2", "--m", "2", "--q", "1", "--degree", "1", "--c", "1/3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["generators"][0]["failing_dunkl"], serde_json::json!([1, 2]));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["support", "--lambda", "3,x", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["support", "--lambda", "3", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["weights", "--n", "3", "--c", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["hecke-simples", "--p", "3", "--m", "2", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["census", "--n", "7", "--m", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["hecke-simples", "--p", "4", "--m", "3", "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn csv_and_table_formats() {
    let out = run(&["fock-trace", "--m", "2", "--max", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("deg_s,deg_t,coeff"));
    // triangle 0 ≤ t ≤ s ≤ 3
    assert_eq!(lines.count(), 10);
    let out = run(&["census", "--n", "4", "--m", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1,\"[3,1]\",[1],[2]"));
    let out = run(&["weights", "--n", "3", "--c", "1/2", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("lambda"));
    assert_eq!(text.lines().count(), 2 + 3);
}
