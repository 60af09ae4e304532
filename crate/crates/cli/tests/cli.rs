use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmcone")).args(args).output().expect("binary runs")
}

fn doc(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn inequalities_list_and_determinism() {
    let args = ["inequalities", "--type", "A1~", "--max-len", "4"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let d = doc(&a);
    assert_eq!(d["config"]["max_len"], 4);
    assert_eq!(d["config"]["type"], "A1~");
    let first = &d["result"]["inequalities"][0];
    assert_eq!((first["u1"].as_str(), first["u2"].as_str(), first["v"].as_str(), first["i"].as_u64()), (Some("e"), Some("e"), Some("e"), Some(0)));
    assert_eq!(run(&args).stdout, a.stdout);
    assert_eq!(run(&["--jobs", "1", "inequalities", "--type", "A1~", "--max-len", "4"]).stdout, a.stdout);
}

#[test]
fn max_len_zero_keeps_identity_entries() {
    let d = doc(&run(&["inequalities", "--type", "A1~", "--max-len", "0"]));
    let list = d["result"]["inequalities"].as_array().unwrap();
    assert_eq!(list.len(), 2);
    assert!(list.iter().all(|x| x["u1"] == "e" && x["u2"] == "e" && x["v"] == "e"));
}

#[test]
fn membership_verdicts() {
    let m = |mu: &str| doc(&run(&["member", "--type", "A1~", "--lambda1", "L0", "--lambda2", "L0", "--mu", mu]));
    let v = m("2*L0")["result"]["verdict"].as_str().unwrap().to_string();
    assert!(v == "member" || v == "boundary");
    assert_eq!(m("2*L0 + delta")["result"]["verdict"], "not_member");
}

#[test]
fn zero_level_is_rejected() {
    let out = run(&["member", "--type", "A1~", "--lambda1", "L1 - L0", "--lambda2", "L0", "--mu", "L1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("level must be positive"));
}

#[test]
fn invalid_inputs_exit_two() {
    assert_eq!(run(&["member", "--type", "X3", "--lambda1", "L0", "--lambda2", "L0", "--mu", "2*L0"]).status.code(), Some(2));
    assert_eq!(run(&["member", "--type", "A1~", "--lambda1", "L7", "--lambda2", "L0", "--mu", "2*L0"]).status.code(), Some(2));
    let small = run(&[
        "member", "--type", "A1~", "--max-len", "2", "--lambda1", "3*L0 + 4*L1", "--lambda2", "5*L0 + 2*L1", "--mu",
        "6*L0 + 8*L1 - 9*delta",
    ]);
    assert_eq!(small.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&small.stderr).contains("table too small"));
}

#[test]
fn cartan_component_has_multiplicity_one() {
    let d = doc(&run(&["multiplicity", "--type", "A1~", "--lambda1", "2*L0", "--lambda2", "L0 + L1", "--mu", "3*L0 + L1"]));
    assert_eq!(d["result"]["multiplicity"]["value"], "1");
    assert_eq!(d["config"]["depth"], 8);
}

#[test]
fn undecided_exits_three() {
    let out = run(&["multiplicity", "--type", "A1~", "--lambda1", "3*L0", "--lambda2", "3*L1", "--mu", "3*L0 + 3*L1 - 12*delta", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(doc(&out)["result"]["multiplicity"]["status"], "undecided");
}

#[test]
fn b0_reports_window() {
    let d = doc(&run(&["b0", "--type", "A1~", "--lambda1", "L0", "--lambda2", "L1", "--mu", "L0 + L1"]));
    assert!(d["result"]["b0"].is_i64());
    assert_eq!(d["result"]["window"].as_array().unwrap().len(), 2);
}

#[test]
fn saturation_confirmed() {
    for mode in ["stretch", "shift"] {
        let out = run(&["saturate", "--type", "A1~", "--mode", mode, "--d", "2", "--lambda1", "L0", "--lambda2", "L1", "--mu", "L0 + L1 - delta"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(doc(&out)["result"]["confirmed"], true);
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("kmcone-cli-{}.json", std::process::id()));
    let out = run(&["structure-constants", "--type", "A1~", "--max-len", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let d: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(d["result"].as_array().is_some_and(|r| !r.is_empty()));
}
