use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn factorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorlab")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("factorlab-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn petersen_toughness_from_graph6() {
    let dir = scratch("tough");
    let g6 = dir.join("petersen.g6");
    let out = factorlab(&["gen", "--family", "petersen", "--format", "graph6", "--out", g6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = factorlab(&["toughness", "--input", g6.to_str().unwrap(), "--mode", "exact"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["value"], "4/3");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn lowerbound_generation() {
    let dir = scratch("lb");
    let el = dir.join("g.el");
    let out = factorlab(&["gen", "--family", "lowerbound", "--r", "1", "--h", "2", "--n", "1", "--out", el.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"][0], 91);
    assert_eq!(v["counts_match"], true);
    let text = std::fs::read_to_string(&el).unwrap();
    assert!(text.starts_with("91 "));
}

#[test]
fn campaign_exit_codes() {
    let ok = factorlab(&["campaign", "--corpus", "all_connected:6", "--theorems", "T-A:r=2", "--seed", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["counterexamples"].as_array().unwrap().len(), 0);

    let dir = scratch("dump");
    let bad = factorlab(&["campaign", "--corpus", "named:E1", "--theorems", "T-NF:f=1", "--dump", dir.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(3));
    let dumps: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(dumps.len(), 1);
}

#[test]
fn audit_and_replay() {
    let dir = scratch("replay");
    let graph = dir.join("star.el");
    std::fs::write(&graph, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let report = dir.join("report.json");
    let out = factorlab(&["audit", "--theorem", "T-TC:m=1", "-i", graph.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["verdict"], "VACUOUS");
    let out = factorlab(&["replay", "-i", graph.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reproduced"], true);
}

#[test]
fn certificates_reverify() {
    let dir = scratch("verify");
    let graph = dir.join("k5.el");
    std::fs::write(&graph, "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let g = graph.to_str().unwrap();
    for (cmd, kind) in [(&["factor24", "-i", g][..], "factor24"), (&["eulerian", "-i", g][..], "eulerian")] {
        let cert = dir.join(format!("{kind}.json"));
        let mut args = cmd.to_vec();
        args.extend(["--out", cert.to_str().unwrap()]);
        assert_eq!(factorlab(&args).status.code(), Some(0));
        let out = factorlab(&["verify", kind, "-i", g, "--cert", cert.to_str().unwrap()]);
        assert_eq!(json(&out)["valid"], true, "{kind}");
    }
}

#[test]
fn usage_and_scale_errors() {
    assert_eq!(factorlab(&["gen", "--family", "gnp", "--n", "5"]).status.code(), Some(1));
    assert_eq!(factorlab(&["frobnicate"]).status.code(), Some(1));
    let dir = scratch("scale");
    let graph = dir.join("k12.el");
    let out = factorlab(&["gen", "--family", "named", "--names", "K12", "--out", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = factorlab(&["toughness", "-i", graph.to_str().unwrap(), "--exact-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
}
