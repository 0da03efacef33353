//! End-to-end tests of the command-line binary: exit codes, JSON output,
//! and the solve -> verify witness round trip.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circledom"))
}

fn tmp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("circledom-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const P4: &str = "4\na b a c b d c d\n";

#[test]
fn solve_yes_no_and_exit_codes() {
    let rep = tmp("p4.rep", P4);
    let out = run(&["solve", "--variant", "conn-acyclic", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["size"], 2);

    let two = tmp("two.rep", "2\na a b b\n");
    let out = run(&["solve", "--variant", "conn-acyclic", two.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["answer"], "no");

    let out = run(&["solve", "--variant", "conn-acyclic", "/nonexistent.rep"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_witness_round_trips_through_verify() {
    let rep = tmp("p4r.rep", P4);
    for variant in ["plain", "connected", "total", "independent", "acyclic", "conn-acyclic"] {
        let out = run(&["solve", "--variant", variant, rep.to_str().unwrap()]);
        if out.status.code() != Some(0) {
            continue;
        }
        let v = stdout_json(&out);
        let names: Vec<String> = v["witness"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        let wit = tmp(&format!("w-{variant}.txt"), &names.join(" "));
        let out = run(&[
            "verify",
            "--variant",
            variant,
            rep.to_str().unwrap(),
            wit.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "verify rejects {variant} witness");
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "true");
    }
}

#[test]
fn solve_given_tree_and_oracle_agree() {
    let rep = tmp("p4t.rep", P4);
    let tree = tmp("p2.tree", "t 2\n0 1\n");
    let fast = run(&[
        "solve", "--variant", "tree", "--tree", tree.to_str().unwrap(), rep.to_str().unwrap(),
    ]);
    assert_eq!(fast.status.code(), Some(0));
    assert!(stdout_json(&fast)["vertex_map"].is_object());
    let slow = run(&[
        "solve", "--variant", "tree", "--tree", tree.to_str().unwrap(), "--oracle",
        rep.to_str().unwrap(),
    ]);
    assert_eq!(slow.status.code(), Some(0));
}

#[test]
fn verify_flags_bad_witnesses() {
    let rep = tmp("p4v.rep", P4);
    let short = tmp("w-short.txt", "b\n");
    let out = run(&["verify", "--variant", "plain", rep.to_str().unwrap(), short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "false");

    let bogus = tmp("w-bogus.txt", "zz\n");
    let out = run(&["verify", rep.to_str().unwrap(), bogus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_guard_requires_force() {
    // 25 chords in a trivially dominated layout: over the n > 24 guard
    let n = 25;
    let mut line = String::new();
    for i in 0..n {
        line.push_str(&format!("c{i} "));
    }
    for i in 0..n {
        line.push_str(&format!("c{i} "));
    }
    let rep = tmp("big.rep", &format!("{n}\n{}\n", line.trim_end()));
    let out = run(&["solve", "--variant", "plain", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["solve", "--variant", "plain", "--force", rep.to_str().unwrap()]);
    assert_ne!(out.status.code(), Some(2));
}

#[test]
fn gen_produces_solvable_files() {
    let dir = std::env::temp_dir().join(format!("circledom-gen-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();

    let col = tmp("kcc.col", "p 4 1 2\nc 1 1\nc 2 1\nc 3 2\nc 4 2\ne 1 3\n");
    let rep = dir.join("domset.rep");
    let out = run(&["gen", "--kind", "domset", col.to_str().unwrap(), "-o", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = circledom::parse_representation(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(parsed.n(), 35);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("domset.rep.meta.json")).unwrap())
            .unwrap();
    assert_eq!(meta["target_size"], 3);

    let tp = tmp("tp.txt", "tp 2 7\n2 2 2 2 3 3\n");
    let rep3 = dir.join("3part.rep");
    let out = run(&["gen", "--kind", "3part", tp.to_str().unwrap(), "-o", rep3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = circledom::parse_representation(&fs::read_to_string(&rep3).unwrap()).unwrap();
    assert_eq!(parsed.n(), 41);
    let tree = circledom::tree::parse_tree(
        &fs::read_to_string(dir.join("3part.rep.tree")).unwrap(),
    )
    .unwrap();
    assert_eq!(tree.size(), 15);

    // degenerate source: exit 2
    let k1 = tmp("k1.col", "p 2 0 1\nc 1 1\nc 2 1\n");
    let out = run(&["gen", "--kind", "domset", k1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // random generation round-trips through solve
    let rnd = dir.join("rnd.rep");
    let out = run(&["gen", "--kind", "random", "--n", "6", "--seed", "3", "-o", rnd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "--variant", "conn-acyclic", rnd.to_str().unwrap()]);
    assert!(matches!(out.status.code(), Some(0) | Some(1)));
}

#[test]
fn alpha_reports_star_and_path() {
    let star = tmp("star5.tree", "t 5\n0 1 1 1 1\n");
    let path = tmp("path5.tree", "t 5\n0 1 2 3 4\n");
    let out = run(&["alpha", star.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("alpha = 5"));
    let out = run(&["alpha", path.to_str().unwrap(), "--json"]);
    assert_eq!(stdout_json(&out)["alpha"], "4");
    let out = run(&["alpha", path.to_str().unwrap(), "--root", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
