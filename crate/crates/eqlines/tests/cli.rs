use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn eqlines(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqlines")).args(args).output().expect("run eqlines")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn enum_edge(dir: &Path, threads: &str) -> Output {
    let out = eqlines(&["enum", "--single-edge", "--out", dir.to_str().unwrap(), "--threads", threads]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    out
}

#[test]
fn min_forb_lists_one_graph_per_class() {
    let cherry = eqlines(&["min-forb"]);
    assert_eq!(cherry.status.code(), Some(0));
    assert_eq!(stdout(&cherry).lines().count(), 5);
    let edge = eqlines(&["min-forb", "--single-edge"]);
    let lines: Vec<String> = stdout(&edge).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.starts_with("5:")));
}

#[test]
fn inspect_edge() {
    let out = eqlines(&["inspect", "2:1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("psd true rank 2").count(), 2);
    assert!(text.contains("approximate spectrum [-1.000000, 1.000000]"));
}

#[test]
fn inspect_c5_and_k3_k2() {
    let c5 = stdout(&eqlines(&["inspect", "5:1,2,4,9"]));
    let cherry = c5.split("single-edge").next().unwrap();
    assert!(cherry.contains("psd true rank 5"), "{c5}");
    // K3 ⊔ K2 on vertices {0,1,2} and {3,4}.
    let k3k2 = stdout(&eqlines(&["inspect", "5:1,3,0,8"]));
    let cherry = k3k2.split("single-edge").next().unwrap();
    assert!(cherry.contains("psd false"), "{k3k2}");
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(eqlines(&["inspect", "3:9"]).status.code(), Some(2));
    assert_eq!(eqlines(&["inspect", "banana"]).status.code(), Some(2));
    assert_eq!(eqlines(&["frobnicate"]).status.code(), Some(2));
    let empty = tempfile::tempdir().unwrap();
    let missing = empty.path().join("nope");
    assert_eq!(eqlines(&["verify", "--dir", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn edge_enumeration_verifies_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let summary = stdout(&enum_edge(dir.path(), "1"));
    assert!(summary.contains("total 902"));
    assert!(summary.contains("empty_level 29"));
    assert!(dir.path().join("single-edge-summary.txt").exists());
    assert!(dir.path().join("single-edge-28.txt").exists());
    assert!(!dir.path().join("single-edge-29.txt").exists());

    let d = dir.path().to_str().unwrap();
    let first = eqlines(&["verify", "--single-edge", "--dir", d]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert!(stdout(&first).contains("PASS identify n=27 compl_schlafli"));
    let again = eqlines(&["verify", "--single-edge", "--dir", d]);
    assert_eq!(stdout(&first), stdout(&again));

    let path = dir.path().join("single-edge-13.txt");
    let text = fs::read_to_string(&path).unwrap();
    let kept: Vec<&str> = text.lines().skip(1).collect();
    fs::write(&path, kept.join("\n") + "\n").unwrap();
    let tampered = eqlines(&["verify", "--single-edge", "--dir", d]);
    assert_eq!(tampered.status.code(), Some(1));
    let report = stdout(&tampered);
    assert!(report.contains("FAIL count n=13: expected Some(101), found Some(100)"), "{report}");
    assert!(report.lines().last().unwrap().starts_with("verify single-edge: FAIL"));
}

#[test]
fn wrong_rank_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    enum_edge(dir.path(), "1");
    let path = dir.path().join("single-edge-10.txt");
    let text = fs::read_to_string(&path).unwrap();
    let first = text.lines().next().unwrap();
    let (graph, _) = first.split_once(' ').unwrap();
    fs::write(&path, text.replacen(first, &format!("{graph} rank=9"), 1)).unwrap();
    let out = eqlines(&["verify", "--single-edge", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL ranks n=10: line 1"));
}

#[test]
fn threads_do_not_change_the_catalog() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    enum_edge(a.path(), "1");
    enum_edge(b.path(), "3");
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 24 + 1);
    for name in names {
        assert_eq!(fs::read(a.path().join(&name)).unwrap(), fs::read(b.path().join(&name)).unwrap(), "{name:?}");
    }
}

#[test]
fn table_needs_a_completed_run() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    fs::write(dir.path().join("cherry-5.txt"), "5:1,2,4,9 rank=5\n").unwrap();
    fs::write(dir.path().join("summary.txt"), "family cherry\n").unwrap();
    let out = eqlines(&["table", "--dir", d, "--dmax", "5"]);
    assert_eq!(out.status.code(), Some(2));
    fs::write(dir.path().join("summary.txt"), "family cherry\nempty_level 6\n").unwrap();
    let out = eqlines(&["table", "--dir", d, "--dmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2 2\n3 3\n4 4\n5 6\n");
}
