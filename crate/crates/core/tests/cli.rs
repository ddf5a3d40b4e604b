use std::process::Command;

fn gml(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gml")).args(args).env("GML_THREADS", "1").output().unwrap()
}

#[test]
fn gen_then_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.txt");
    assert!(gml(&["gen", "complete", "4", "--out", file.to_str().unwrap()]).status.success());
    let out = gml(&["invariants", file.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["one_dimensional"]["pw1"], 3);
    assert_eq!(report["one_dimensional"]["circular_chromatic_number"], "4/1");
}

#[test]
fn optimize_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = gml(&["optimize", "C5", "--target", "dc", "--starts", "4", "--iters", "200", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    for f in ["witness.txt", "witness.svg", "bound.json"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let bound: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("bound.json")).unwrap()).unwrap();
    assert!(bound["upper_bound"].as_f64().unwrap() >= 1.0);
}

#[test]
fn construct_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let out = gml(&["construct", "5", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let transcript = std::fs::read_to_string(dir.path().join("transcript.txt")).unwrap();
    assert!(transcript.starts_with("re_ratio <= 1.41421357, min_pair = 1, K5 witness OK, noncrossing = false"));
}

#[test]
fn exit_codes() {
    assert_eq!(gml(&["construct", "3"]).status.code(), Some(2));
    assert_eq!(gml(&["optimize", "K4", "--target", "xx"]).status.code(), Some(2));
    assert_eq!(gml(&["invariants", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(gml(&["verify", "table1"]).status.code(), Some(0));
}
