use std::io::Write;
use std::process::{Command, Output, Stdio};

fn windmill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_windmill")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn label_as_dot() {
    let o = windmill(&["label", "--graph", "c3=4,c4=3", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph windmill {"));
}

#[test]
fn trace_goes_to_stderr() {
    let o = windmill(&["label", "--graph", "c3=4,c4=100", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("two-fold-langford-extension"));
}

#[test]
fn oracle_reports_exhaustive_none() {
    let o = windmill(&["oracle", "--graph", "c3=2", "--mode", "graceful"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "none (exhaustive)");
}

#[test]
fn oracle_budget_exit_code() {
    let o = windmill(&["oracle", "--graph", "c3=1,c4=25", "--mode", "graceful", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn unsupported_spec_exits_2() {
    assert_eq!(windmill(&["label", "--graph", "c3=1,c6=4"]).status.code(), Some(2));
}

#[test]
fn malformed_input_exits_3() {
    assert_eq!(windmill(&["label", "--graph", "c3=x"]).status.code(), Some(3));
    assert_eq!(windmill(&["label", "--graph", "c9=1"]).status.code(), Some(3));
    assert_eq!(windmill(&["label"]).status.code(), Some(3));
}

#[test]
fn json_round_trips_through_verify() {
    let dir = std::env::temp_dir().join(format!("windmill-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for graph in ["c3=2,c4=1", "c5=6", "c3=9,c5=4", "c3=5,c6=3"] {
        let o = windmill(&["label", "--graph", graph, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{graph}");
        let path = dir.join("l.json");
        std::fs::write(&path, &o.stdout).unwrap();
        let v = windmill(&["verify", "--file", path.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0), "{graph}");
    }
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"spec":[{"cycle":3,"count":1}],"mode":"graceful","vanes":[[0,1,2]]}"#).unwrap();
    assert_eq!(windmill(&["verify", "--file", path.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sequence_round_trip() {
    let o = windmill(&["seq", "gen", "--kind", "hooked-skolem", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_windmill"))
        .args(["seq", "validate", "--stdin", "--kind", "hooked-skolem"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(0));
}

#[test]
fn audit_csv_marks_gaps() {
    let o = windmill(&["audit", "--t-max", "3", "--s-max", "30", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let gaps = stdout(&o).lines().filter(|l| l.ends_with(",GAP")).count();
    assert_eq!(gaps, 5);
}

#[test]
fn sweep_csv_is_all_verified() {
    let o = windmill(&["sweep", "--family", "c3c4", "--t", "1..6", "--s", "0..6", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 42);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}
