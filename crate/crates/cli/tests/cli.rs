use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn traid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_traid"))
        .args(args)
        .env_remove("TRAID_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = traid(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let text = stdout(&full);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), text.trim_end(), "canonical JSON");
    v
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["normalize", "--n", "4", "t1 t3 t1"]).trim(), "t3");
    assert_eq!(stdout(&["betti", "4"]).trim(), "7");
    let table = stdout(&["spectrum", "--rep", "+-", "--emax", "3"]);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("E = 2.5") && lines[0].contains("ν = 0") && lines[0].contains("λ = 3/2"));
}

#[test]
fn word_commands() {
    assert_eq!(stdout(&["equal", "--n", "3", "121", "212"]).trim(), "false");
    assert_eq!(stdout(&["equal", "--n", "4", "t1 t3", "t3 t1"]).trim(), "true");
    assert_eq!(stdout(&["perm", "--n", "3", "t1 t2"]).trim(), "(2,3,1)");
    assert_eq!(stdout(&["pure", "--n", "3", "212121"]).trim(), "true");
    assert_eq!(stdout(&["codim", "1", "3"]).trim(), "2");
    assert_eq!(stdout(&["gamma", "1"]).trim(), "t2 t1 t2 t1 t2 t1");
    assert_eq!(stdout(&["gamma"]).lines().count(), 8);
    assert_eq!(stdout(&["winding", "--n", "4", "t3 t2 t3 t2 t3 t2"]).trim(), "0 0 0 1 0 0 0");
    let d = stdout(&["decompose", "--n", "3", "t1 t2 t1"]);
    assert!(d.contains("perm: (3,2,1)"));
    assert_eq!(stdout(&["rep", "abelian", "--n", "3", "--signs", "+-", "--word", "212121"]).trim(), "-1");
    assert_eq!(stdout(&["rep", "coxeter", "--labels", "4,3", "--order"]).trim(), "order 48");
    assert_eq!(stdout(&["rep", "coxeter", "--labels", "inf,3"]).trim(), "order inf");
}

#[test]
fn json_outputs_are_canonical() {
    let v = json(&["normalize", "--n", "4", "t1 t3 t1"]);
    assert_eq!(v["letters"], serde_json::json!([3]));
    let v = json(&["spectrum", "--rep", "++", "--emax", "10"]);
    assert_eq!(v["levels"][0]["energy"], 4.0);
    assert_eq!(v["statistics"], "BOSONIC");
    let v = json(&["winding", "--n", "4", "t1 t2 t3 t1 t2 t1 t2 t1 t2 t3 t2 t1"]);
    assert_eq!(v["entries"], serde_json::json!([-1, -1, -1, -1, -1, -1, -1]));
    assert_eq!(v["infinite_puncture_winding"], 7);
    json(&["rep", "abelian", "--n", "4"]);
    json(&["rep", "coxeter", "--labels", "5,3", "--word", "t1 t2"]);
    json(&["gamma", "--relation"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "spectrum", "--rep", "-+", "--emax", "12"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["diagram", "--n", "4", "t1 t2 t3 t1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn choreography_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (n, w) in [(3, "t1 t2 t1"), (4, "t1 t3 t2 t2 t1 t3"), (6, "5 4 3 2 1 2 3 4 5"), (2, "e")] {
        let path = dir.path().join("tr.json");
        let p = path.to_str().unwrap();
        stdout(&["choreography", "--n", &n.to_string(), w, "--out", p]);
        let back = stdout(&["extract-word", p]);
        assert_eq!(stdout(&["equal", "--n", &n.to_string(), w, back.trim()]).trim(), "true");
    }
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_traid"))
        .args(["field", "--rep", "+-", "--lambda", "3/2", "--resolution", "33"])
        .args(["--out", "f.csv", "--svg", "sub/f.svg"])
        .env("TRAID_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("f.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 33 * 33);
    let svg = std::fs::read_to_string(dir.path().join("sub/f.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    let diagram = dir.path().join("d.svg");
    stdout(&["diagram", "--n", "3", "t1 t2", "--out", diagram.to_str().unwrap()]);
    assert!(Path::new(&diagram).exists());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| traid(args).status.code().unwrap();
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["normalize", "t1"]), 2);
    assert_eq!(code(&["normalize", "--n", "3", "t7"]), 3);
    assert_eq!(code(&["normalize", "--n", "3", "tx"]), 3);
    assert_eq!(code(&["spectrum", "--rep", "+x", "--emax", "3"]), 3);
    assert_eq!(code(&["field", "--rep", "++", "--lambda", "3/2"]), 3);
    assert_eq!(code(&["extract-word", "/nonexistent/traid.json"]), 4);
    assert_eq!(code(&["winding", "--n", "4", "t1"]), 5);
    let help = stdout(&["--help"]);
    assert!(help.contains("Exit codes") && help.contains("TRAID_OUT_DIR"));
}

#[test]
fn triple_coincidence_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"n":3,"times":[0,1,2],"positions":[[1,2,3],[2,2,2],[3,2,1]]}"#,
    )
    .unwrap();
    let out = traid(&["--json", "extract-word", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "computation");
}

#[test]
fn selftest_is_seeded() {
    let a = stdout(&["--json", "selftest", "--seed", "3", "--cases", "50"]);
    assert_eq!(a, stdout(&["--json", "selftest", "--seed", "3", "--cases", "50"]));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
}
