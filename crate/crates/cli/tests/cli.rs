use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn leavitt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leavitt"))
        .args(args)
        .env_remove("LEAVITT_CHAR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let o = leavitt(args);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn golden_simple() {
    let o = leavitt(&["simple", "--n", "3", "--d", "1", "--char", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#"{"ok":true,"result":{"simple":true,"reason":"CharDividesN1AndNotD"}}"#);
}

#[test]
fn golden_trace() {
    let o = leavitt(&["trace", "x1*y1", "--n", "3", "--char", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#"{"ok":true,"result":"1 mod 2"}"#);
}

#[test]
fn golden_witness() {
    let o = leavitt(&["witness", "--n", "3", "--d", "2", "--char", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        concat!(
            r#"{"ok":true,"result":{"witness":{"field":{"characteristic":2},"n":3,"d":2,"#,
            r#""pairs":[{"left":[["0","1"],["0","0"]],"right":[["0","0"],["1","0"]]}]},"verified":true}}"#
        )
    );
}

#[test]
fn verdict_reasons() {
    for (args, simple, reason) in [
        (["--n", "3", "--d", "2", "--char", "2"], false, "CharDividesD"),
        (["--n", "4", "--d", "1", "--char", "2"], false, "CharNotDividesN1"),
        (["--n", "2", "--d", "1", "--char", "0"], false, "CharNotDividesN1"),
        (["--n", "4", "--d", "2", "--char", "3"], true, "CharDividesN1AndNotD"),
    ] {
        let mut full = vec!["simple"];
        full.extend(args);
        let (code, v) = run_json(&full);
        assert_eq!(code, 0);
        assert_eq!(v, json!({"ok": true, "result": {"simple": simple, "reason": reason}}), "{args:?}");
    }
}

#[test]
fn evaluation_commands() {
    assert_eq!(run_json(&["nf", "1 - x1*y1 - x2*y2"]).1, json!({"ok": true, "result": "0"}));
    assert_eq!(
        run_json(&["nf", "1 - x1*y1 - x2*y2", "--mode", "cohn"]).1["result"],
        json!("1 - x[1]*y[1] - x[2]*y[2]")
    );
    assert_eq!(run_json(&["nf", "[y1,x1]+[y2,x2]+[y3,x3]", "--n", "3", "--char", "2"]).1["result"], json!("0"));
    assert_eq!(run_json(&["nf", "[y1,x1]+[y2,x2]+[y3,x3]", "--n", "3"]).1["result"], json!("2"));
    assert_eq!(run_json(&["trace", "1 - x1*y1", "--mode", "cohn", "--n", "3"]).1["result"], json!("0"));
    assert_eq!(
        run_json(&["nf", "x1", "--mode", "matrix", "--d", "2"]).1["result"],
        json!([["x[1]", "0"], ["0", "x[1]"]])
    );
    assert_eq!(
        run_json(&["trace", "1", "--mode", "matrix", "--d", "4", "--n", "4", "--char", "3"]).1["result"],
        json!("1 mod 3")
    );
    assert_eq!(run_json(&["bracket", "y1", "x1", "--n", "3"]).1["result"], json!("1 - x[1]*y[1]"));
}

#[test]
fn exit_codes() {
    let (code, v) = run_json(&["nf", "x1 y2"]);
    assert_eq!((code, &v["ok"]), (2, &json!(false)));
    assert!(v["reason"].as_str().unwrap().contains("position 3"));

    let (code, v) = run_json(&["nf", "x3"]);
    assert_eq!((code, &v["ok"]), (1, &json!(false)));

    let (code, _) = run_json(&["nf", "x12", "--n", "11"]);
    assert_eq!(code, 1);

    let (code, v) = run_json(&["trace", "x1*y1", "--n", "3", "--char", "3"]);
    assert_eq!(code, 1);
    assert!(v["reason"].as_str().unwrap().contains("undefined"));

    assert_eq!(run_json(&["simple", "--char", "4"]).0, 1);
    assert_eq!(run_json(&["witness", "--n", "3", "--char", "2"]).0, 1);
    assert_eq!(run_json(&["simple", "--frobnicate"]).0, 2);
    assert_eq!(run_json(&["grid", "--n-range", "8..2"]).0, 2);
    assert_eq!(run_json(&["simple", "--mode", "ring"]).0, 2);

    let help = leavitt(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("Usage"));
}

#[test]
fn witness_file_round_trip() {
    let (_, v) = run_json(&["witness", "--n", "5", "--d", "3", "--char", "3"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    fs::write(&path, v["result"]["witness"].to_string()).unwrap();
    let (code, out) = run_json(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out["result"], json!({"verified": true, "characteristic": 3, "n": 5, "d": 3}));

    // Dropping a pair breaks the identity.
    let mut broken = v["result"]["witness"].clone();
    broken["pairs"].as_array_mut().unwrap().pop();
    fs::write(&path, broken.to_string()).unwrap();
    assert_eq!(run_json(&["verify", path.to_str().unwrap()]).1["result"]["verified"], json!(false));

    fs::write(&path, "{not json").unwrap();
    assert_eq!(run_json(&["verify", path.to_str().unwrap()]).0, 2);
    assert_eq!(run_json(&["verify", "/nonexistent/w.json"]).0, 1);
}

#[test]
fn taud_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    fs::write(&path, r#"[["x[1]*y[1]", "x[2]"], ["y[1]", "1 + x[2]*y[2]"]]"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(run_json(&["taud", p, "--n", "3", "--char", "2"]).1["result"], json!("1 mod 2"));
    assert_eq!(run_json(&["taud", p, "--n", "3", "--char", "3"]).0, 1);
    fs::write(&path, r#"[["1", "0"], ["0"]]"#).unwrap();
    assert_eq!(run_json(&["taud", p, "--n", "3", "--char", "2"]).0, 1);
    fs::write(&path, r#"[["x1 x2"]]"#).unwrap();
    assert_eq!(run_json(&["taud", p, "--n", "3", "--char", "2"]).0, 2);
}

#[test]
fn grid_matches_simple() {
    let (code, v) = run_json(&["grid", "--chars", "0,2,3", "--n-range", "2..5", "--d-range", "1..3"]);
    assert_eq!(code, 0);
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 3 * 4 * 3);
    for r in rows {
        let (p, n, d) = (r["characteristic"].as_u64().unwrap(), r["n"].as_u64().unwrap(), r["d"].as_u64().unwrap());
        let expected = p != 0 && (n - 1) % p == 0 && d % p != 0;
        assert_eq!(r["simple"], json!(expected), "{r}");
    }
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("session.cfg");
    fs::write(&path, "# defaults for this session\nn = 3\nchar = 2\nd=1\n").unwrap();
    let cfg = path.to_str().unwrap();

    let simple = |extra: &[&str], env: Option<&str>| -> Value {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_leavitt"));
        cmd.arg("simple").args(extra).env_remove("LEAVITT_CHAR");
        if let Some(c) = env {
            cmd.env("LEAVITT_CHAR", c);
        }
        let o = cmd.output().unwrap();
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let reason = |v: Value| v["result"]["reason"].as_str().unwrap().to_string();

    // defaults: n=2 over Q
    assert_eq!(reason(simple(&[], None)), "CharNotDividesN1");
    // env sets the characteristic: n=3, p=2
    assert_eq!(reason(simple(&["--n", "3"], Some("2"))), "CharDividesN1AndNotD");
    // file beats env
    assert_eq!(reason(simple(&["--config", cfg], Some("5"))), "CharDividesN1AndNotD");
    // flags beat the file
    assert_eq!(reason(simple(&["--config", cfg, "--d", "2"], None)), "CharDividesD");
    assert_eq!(reason(simple(&["--config", cfg, "--char", "3"], None)), "CharNotDividesN1");

    fs::write(&path, "n = three\n").unwrap();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_leavitt"));
    let o = cmd.args(["simple", "--config", cfg]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pretty_output() {
    let o = leavitt(&["--pretty", "trace", "x1*y1", "--n", "3", "--char", "2"]);
    assert_eq!(stdout(&o), "1 mod 2");
    let o = leavitt(&["nf", "x1", "--mode", "matrix", "--d", "2", "--pretty"]);
    assert_eq!(stdout(&o), "x[1]\t0\n0\tx[1]");
}
