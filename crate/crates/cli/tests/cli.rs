use std::fs;
use std::process::{Command, Output};

fn qdissect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdissect"))
        .args(args)
        .env_remove("QDISSECT_CACHE")
        .output()
        .expect("run qdissect")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn statuses(json: &str) -> Vec<(String, String)> {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| (r["id"].as_str().unwrap().to_owned(), r["status"].as_str().unwrap().to_owned()))
        .collect()
}

#[test]
fn exit_codes() {
    let ok = qdissect(&["verify", "--suite", "wr-all", "--order", "200"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("10 checks: 10 pass, 0 emended-pass, 0 fail"));

    assert_eq!(qdissect(&["verify", "--suite", "nope"]).status.code(), Some(64));
    assert_eq!(qdissect(&["verify", "--bogus"]).status.code(), Some(64));
    assert_eq!(qdissect(&["verify", "--jobs", "0"]).status.code(), Some(64));
    let over = qdissect(&["verify", "--suite", "thm-1.2", "--order", "400", "--oracle-ceiling", "100"]);
    assert_eq!(over.status.code(), Some(64));

    let emended = qdissect(&["verify", "--suite", "prop-6.6", "--order", "200"]);
    assert_eq!(emended.status.code(), Some(2));
    assert_eq!(qdissect(&["--version"]).status.code(), Some(0));
}

#[test]
fn series_output() {
    let o = qdissect(&["series", "J1", "--order", "8"]);
    let coeffs: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_owned())
        .collect();
    assert_eq!(coeffs, ["1", "-1", "-1", "0", "0", "1", "0", "1"]);

    let csv = stdout(&qdissect(&["series", "E4", "--order", "3", "--format", "csv"]));
    assert_eq!(csv, "exponent,numerator,denominator\n0,1,1\n1,240,1\n2,2160,1\n");

    assert_eq!(stdout(&qdissect(&["series", "zero", "--format", "json"])).trim(), "[]");
    assert_eq!(qdissect(&["series", "nonsense"]).status.code(), Some(64));
}

#[test]
fn tables() {
    let spt = stdout(&qdissect(&["tables", "spt", "--max-n", "4"]));
    assert_eq!(spt, "0 0\n1 1\n2 3\n3 5\n4 10\n");
    let crank = stdout(&qdissect(&["tables", "crank", "--max-n", "1"]));
    assert!(crank.lines().any(|l| l == "1 0 -1"));
}

#[test]
fn scan() {
    let o = qdissect(&["scan", "conj-6.2", "--ceiling", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations at n = [2]"));
    assert_eq!(qdissect(&["scan", "thm-1.2"]).status.code(), Some(64));
}

#[test]
fn json_covers_the_suites() {
    let o = qdissect(&["verify", "--suite", "q-tables", "--order", "120", "--oracle-ceiling", "130", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(statuses(&stdout(&o)).len() > 100);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let p = path.to_str().unwrap();
    let args = ["verify", "--suite", "certificates", "--order", "100", "--oracle-ceiling", "120", "--format", "json"];

    let plain = statuses(&stdout(&qdissect(&args)));
    let cold = statuses(&stdout(&qdissect(&[&args[..], &["--cache", p]].concat())));
    assert!(path.exists());
    let warm = statuses(&stdout(&qdissect(&[&args[..], &["--cache", p]].concat())));
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);

    // a stale version forces a rebuild
    let text = fs::read_to_string(&path).unwrap().replacen("\"format_version\":1", "\"format_version\":0", 1);
    fs::write(&path, text).unwrap();
    let rebuilt = statuses(&stdout(&qdissect(&[&args[..], &["--cache", p]].concat())));
    assert_eq!(rebuilt, plain);
    assert!(fs::read_to_string(&path).unwrap().contains("\"format_version\":1"));
}

#[test]
fn env_overrides_cache_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.json");
    let flag_path = dir.path().join("flag.json");
    let o = Command::new(env!("CARGO_BIN_EXE_qdissect"))
        .args(["verify", "--suite", "spt-4", "--oracle-ceiling", "20", "--order", "20"])
        .arg("--cache")
        .arg(&flag_path)
        .env("QDISSECT_CACHE", &env_path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_path.exists());
    assert!(!flag_path.exists());
}
