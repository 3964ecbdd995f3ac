use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spin-kostka"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)).unwrap()
}

#[test]
fn halved_tables_match_golden_files() {
    for n in ["3", "4"] {
        for (format, ext) in [("csv", "csv"), ("latex", "tex")] {
            let got = stdout(&["table", "--n", n, "--halved", "--format", format]);
            assert_eq!(got, fixture(&format!("table_n{n}_halved.{ext}")), "n={n} {format}");
        }
    }
}

#[test]
fn table_json_cells() {
    let v: Value = serde_json::from_str(&stdout(&["table", "--n", "3", "--halved", "--format", "json"])).unwrap();
    assert_eq!(v["entries"][1][2], "t+t^2");
    assert_eq!(v["rows"][1], serde_json::json!([2, 1]));
    let v: Value = serde_json::from_str(&stdout(&["table", "--n", "4", "--halved", "--format", "json"])).unwrap();
    assert_eq!(v["entries"][0][4], "1+t+t^2+2*t^3+t^4+t^5+t^6");
    let v: Value = serde_json::from_str(&stdout(&["table", "--n", "1", "--halved", "--format", "json"])).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["1"]]));
}

#[test]
fn unhalved_table_keeps_powers_of_two() {
    let v: Value = serde_json::from_str(&stdout(&["table", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(v["entries"][0][0], "2");
    assert_eq!(v["entries"][1][1], "4");
}

#[test]
fn expansions() {
    assert_eq!(stdout(&["expand", "--what", "Q", "--arg", "2,1"]), "4*s[2,1]\n");
    assert_eq!(
        stdout(&["expand", "--what", "S", "--arg", "1,1", "--basis", "p"]),
        "2*p[1,1]\n"
    );
    assert_eq!(stdout(&["expand", "--what", "q", "--arg", "0"]), "1\n");
    assert_eq!(stdout(&["expand", "--what", "H", "--arg", "1,1"]), "t*s[2] + s[1,1]\n");
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    for (suite, n) in [("A", "4"), ("oracles", "4"), ("4.3", "3"), ("negative-4.4", "3")] {
        let a = stdout(&["verify", "--n", n, "--suite", suite]);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["report"]["passed"], true, "{suite}");
        assert_eq!(v["meta"]["suite"], suite);
        assert_eq!(a, stdout(&["verify", "--n", n, "--suite", suite]));
    }
    let v: Value = serde_json::from_str(&stdout(&["verify", "--n", "3", "--suite", "negative-4.4"])).unwrap();
    assert_eq!(v["report"]["info"]["witness"], serde_json::json!([3]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--n", "3", "--suite", "nope"][..],
        &["verify", "--n", "9", "--suite", "A"],
        &["table", "--n", "0"],
        &["expand", "--what", "Q", "--arg", "1,1"],
        &["expand", "--what", "S", "--arg", "1,2"],
        &["qt-table", "--n", "2"],
        &["qt-table", "--n", "6", "--spin"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn qt_tables() {
    let v: Value = serde_json::from_str(&stdout(&["qt-table", "--n", "2", "--classical"])).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["1", "t"], ["q", "1"]]));
    let tex = stdout(&["qt-table", "--n", "2", "--spin", "--format", "latex"]);
    assert!(tex.contains("(2) & 2+2q & 2+2t"), "{tex}");
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("spin-kostka-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["table", "--n", "3", "--halved", "--output", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), fixture("table_n3_halved.csv"));
    std::fs::remove_file(path).unwrap();
}
