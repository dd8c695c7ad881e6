use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sievekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sievekit")).args(args).env_remove("SIEVEKIT_THREADS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = sievekit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn fibonomial_prints_the_polynomial() {
    assert_eq!(stdout(&["fibonomial", "--n", "4", "--k", "2"]), "s^4 + 3*s^2*t + 2*t^2\n");
}

#[test]
fn verify_ncpartitions() {
    let path = tmp("ncpartitions.json");
    let out = sievekit(&[
        "verify",
        "--suite",
        "ncpartitions",
        "--n-min",
        "3",
        "--n-max",
        "9",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<Value> = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let real: Vec<&Value> = reports.iter().filter(|r| r["control"] == false).collect();
    assert_eq!(real.len(), 4);
    assert!(real.iter().all(|r| r["pass"] == true && r["kind"] == "dihedral"));
    let first = &real[0]["records"][0];
    for key in ["class", "size", "fixed", "value", "integral", "match"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn chartable_json() {
    let v: Value = serde_json::from_str(&stdout(&["chartable", "--n", "5", "--json"])).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
    assert_eq!(v["irreducibles"].as_array().unwrap().len(), 4);
    assert_eq!(v["irreducibles"][2]["values"][0]["integer"], "2");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "table-1-even", "--n-max", "6"];
    let a = sievekit(&args);
    let b = sievekit(&["--threads", "1", "verify", "--suite", "table-1-even", "--n-max", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = sievekit(&["--threads", "0", "qtcatalan", "--n", "3"]);
    assert!(!out.status.success());
    let out = sievekit(&["enumerate", "--family", "subsets", "--n", "40", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 40"));
    let out = sievekit(&["verify", "--suite", "nope"]);
    assert!(!out.status.success());
    let out = sievekit(&["explore", "--n", "6", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd n"));
}

#[test]
fn thread_count_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_sievekit"))
        .args(["qtcatalan", "--n", "3"])
        .env("SIEVEKIT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "q^3 + q^2*t + q*t^2 + t^3 + q*t\n");
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&["enumerate", "--family", "dissections", "--n", "7", "--k", "2", "--count-only"]), "56\n");
    let dump = stdout(&["enumerate", "--family", "triangulations", "--n", "5", "--dump"]);
    assert_eq!(dump.lines().count(), 5);
}

/// Every printed polynomial command, pinned. `SIEVEKIT_BLESS=1` writes a missing file.
#[test]
fn printed_polynomials_golden() {
    let mut cmds: Vec<Vec<String>> = Vec::new();
    for n in 1..=5 {
        cmds.push(vec!["qtcatalan".into(), "--n".into(), n.to_string()]);
    }
    for d in 0..=3 {
        cmds.push(vec!["qtschroder".into(), "--n".into(), "3".into(), "--d".into(), d.to_string()]);
        cmds.push(vec!["qtschroder".into(), "--n".into(), "3".into(), "--d".into(), d.to_string(), "--little".into()]);
    }
    cmds.push(vec!["fibonomial".into(), "--n".into(), "6".into()]);
    cmds.push(vec!["explore".into(), "--n".into(), "5".into(), "--k".into(), "1".into(), "--f-max".into(), "4".into()]);
    let mut text = String::new();
    for c in &cmds {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        text.push_str(&format!("$ sievekit {}\n{}", c.join(" "), stdout(&args)));
    }
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/printed.txt");
    if std::env::var_os("SIEVEKIT_BLESS").is_some() && !path.exists() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &text).unwrap();
    }
    assert_eq!(text, fs::read_to_string(&path).unwrap());
}
