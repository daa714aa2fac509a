use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3tensor")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = run(&a);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k3tensor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn random_tensor(family: &str, seed: u64) -> Value {
    let out = run(&["random", family, "--seed", &seed.to_string()]);
    assert!(out.status.success());
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn lattice_reports() {
    let (code, v) = json(&["lattice", "2224"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["abs_det"], "1024");
    let (code, v) = json(&["lattice", "4sympent"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["abs_det"], "96");
    assert_eq!(v["data"]["rank"], 17);
}

#[test]
fn unknown_family_is_a_lookup_error() {
    let out = run(&["lattice", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lookup error"));
}

#[test]
fn rr_entropy() {
    let (code, v) = json(&["auto", "rr"]);
    assert_eq!(code, 0);
    let e = v["data"]["reports"][0]["entropy"][0].as_str().unwrap();
    assert!(e.starts_with("2.887"), "{e}");
}

#[test]
fn salem_table_and_bad_words() {
    let (code, v) = json(&["auto", "pent", "--k", "4"]);
    assert_eq!(code, 0);
    assert!(v["data"]["salem_families"].as_array().unwrap().len() >= 16);
    let (code, v) = json(&["auto", "pent", "--word", "a34_5 a24_5", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["reports"].as_array().unwrap().len(), 3);
    let out = run(&["auto", "pent", "--word", "a34_5 bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lookup error"));
}

#[test]
fn truncated_tensor_file_reports_position() {
    let p = temp_file("trunc.json", "{\"shape\": [4,\n 4");
    let out = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn unsupported_shape_is_a_format_error() {
    let t = r#"{"shape":[3,3],"symmetry":"none","field":"Z","entries":["1","0","0","0","1","0","0","0","1"]}"#;
    let p = temp_file("square.json", t);
    let out = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("format error"));
}

#[test]
fn planted_kernel_is_reported_with_witness() {
    let mut t = random_tensor("rr", 4);
    let entries = t["entries"].as_array_mut().unwrap();
    for (o, x) in entries.iter_mut().enumerate() {
        let idx = [o / 16, o / 4 % 4, o % 4];
        if idx.iter().filter(|&&i| i != 0).count() <= 1 {
            *x = Value::from("0");
        }
    }
    let p = temp_file("planted.json", &t.to_string());
    let (code, v) = json(&["analyze", p.to_str().unwrap(), "--primes", "5,7"]);
    assert_eq!(code, 0);
    for scan in v["data"]["scans"].as_array().unwrap() {
        assert_eq!(scan["hyperdet"]["status"], "vanishes");
        assert!(scan["hyperdet"]["witness"].is_array());
    }
}

#[test]
fn reports_are_reproducible() {
    let p = temp_file("rr1.json", &random_tensor("rr", 1).to_string());
    let a = run(&["--json", "analyze", p.to_str().unwrap(), "--primes", "5"]);
    let b = run(&["--json", "analyze", p.to_str().unwrap(), "--primes", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let (_, v) = json(&["analyze", "--family", "pent", "--seeds", "0", "--primes", "3"]);
    assert_eq!(v["data"][0]["report"]["family"], "pent");
}

#[test]
fn accept_exit_codes() {
    let (code, v) = json(&["accept", "lattices"]);
    assert_eq!(code, 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
    // Two stated characteristic polynomials and one entropy window do not reproduce.
    let (code, v) = json(&["accept", "dynamics"]);
    assert_eq!(code, 1);
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "FAIL")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["c04/char-poly Phi_53214@22sympent", "c04/char-poly Phi_53214@23sympent", "c05/eta rr window"]);
    assert!(run(&["accept", "bogus"]).status.code() == Some(2));
}
