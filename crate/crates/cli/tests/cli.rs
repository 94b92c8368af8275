use std::process::{Command, Output};

use diamon::acceptance::tables;

fn diamon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diamon")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = diamon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_dims(p: &str) -> Vec<(u64, u64, u64)> {
    stdout(&["dims", "--family", "tl", "--n", "16", "--char", p, "--format", "csv"])
        .lines()
        .skip(2)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!((f[0], f[3], f[6]), ("tl", p, "formula"));
            (f[1].parse().unwrap(), f[2].parse().unwrap(), f[4].parse().unwrap())
        })
        .collect()
}

#[test]
fn dims_csv_reproduces_both_tables() {
    assert_eq!(csv_dims("0"), tables::DIMS_CHAR0);
    assert_eq!(csv_dims("2"), tables::DIMS_CHAR2);
}

#[test]
fn dims_text_row_sixteen() {
    let out = stdout(&["dims", "--family", "tl", "--n", "16"]);
    assert!(out.lines().any(|l| l == " 16 | 1 3432 1429 2211 1260 337 103 15 1"), "{out}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["dims", "--family", "tl", "--n", "12", "--char", "3", "--format", "csv"][..],
        &["protocol", "su", "--family", "tl", "--n", "10", "--truncate-low", "4", "--seed", "11", "--format", "json"],
        &["cells", "--family", "brauer", "--n", "4", "--format", "json"],
    ] {
        assert_eq!(diamon(args).stdout, diamon(args).stdout, "{args:?}");
    }
}

#[test]
fn ssdims_tuple() {
    let out = stdout(&["ssdims", "--family", "tl", "--n", "24"]);
    assert!(out.ends_with(
        "208012 534888 653752 572033 389367 211508 92092 31878 8602 1748 252 23 1\n"
    ));
}

#[test]
fn json_carries_schema_version() {
    let out = stdout(&["gap", "--family", "tl", "--n", "8", "--char", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["gap"]["status"], "exact");
}

#[test]
fn transcripts_agree() {
    for kind in ["su", "stickel"] {
        let out = stdout(&["protocol", kind, "--family", "brauer", "--n", "6", "--seed", "5", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["equal"], true, "{out}");
        assert_eq!(v["secret_alice"], v["secret_bob"]);
    }
    let out = diamon(&["protocol", "su", "--family", "tl", "--n", "6", "--alice", "1,2", "--bob", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ratios_print_fraction_and_decimal() {
    let out = stdout(&["bounds", "--family", "tl", "--n", "24", "--k", "8"]);
    assert!(out.contains("ssgap ≥ 676039/6 ≈ 112673"), "{out}");
    assert!(out.contains("gratio  = (4807/2)/sqrt(1235594255971) ≈ 0.00216225"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(diamon(&["dims", "--family", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(diamon(&["dims", "--family", "brauer", "--n", "3"]).status.code(), Some(2));
    assert_eq!(diamon(&["gram", "--family", "tl", "--n", "4", "--k", "3"]).status.code(), Some(2));
    assert_eq!(diamon(&["enumerate", "--family", "tl", "--n", "20"]).status.code(), Some(3));
    assert_eq!(diamon(&["cells", "--family", "tl"]).status.code(), Some(2));
    assert_eq!(diamon(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn monoid_sources() {
    let out = stdout(&["period", "--family", "cyclic", "--n", "3", "--period", "2", "--element", "a^1"]);
    assert_eq!(out, "a^1: index 3, period 2, H-cell order 2, largest prime of period 2\n");
    let out = stdout(&["cells", "--family", "transformation", "--n", "3", "--format", "csv"]);
    let sizes: Vec<&str> = out.lines().skip(2).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(sizes, ["6", "18", "3"]);
    let out = stdout(&["truncate", "--family", "tl", "--n", "4", "--low", "2"]);
    assert!(out.contains("14 elements, J-cell sizes 1 + 9 + 4"), "{out}");
}

#[test]
fn selftest_passes_apart_from_known_failures() {
    let out = diamon(&["selftest"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 14);
}
