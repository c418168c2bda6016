use std::process::{Command, Output};

use permcross::fixtures;
use serde_json::Value;

fn permcross(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcross"))
        .args(args)
        .env_remove("PERMCROSS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(permcross(&["stats", "1"]).status.code(), Some(0));
    let shallow = permcross(&["verify", "check_thm11", "--order", "8", "--depth", "4"]);
    assert_eq!(shallow.status.code(), Some(1));
    let report: Value = serde_json::from_str(stdout(&shallow).trim()).unwrap();
    assert_eq!(report["status"], "fail");
    assert!(report["counterexample"].is_object());
    assert_eq!(permcross(&["stats", "4415"]).status.code(), Some(2));
    assert_eq!(permcross(&["verify", "check_everything"]).status.code(), Some(2));
    assert_eq!(permcross(&["triangle", "--rows", "5..2"]).status.code(), Some(2));
    assert_eq!(permcross(&["dist", "--n", "4", "--stat", "height"]).status.code(), Some(2));
    let overflow = permcross(&["series", "--gf", "cf-321", "--order", "40"]);
    assert_eq!(overflow.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&overflow.stderr).contains("overflow"));
}

#[test]
fn stats_of_a_single_point() {
    let out = stdout(&permcross(&["stats", "1"]));
    for stat in ["crs", "inv", "exc", "nes", "ut", "lt", "ddes", "dasc", "occ31_2"] {
        assert!(out.contains(&format!("\n{stat}=0\n")), "{stat} in {out}");
    }
}

#[test]
fn occurrence_count() {
    let out = stdout(&permcross(&["stats", "4162375", "--occurrences", "312"]));
    assert!(out.ends_with("occurrences of 312: 6\n"), "{out}");
}

#[test]
fn dist_and_series() {
    assert_eq!(stdout(&permcross(&["dist", "--n", "6", "--avoid", "321,231", "--format", "json"])), "[13,10,6,2,1]\n");
    assert_eq!(stdout(&permcross(&["series", "--avoid", "-", "--order", "0", "--format", "json"])), "[[1]]\n");
    let gf = stdout(&permcross(&["series", "--gf", "pair-321-231", "--order", "6", "--format", "json"]));
    let enumerated = stdout(&permcross(&["series", "--avoid", "321,231", "--order", "6", "--format", "json"]));
    assert_eq!(gf, enumerated);
    let cf = stdout(&permcross(&["series", "--gf", "cf-321", "--order", "7", "--format", "json"]));
    let enumerated = stdout(&permcross(&["series", "--avoid", "132", "--order", "7", "--format", "json"]));
    assert_eq!(cf, enumerated);
}

#[test]
fn triangle_exports() {
    let out = stdout(&permcross(&[
        "triangle",
        "--avoid",
        "123,132",
        "--selector",
        "first1@n-1",
        "--rows",
        "2..4",
        "--format",
        "bfile",
    ]));
    assert_eq!(out, "1 1\n2 1\n3 1\n4 1\n5 2\n6 1\n");
    let out = stdout(&permcross(&[
        "triangle",
        "--avoid",
        "123,213",
        "--selector",
        "last@2",
        "--rows",
        "2..4",
        "--format",
        "json",
    ]));
    assert_eq!(out, "[[1],[1,1],[1,2,1]]\n");
}

#[test]
fn fixture_rows_match_cli() {
    for (id, f) in fixtures::all() {
        let rows = format!("{}..{}", f.n_min, f.n_min + f.rows.len() - 1);
        let out = stdout(&permcross(&[
            "triangle",
            "--avoid",
            &f.patterns,
            "--selector",
            &f.selector,
            "--rows",
            &rows,
            "--format",
            "json",
        ]));
        let got: Vec<Vec<i64>> = serde_json::from_str(&out).unwrap();
        assert_eq!(got, f.rows, "{id}");
    }
}

#[test]
fn verify_with_tiny_bounds() {
    let out = permcross(&["verify", "--all", "--nmax", "1", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 13);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_ne!(v["status"], "fail", "{line}");
        assert!(v["elapsed_ms"].is_u64());
    }
}

#[test]
fn thread_count_from_environment() {
    let a = Command::new(env!("CARGO_BIN_EXE_permcross"))
        .args(["dist", "--n", "9", "--avoid", "231"])
        .env("PERMCROSS_THREADS", "3")
        .output()
        .unwrap();
    let b = permcross(&["dist", "--n", "9", "--avoid", "231", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_permcross"))
        .args(["dist", "--n", "3"])
        .env("PERMCROSS_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rows.json");
    let cache = cache.to_str().unwrap();
    let first = permcross(&["dist", "--n", "8", "--avoid", "321", "--cache", cache]);
    let entries: Value = serde_json::from_str(&std::fs::read_to_string(cache).unwrap()).unwrap();
    assert_eq!(entries.as_array().unwrap().len(), 1);
    let second = permcross(&["dist", "--n", "8", "--avoid", "321", "--cache", cache]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn pairs_partition_respects_rci() {
    let out = permcross(&["wilf", "--family", "pairs3", "--nmax", "8", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let classes = v["classes"].as_array().unwrap();
    let total: usize = classes.iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(total, 15);
    let class_of = |s: &str| classes.iter().position(|c| c.as_array().unwrap().iter().any(|m| m == s)).unwrap();
    assert_eq!(class_of("123,132"), class_of("123,213"));
    assert_eq!(class_of("132,231"), class_of("213,231"));
}
