use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use num_bigint::BigInt;
use proptest::prelude::*;
use trifam_cli::format::{parse_bfile, render_bfile};
use trifam_cli::{run, Cli};

fn trifam(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_trifam"))
        .args(args)
        .output()
        .expect("spawn trifam");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = trifam(args);
    assert_eq!(code, 0, "trifam {args:?} failed: {err}");
    out
}

fn asset(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(asset("tests/golden").join(name)).unwrap()
}

#[test]
fn triangles_match_golden_files() {
    let cases = [
        ("pascal", "2", "12", "pascal_m2.txt"),
        ("pascal", "3", "12", "pascal_m3.txt"),
        ("pascal", "4", "12", "pascal_m4.txt"),
        ("tiling", "2", "12", "pascal_m2.txt"),
        ("tiling", "3", "13", "tiling_m3.txt"),
        ("tiling", "4", "13", "tiling_m4.txt"),
    ];
    for (family, m, rows, file) in cases {
        let args = ["triangle", "--family", family, "--m", m, "--rows", rows];
        assert_eq!(ok(&args), golden(file), "{family} m={m}");
        let mut all = args.to_vec();
        all.extend(["--method", "all"]);
        assert_eq!(ok(&all), golden(file), "{family} m={m} --method all");
    }
}

#[test]
fn every_named_method_reproduces_the_tiling_figure() {
    for method in ["oracle", "poly", "transfer", "pascal-region", "recurrence3"] {
        let out = ok(&[
            "triangle", "--family", "tiling", "--m", "3", "--rows", "13", "--method", method,
        ]);
        assert_eq!(out, golden("tiling_m3.txt"), "{method}");
    }
}

#[test]
fn oracle_counts_small_board() {
    assert_eq!(
        ok(&["oracle", "--m", "1", "--board-length", "4"]),
        "k count\n0 1\n1 3\n2 1\ntotal 5\n"
    );
}

#[test]
fn subsets_listing_and_counts() {
    let out = ok(&["subsets", "--n", "5", "--m", "2", "--list"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..3], ["{}", "{1}", "{2}"]);
    assert!(lines.contains(&"{1,2}"));
    assert!(!lines.contains(&"{1,3}"));
}

#[test]
fn sequences() {
    assert_eq!(
        ok(&["sequence", "row-sums", "--m", "1", "--count", "6", "--format", "bfile"]),
        "0 1\n1 2\n2 4\n3 8\n4 16\n5 32\n"
    );
    let fib = ok(&[
        "sequence",
        "antidiag_sums",
        "--m",
        "1",
        "--count",
        "8",
        "--format",
        "bfile",
        "--method",
        "all",
    ]);
    assert_eq!(fib, "0 1\n1 1\n2 2\n3 3\n4 5\n5 8\n6 13\n7 21\n");
    let totals = ok(&[
        "sequence",
        "total-tilings",
        "--family",
        "tiling",
        "--m",
        "3",
        "--count",
        "6",
        "--format",
        "bfile",
    ]);
    assert_eq!(totals, "0 1\n1 1\n2 1\n3 4\n4 8\n5 13\n");
}

#[test]
fn fibonacci_polynomials() {
    assert_eq!(ok(&["fibpoly", "--n", "4"]), "f_4 = 1 + 3*x + x^2\n");
    assert_eq!(
        ok(&["fibpoly", "--j", "2", "--m", "3", "--r", "1"]),
        "f_2^2 f_3^1 = 1 + 4*x + 5*x^2 + 2*x^3\n"
    );
}

#[test]
fn detector_on_bundled_specs() {
    let spec = |f: &str| asset("specs").join(f).display().to_string();
    let m1 = ok(&["detect", "--spec", &spec("m1.json")]);
    assert!(
        m1.contains("riordan: yes\nrow-reversed riordan: yes"),
        "{m1}"
    );
    let m2 = ok(&["detect", "--spec", &spec("m2.json")]);
    assert!(m2.contains("row-reversed riordan: yes"));
    assert!(m2.contains("row-reversed p: 1, 0, 1, 0"));
    for m in 3..=5 {
        let out = ok(&["detect", "--spec", &spec(&format!("m{m}_truncated.json"))]);
        assert!(out.contains("row-reversed riordan: no"), "m={m}: {out}");
        assert!(
            out.contains(&format!("(size {m}, specials 1)")),
            "m={m}: {out}"
        );
    }
    let json = ok(&["detect", "--spec", &spec("m1.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["riordan"], "yes");
}

#[test]
fn verify_single_identity() {
    let out = ok(&["verify", "--identity", "rr3", "--max-n", "10"]);
    assert!(out.starts_with("rr3  pass"), "{out}");
    assert!(out.ends_with("summary: 1 pass, 0 evidence, 0 fail, 0 error\n"));
    let json = ok(&["verify", "--identity", "col0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v.to_string().contains("\"verdict\":\"pass\""), "{v}");
}

#[test]
fn exit_codes() {
    assert_eq!(trifam(&["verify", "--identity", "nope"]).0, 1);
    assert_eq!(
        trifam(&[
            "triangle",
            "--m",
            "4",
            "--family",
            "tiling",
            "--method",
            "recurrence3"
        ])
        .0,
        1
    );
    assert_eq!(trifam(&["sequence", "total-tilings", "--m", "2"]).0, 1);
    assert_eq!(trifam(&["triangle"]).0, 1);
    assert_eq!(
        trifam(&["oracle", "--m", "1", "--board-length", "20", "--list"]).0,
        3
    );
    assert_eq!(trifam(&["--help"]).0, 0);
    let bad = std::env::temp_dir().join("trifam-bad-spec.json");
    std::fs::write(&bad, "{\"mode\": \"tile_count\",\n \"complete\": tru }").unwrap();
    let (code, _, err) = trifam(&["detect", "--spec", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn library_entry_point() {
    let cli = Cli::try_parse_from(["trifam", "triangle", "--m", "2", "--rows", "2"]).unwrap();
    let out = run(&cli).unwrap();
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.stdout,
        "n\\k | 0 1 2\n----+------\n  0 | 1\n  1 | 1 0\n  2 | 1 1 1\n"
    );
}

proptest! {
    #[test]
    fn bfile_round_trip(
        terms in prop::collection::vec(any::<i128>(), 0..40),
        offset in -1000i64..1000,
    ) {
        let terms: Vec<BigInt> = terms.into_iter().map(BigInt::from).collect();
        let text = render_bfile(&terms, offset);
        let parsed = parse_bfile(&text).unwrap();
        prop_assert_eq!(parsed.len(), terms.len());
        for (i, (idx, v)) in parsed.iter().enumerate() {
            prop_assert_eq!(*idx, offset + i as i64);
            prop_assert_eq!(v, &terms[i]);
        }
    }
}
