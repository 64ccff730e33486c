use std::fs;
use std::path::Path;
use std::process::Command;

use kasami::cli::{run, Verdict};

fn go(args: &[&str]) -> kasami::cli::Outcome {
    run(std::iter::once("kasami").chain(args.iter().copied()))
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn verify_paper_passes_at_q4() {
    let out = go(&["verify-paper", "--q", "4", "--p", "2"]);
    assert_eq!(out.code, 0, "{}", out.output);
    let report = out.report.unwrap();
    assert!(report.checks.len() >= 15);
    assert!(report.checks.iter().all(|c| c.verdict == Verdict::Pass));
    assert!(out.output.ends_with("result: pass (16 checks, 0 failed)\n"));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["verify-paper", "--q", "8", "--p", "2"][..],
        &[
            "--json",
            "verify-paper",
            "--q",
            "4",
            "--p",
            "2",
            "--seed",
            "7",
        ][..],
        &["union", "--q", "4", "--p", "2", "--k", "2"][..],
        &["--json", "aut", "--q", "4", "--level", "monomial"][..],
    ] {
        assert_eq!(go(args).output, go(args).output);
    }
}

#[test]
fn json_schema() {
    let out = go(&["--json", "mds", "--q", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["command"], "kasami --json mds --q 4");
    assert_eq!(v["config"]["q"], 4);
    assert_eq!(v["config"]["modulus"], "0x13");
    for check in v["checks"].as_array().unwrap() {
        for key in ["check", "verdict", "expected", "observed", "millis"] {
            assert!(check.get(key).is_some(), "missing {key}");
        }
        assert!(check["millis"].is_null());
    }
    let timed = go(&["--json", "--timings", "mds", "--q", "4"]);
    let v: serde_json::Value = serde_json::from_str(&timed.output).unwrap();
    assert!(v["checks"][0]["millis"].is_u64());
}

#[test]
fn gfc_round_trip_through_weights_and_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let mds = path(dir.path(), "mds_q4.gfc");
    assert_eq!(go(&["mds", "--q", "4", "--out", &mds]).code, 0);
    assert!(fs::read_to_string(&mds)
        .unwrap()
        .starts_with("field e=4 poly=0x13\ncode n=5 k=3 sub=2\n"));

    let w = go(&["weights", "--in", &mds]);
    assert_eq!(w.code, 0);
    for line in ["A_0 = 1", "A_3 = 30", "A_4 = 15", "A_5 = 18"] {
        assert!(w.output.lines().any(|l| l == line), "{line}");
    }

    let edges = path(dir.path(), "edges.txt");
    let g = go(&["coset-graph", "--in", &mds, "--export", &edges]);
    assert_eq!(g.code, 0);
    assert!(g.output.contains("vertices: 64\ndegree: 15\n"));
    assert!(g.output.contains("distance-regular: {15, 12, 1; 1, 4, 15}"));
    let text = fs::read_to_string(&edges).unwrap();
    assert_eq!(text.lines().count(), 64 * 15 / 2);
    assert!(text.lines().all(|l| {
        let (u, v) = l.split_once(' ').unwrap();
        u.parse::<u32>().unwrap() < v.parse::<u32>().unwrap()
    }));
}

#[test]
fn verify_cr_and_its_negative_control() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = path(dir.path(), "k4.gfc");
    assert_eq!(
        go(&["kasami", "--q", "4", "--p", "2", "--dual", "--out", &k4]).code,
        0
    );
    let ok = go(&["verify-cr", "--in", &k4]);
    assert_eq!(ok.code, 0, "{}", ok.output);
    assert!(ok.output.contains("observed {15, 12, 1; 1, 4, 15}"));

    let dual = path(dir.path(), "k4dual.gfc");
    assert_eq!(
        go(&[
            "kasami",
            "--q",
            "4",
            "--p",
            "2",
            "--cyclic-order",
            "--out",
            &dual
        ])
        .code,
        0
    );
    assert_eq!(go(&["verify-cr", "--check", "--in", &dual]).code, 0);

    let text = fs::read_to_string(&k4).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    let header = lines[1].replace("k=9", "k=8");
    lines[1] = &header;
    let cut = path(dir.path(), "k4cut.gfc");
    fs::write(&cut, lines.join("\n") + "\n").unwrap();
    let bad = go(&["verify-cr", "--in", &cut]);
    assert_eq!(bad.code, 1);
    assert!(bad
        .output
        .contains("first witness (completely_regular): vertex"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(go(&["frobnicate"]).code, 2);
    assert_eq!(go(&["mds"]).code, 2);
    assert_eq!(go(&["kasami", "--q", "6", "--p", "2"]).code, 2);
    assert_eq!(go(&["kasami", "--q", "64", "--p", "4"]).code, 2);
    assert_eq!(go(&["field", "--e", "4", "--modulus", "1f"]).code, 2);
    assert_eq!(go(&["weights", "--in", "/nonexistent/file.gfc"]).code, 2);
    assert_eq!(go(&["union", "--q", "4", "--p", "2", "--k", "4"]).code, 2);
    assert_eq!(go(&["--help"]).code, 0);
}

#[test]
fn other_subcommands() {
    assert_eq!(go(&["field", "--e", "8"]).code, 0);
    assert_eq!(go(&["field", "--e", "4", "--modulus", "0x19"]).code, 0);
    assert_eq!(
        go(&["kasami", "--q", "16", "--p", "4", "--cyclic-order"]).code,
        0
    );
    for k in ["1", "2", "3"] {
        assert_eq!(go(&["union", "--q", "4", "--p", "2", "--k", k]).code, 0);
        assert_eq!(
            go(&["union", "--q", "4", "--p", "4", "--k", k, "--base", "mds"]).code,
            0
        );
    }
    assert_eq!(
        go(&[
            "union",
            "--q",
            "4",
            "--p",
            "2",
            "--k",
            "2",
            "--mode",
            "additive-tower"
        ])
        .code,
        0
    );
    let aut = go(&["aut", "--q", "4", "--level", "semilinear"]);
    assert_eq!(aut.code, 0);
    assert!(aut.output.contains("certified order: 360"));
    assert_eq!(
        go(&["--seed", "12345", "verify-paper", "--q", "8", "--p", "2"]).code,
        0
    );
}

#[test]
fn binary_honours_thread_env_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kasami");
    let out = Command::new(bin)
        .args(["verify-paper", "--q", "4", "--p", "2"])
        .env("KASAMI_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        go(&["verify-paper", "--q", "4", "--p", "2"]).output
    );
    let out = Command::new(bin)
        .args(["mds", "--q", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
    let out = Command::new(bin)
        .args(["--threads", "2", "mds", "--q", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
