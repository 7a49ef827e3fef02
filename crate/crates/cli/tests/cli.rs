//! End-to-end runs of the `pathspace` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathspace")).args(args).env_remove("PATHSPACE_SEED").output().expect("binary runs")
}

fn run_seeded(args: &[&str], seed: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathspace")).args(args).env("PATHSPACE_SEED", seed).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn jsonl(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).expect("each line is JSON")).collect()
}

#[test]
fn converge_certifies_the_worked_examples() {
    let out = run(&["converge", "--fixture", "einf-sequences"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("9 pass, 0 fail, 0 inconclusive"));
    assert!(text.contains("case/nnn... -> v: converges to v"));
    assert!(text.contains("case/12n111... -> 12: converges to v:e[1].e[2]"));
}

#[test]
fn converge_selects_the_factor_oracle_by_kind() {
    let out = run(&["converge", "--fixture", "factor-sequences", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let lines = jsonl(&out);
    let cases: Vec<&Value> = lines.iter().filter(|l| l.get("check").is_some()).collect();
    assert!(cases.len() >= 9);
    for c in cases {
        assert_eq!(c["data"]["pointwise"], c["data"]["quotient"]);
        assert_eq!(c["data"]["pointwise"], c["data"]["expect"]);
    }
}

#[test]
fn alignment_is_trivial_on_one_graphs() {
    for name in ["e2", "e3", "e-inf"] {
        let out = run(&["align", "--fixture", name]);
        assert_eq!(code(&out), 0, "{name}");
        assert!(stdout(&out).contains("PASS"));
    }
    let out = run(&["align", "--fixture", "unaligned-table"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn validate_reports_counterexamples() {
    for name in ["square-2graph", "square-2x2", "bipartite-2graph", "square-table", "bipartite-table", "cube-3graph", "e-inf"] {
        assert_eq!(code(&run(&["validate", "--fixture", name])), 0, "{name}");
    }
    for name in ["broken-squares-dup", "broken-squares-split", "broken-squares-missing", "broken-table-nonunique"] {
        let out = run(&["validate", "--fixture", name, "--bound", "2"]);
        assert_eq!(code(&out), 1, "{name}");
        assert!(stdout(&out).contains("counterexample"), "{name}");
    }
}

#[test]
fn graph_files_and_sequence_files_load_from_disk() {
    let g = fixture_file("e2.json");
    let out = run(&["enumerate", "--graph", g.to_str().unwrap(), "--bound", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("7 paths (3 finite, 4 infinite)"));
    let s = fixture_file("einf-sequences.json");
    assert_eq!(code(&run(&["converge", "--input", s.to_str().unwrap()])), 0);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&run(&["validate", "--fixture", "nope"])), 2);
    assert_eq!(code(&run(&["validate", "--fixture", "e2", "--bound", "0"])), 2);
    assert_eq!(code(&run(&["validate", "--fixture", "e2", "--bound", "1,1"])), 2);
    assert_eq!(code(&run(&["validate"])), 2);
    assert_eq!(code(&run(&["validate", "--fixture", "e2", "--graph", "x.json"])), 2);
    assert_eq!(code(&run(&["encode", "--fixture", "e2", "--path", "v:3"])), 2);
    assert_eq!(code(&run(&["encode", "--fixture", "e2"])), 2);
    assert_eq!(code(&run(&["groupoid", "--fixture", "e2", "compose", "v:1|v:2", "v|v|v"])), 2);
    assert_eq!(code(&run(&["tychonoff", "--fixture", "einf-sequences"])), 2);
    assert_eq!(code(&run_seeded(&["converge", "--fixture", "factor-sequences"], "seven")), 2);
    let not_json = fixture_file("../Cargo.toml");
    assert_eq!(code(&run(&["converge", "--input", not_json.to_str().unwrap()])), 2);
}

#[test]
fn bounded_searches_exit_with_three() {
    let out = run(&["subcover", "--fixture", "e2", "--bound", "1", "v:1.1", "v"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("INCONCLUSIVE"));
}

#[test]
fn subcover_verdicts() {
    let out = run(&["subcover", "--fixture", "e2", "v:1", "v:2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("v lies in no given cylinder"));
    let out = run(&["subcover", "--fixture", "e2", "v:1", "v:2", "v"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("covered by v"));
}

#[test]
fn encode_checks_assignments() {
    let out = run(&["encode", "--fixture", "e2", "--bound", "1", "--path", "v:1.(2)*", "--bits", "110"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bits 110, membership conditions hold, decodes to v:1"));
    let out = run(&["encode", "--fixture", "e2", "--bound", "1", "--bits", "111"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("Directed fails"));
}

#[test]
fn groupoid_operations() {
    let g = ["groupoid", "--fixture", "e2"];
    let with = |rest: &[&str]| run(&[&g[..], rest].concat());
    let out = with(&["compose", "v:1|v:2|v:(1)*", "v:2|v|v:(1)*"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(v:(1)*, (1), v:(1)*)"));
    assert_eq!(code(&with(&["compose", "v:1|v:2|v:(1)*", "v:1|v|v:(2)*"])), 1);
    assert_eq!(code(&with(&["invert", "v:1|v:2|v:(1)*"])), 0);
    assert_eq!(code(&with(&["member", "v:1|v:2|v:(1)*", "v:1|v:2"])), 0);
    assert_eq!(code(&with(&["member", "v:1|v:2|v:(1)*", "v:2|v:2"])), 1);
    let out = with(&["intersect", "v:1|v:1", "v|v"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Z(v:1, v:1)"));
    assert_eq!(code(&with(&["bijection", "v:1|v:2", "--bound", "2"])), 0);
}

#[test]
fn tychonoff_traces_q_and_n() {
    let out = run(&["tychonoff", "--fixture", "factor-sequences", "--lifts", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("Q(a) = (1, 2)"));
    assert!(text.contains("N(a) = ∞"));
    assert!(text.contains("cluster (∞, ∞, ∞, …) ↦ 0"));
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let args = ["tychonoff", "--fixture", "factor-sequences", "--format", "jsonl"];
    let a = run_seeded(&args, "42");
    let b = run_seeded(&args, "42");
    assert_eq!(a.stdout, b.stdout);
    let lines = jsonl(&a);
    let checks: Vec<&str> = lines.iter().filter_map(|l| l["check"].as_str()).collect();
    let mut sorted = checks.clone();
    sorted.sort();
    assert_eq!(checks, sorted);
    assert!(lines.iter().all(|l| l["schema"] == "pathspace.report/1"));
    assert_eq!(lines.last().unwrap()["exit"], 0);
    assert!(lines[0]["data"]["seed"] == 42);
}
