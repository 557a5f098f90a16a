use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn spincactus(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spincactus"));
    cmd.args(args)
        .env_remove("SPINCACTUS_LIMIT")
        .stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        // A command that fails before reading its input closes the pipe early.
        let _ = child.stdin.take().expect("piped stdin").write_all(text.as_bytes());
    }
    let out = child.wait_with_output().expect("binary finishes");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn fixture_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn fixture(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(fixture_path(name)).expect("fixture")).expect("fixture JSON")
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).expect("JSON output")
}

fn lines(text: &str) -> Vec<Value> {
    text.lines().map(json).collect()
}

#[test]
fn classify_sequence_with_type_two_triple() {
    let run = spincactus(
        &["classify", "--i", "5", "--in", &fixture_path("type2_sequence")],
        None,
        &[],
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = json(&run.stdout);
    assert_eq!(report["type"], "Type2");
    assert_eq!(report["tableau_type"], "Type2");
    let last = report["free_intervals"].as_array().expect("intervals").last().cloned();
    assert_eq!(
        last.map(|fr| (fr["min"].clone(), fr["max"].clone())),
        Some((9.into(), 12.into()))
    );
}

#[test]
fn classify_triple_input_needs_no_index() {
    let triple = fixture("type1_triple")["triple"].to_string();
    let run = spincactus(&["classify", "--in", "-"], Some(&triple), &[]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = json(&run.stdout);
    assert_eq!(report["type"], "Type1");
    assert!(report.get("tableau_type").is_none());
}

#[test]
fn act_generator_on_type_two_tableau() {
    let run = spincactus(
        &["act", "--gen", "t11", "--in", &fixture_path("type2_tableau_before")],
        None,
        &[],
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(json(&run.stdout), fixture("type2_tableau_after"));
}

#[test]
fn act_generator_on_type_one_tableau() {
    let v = fixture("type1_tableau");
    let run = spincactus(
        &["act", "--gen", "t10", "--in", "-"],
        Some(&v["tableau"].to_string()),
        &[],
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(json(&run.stdout), v["tau"]);
}

#[test]
fn word_acts_rightmost_generator_first() {
    let start = std::fs::read_to_string(fixture_path("type2_tableau_before")).expect("fixture");
    let word = spincactus(&["act", "--word", "t1 s2,5 t4", "--in", "-"], Some(&start), &[]);
    assert_eq!(word.code, 0, "{}", word.stderr);
    let mut cur = start;
    for g in ["t4", "s2,5", "t1"] {
        let step = spincactus(&["act", "--gen", g, "--in", "-"], Some(&cur), &[]);
        assert_eq!(step.code, 0, "{}", step.stderr);
        cur = step.stdout;
    }
    assert_eq!(json(&word.stdout), json(&cur));
}

#[test]
fn act_keeps_the_input_encoding() {
    let seq = fixture("type2_sequence").to_string();
    let run = spincactus(&["act", "--gen", "t5", "--in", "-"], Some(&seq), &[]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = json(&run.stdout);
    assert!(out.get("mus").is_some());
    let back = spincactus(&["act", "--gen", "t5", "--in", "-"], Some(&run.stdout), &[]);
    assert_eq!(json(&back.stdout), json(&seq));
}

#[test]
fn verify_involution_n4_n5_passes() {
    let run = spincactus(&["verify", "--suite", "involution", "--n", "4", "--N", "5"], None, &[]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let records = lines(&run.stdout);
    assert!(!records.is_empty());
    for r in &records {
        assert_eq!(r["pass"], true);
        assert_eq!(r["property"], "involution");
        for key in ["shape", "index", "witness"] {
            assert!(r.get(key).is_some(), "record lacks {key}");
        }
    }
}

#[test]
fn every_suite_passes_on_a_small_instance() {
    for suite in ["involution", "oracle", "cactus-relations", "bijections", "normality"] {
        let run = spincactus(&["verify", "--suite", suite, "--n", "4", "--N", "3"], None, &[]);
        assert_eq!(run.code, 0, "{suite}: {}", run.stderr);
        assert!(lines(&run.stdout).iter().all(|r| r["pass"] == true), "{suite}");
    }
}

#[test]
fn limit_flag_overrides_environment() {
    let args = ["verify", "--suite", "oracle", "--n", "4", "--N", "3"];
    let blocked = spincactus(&args, None, &[("SPINCACTUS_LIMIT", "8")]);
    assert_eq!(blocked.code, 2);
    let mut with_flag = args.to_vec();
    with_flag.extend(["--limit", "12"]);
    let allowed = spincactus(&with_flag, None, &[("SPINCACTUS_LIMIT", "8")]);
    assert_eq!(allowed.code, 0, "{}", allowed.stderr);
    let too_small = spincactus(&["enumerate", "--n", "4", "--N", "3", "--limit", "11"], None, &[]);
    assert_eq!(too_small.code, 2);
}

#[test]
fn invalid_flags_exit_two() {
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["verify", "--suite", "nonsense", "--n", "4", "--N", "3"],
        &["verify", "--suite", "oracle", "--n", "four", "--N", "3"],
        &["act", "--in", "x.json"],
        &["act", "--gen", "t1", "--word", "t1", "--in", "x.json"],
        &["classify", "--i", "3"],
        &["enumerate", "--n", "4"],
        &["convert", "--from", "seq", "--to", "shape", "--in", "-"],
    ];
    for args in cases {
        let run = spincactus(args, Some("{\"n\":4,\"mus\":[[1,1,1,1]]}"), &[]);
        assert_eq!(run.code, 2, "{args:?}");
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn invalid_inputs_exit_two() {
    let cases = [
        (vec!["render", "--in", "-"], "not json"),
        (
            vec!["render", "--in", "-"],
            "{\"n\":4,\"doubled\":[1,1,1,1],\"extra\":0}",
        ),
        (
            vec!["act", "--gen", "t1", "--in", "-"],
            "{\"n\":4,\"mus\":[[-1,1,1,1],[1,1,1,1]]}",
        ),
        (
            vec!["act", "--gen", "t2", "--in", "-"],
            "{\"n\":4,\"mus\":[[1,1,1,1],[1,1,1,1]]}",
        ),
        (vec!["classify", "--i", "1", "--in", "/nonexistent/file.json"], ""),
    ];
    for (args, input) in cases {
        let run = spincactus(&args, Some(input), &[]);
        assert_eq!(run.code, 2, "{args:?} on {input}");
    }
}

#[test]
fn help_exits_zero() {
    let run = spincactus(&["--help"], None, &[]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    let runs: &[&[&str]] = &[
        &["enumerate", "--n", "4", "--N", "4", "--as", "sssyt"],
        &["verify", "--suite", "oracle", "--n", "4", "--N", "4"],
        &["verify", "--suite", "normality", "--n", "4", "--N", "2"],
        &["orbit", "--gens", "1,2,3", "--in", "-"],
    ];
    let start = "{\"n\":4,\"mus\":[[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[-1,1,1,-1]]}";
    for args in runs {
        let a = spincactus(args, Some(start), &[]);
        let b = spincactus(args, Some(start), &[]);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn enumerate_counts_agree_across_encodings_and_components() {
    let all = spincactus(&["enumerate", "--n", "4", "--N", "4"], None, &[]);
    assert_eq!(all.code, 0);
    let total = all.stdout.lines().count();
    for kind in ["tensor", "celltab", "sssyt"] {
        let run = spincactus(&["enumerate", "--n", "4", "--N", "4", "--as", kind], None, &[]);
        assert_eq!(run.stdout.lines().count(), total, "{kind}");
    }
    let v = fixture("short_diagram_n4");
    let shape = spincactus(&["enumerate", "--shape", "-"], Some(&v["shape"].to_string()), &[]);
    let lambda = fixture("cell_diagram_n4")["lambda"].to_string();
    let by_weight = spincactus(&["enumerate", "--lambda", "-", "--N", "7"], Some(&lambda), &[]);
    assert_eq!(shape.code, 0, "{}", shape.stderr);
    assert_eq!(shape.stdout, by_weight.stdout);
    assert!(shape.stdout.contains(&fixture("cell_tableau_n4")["seq"].to_string()));
}

#[test]
fn orbit_contains_the_start_and_is_closed() {
    let start = std::fs::read_to_string(fixture_path("type2_tableau_before")).expect("fixture");
    let run = spincactus(&["orbit", "--gens", "11", "--in", "-"], Some(&start), &[]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let orbit = lines(&run.stdout);
    assert_eq!(orbit.len(), 2);
    assert!(orbit.contains(&json(&start)));
    assert!(orbit.contains(&fixture("type2_tableau_after")));
}

#[test]
fn convert_round_trips_are_the_identity() {
    let all = spincactus(&["enumerate", "--n", "4", "--N", "4"], None, &[]);
    let kinds = ["seq", "tensor", "celltab", "sssyt"];
    for seq in all.stdout.lines().step_by(7) {
        for to in kinds {
            let there = spincactus(&["convert", "--from", "seq", "--to", to, "--in", "-"], Some(seq), &[]);
            assert_eq!(there.code, 0, "{to}: {}", there.stderr);
            for via in kinds {
                let hop = spincactus(
                    &["convert", "--from", to, "--to", via, "--in", "-"],
                    Some(&there.stdout),
                    &[],
                );
                let back = spincactus(
                    &["convert", "--from", via, "--to", to, "--in", "-"],
                    Some(&hop.stdout),
                    &[],
                );
                assert_eq!(json(&back.stdout), json(&there.stdout), "{seq}: {to} -> {via} -> {to}");
            }
        }
    }
}

#[test]
fn convert_labels_round_trip() {
    let v = fixture("cell_diagram_n4");
    let lambda = v["lambda"].to_string();
    let cells = spincactus(
        &["convert", "--from", "weight", "--to", "cells", "--N", "7", "--in", "-"],
        Some(&lambda),
        &[],
    );
    assert_eq!(json(&cells.stdout), v["cells"]);
    let shape = spincactus(
        &["convert", "--from", "cells", "--to", "shape", "--in", "-"],
        Some(&cells.stdout),
        &[],
    );
    assert_eq!(json(&shape.stdout), fixture("short_diagram_n4")["shape"]);
    let weight = spincactus(
        &["convert", "--from", "shape", "--to", "weight", "--in", "-"],
        Some(&shape.stdout),
        &[],
    );
    assert_eq!(json(&weight.stdout), v["lambda"]);
    let missing_n = spincactus(
        &["convert", "--from", "weight", "--to", "shape", "--in", "-"],
        Some(&lambda),
        &[],
    );
    assert_eq!(missing_n.code, 2);
}

#[test]
fn render_draws_tableaux_and_cell_diagrams() {
    let run = spincactus(&["render", "--in", &fixture_path("type2_tableau_before")], None, &[]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout.lines().count(), 6);
    assert!(run.stdout.lines().last().expect("rows").starts_with("12 12"));
    let cells = fixture("cell_diagram_n4")["cells"].to_string();
    let drawn = spincactus(&["render", "--in", "-"], Some(&cells), &[]);
    assert_eq!(drawn.code, 0, "{}", drawn.stderr);
    let first = drawn.stdout.lines().next().expect("rows");
    assert_eq!(first.matches("[]").count(), 7);
}
