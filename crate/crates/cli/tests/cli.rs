//! The `tdy` binary and its job runner: exit codes, determinism, the JSON
//! class form and the corpus runner.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tdy_cli::{run_source, Basis, ClassDoc, Format, JobSpec};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_jobs() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| {
            let name = p.file_stem().unwrap().to_str().unwrap().to_string();
            (name, std::fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    out
}

fn tdy(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tdy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P1: &str = r#"{"command": "chi", "basis": "y", "rank": 1,
  "points": [{"weights": [[1]]}, {"weights": [[-1]]}]}"#;

#[test]
fn runs_a_job_from_stdin() {
    let o = tdy(&["chi"], Some(P1));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "chi: 1 - y"), "{}", stdout(&o));
    let o = tdy(&["chi", "-", "--basis", "delta"], Some(P1));
    assert!(stdout(&o).lines().any(|l| l == "chi: 2 + d"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    // schema: unknown field, malformed JSON, wrong version, wrong subcommand
    for (args, src) in [
        (
            &["chi"][..],
            r#"{"command": "chi", "rank": 1, "points": [], "bogus": 1}"#,
        ),
        (&["chi"][..], r#"{"command": "chi", "rank": 1,"#),
        (
            &["chi"][..],
            r#"{"version": 2, "command": "chi", "rank": 1, "points": []}"#,
        ),
        (&["toric"][..], P1),
        (&["chi"][..], r#"{"command": "chi", "rank": 1}"#),
    ] {
        let o = tdy(args, Some(src));
        assert_eq!(code(&o), 2, "{src}: {}", String::from_utf8_lossy(&o.stderr));
    }
    // math: a single fixed point of ℙ¹ does not sum to a polynomial
    let o = tdy(
        &["chi"],
        Some(r#"{"command": "chi", "rank": 1, "points": [{"weights": [[1]]}]}"#),
    );
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    // math: a zero tangent weight
    let o = tdy(
        &["chi"],
        Some(r#"{"command": "chi", "rank": 1, "points": [{"weights": [[0]]}]}"#),
    );
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn schema_errors_name_the_field() {
    let e = JobSpec::parse(r#"{"command": "chi", "rank": 1, "points": [], "bogus": 1}"#).unwrap_err();
    assert!(e.to_string().contains("bogus"), "{e}");
    let e = JobSpec::parse(r#"{"command": "chi", "basis": "x", "rank": 1, "points": []}"#).unwrap_err();
    assert!(e.to_string().contains("$.basis"), "{e}");
    let e = JobSpec::parse("{\n  \"command\": \"chi\",\n  oops\n}").unwrap_err();
    assert!(e.to_string().contains("line 3"), "{e}");
}

#[test]
fn output_is_deterministic() {
    for (name, src) in corpus_jobs() {
        for format in [Format::Text, Format::Json] {
            let a = run_source(&src, None, Some(format), None).unwrap();
            let b = run_source(&src, None, Some(format), None).unwrap();
            assert_eq!(a, b, "{name}");
        }
    }
}

#[test]
fn json_output_parses_and_keeps_order() {
    for (name, src) in corpus_jobs() {
        let text = run_source(&src, None, Some(Format::Json), None).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(keys[0], "command", "{name}");
        assert_eq!(keys[1], "basis", "{name}");
        // re-serializing the parsed document gives the same text
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{name}");
        // the text rendering lists the same keys in the same order
        let plain = run_source(&src, None, Some(Format::Text), None).unwrap();
        let text_keys: Vec<&str> = plain
            .lines()
            .filter_map(|l| l.split_once(": ").map(|(k, _)| k))
            .collect();
        let json_keys: Vec<&str> = keys.iter().map(|k| k.as_str()).filter(|k| *k != "basis").collect();
        assert_eq!(text_keys, json_keys, "{name}");
    }
}

#[test]
fn class_documents_round_trip() {
    let mut seen = 0;
    for (name, src) in corpus_jobs() {
        for basis in [Basis::Y, Basis::Delta] {
            let text = run_source(&src, Some(basis), Some(Format::Json), None).unwrap();
            let v: Value = serde_json::from_str(&text).unwrap();
            for (key, item) in v.as_object().unwrap() {
                if item.get("denominator").is_none() || item.get("rank").is_none() {
                    continue;
                }
                let doc: ClassDoc = serde_json::from_value(item.clone()).unwrap();
                let class = doc.to_class(basis).unwrap();
                assert_eq!(ClassDoc::new(&class, basis), doc, "{name} {key}");
                let other = match basis {
                    Basis::Y => Basis::Delta,
                    Basis::Delta => Basis::Y,
                };
                let there = ClassDoc::new(&class, other);
                assert_eq!(there.to_class(other).unwrap(), class, "{name} {key}");
                seen += 1;
            }
        }
    }
    assert!(seen > 20, "{seen}");
}

#[test]
fn truncation_adds_a_numerator_series() {
    let src = std::fs::read_to_string(corpus_dir().join("toric_a1.json")).unwrap();
    let plain = run_source(&src, None, None, None).unwrap();
    assert!(!plain.contains("numerator-series"));
    let with = run_source(&src, None, None, Some(2)).unwrap();
    let line = with.lines().find(|l| l.starts_with("numerator-series: ")).unwrap();
    assert!(line.ends_with("O(t^3)"), "{line}");
}

#[test]
fn corpus_passes() {
    let dir = corpus_dir();
    let o = tdy(&["corpus", "--corpus", dir.to_str().unwrap()], None);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    let jobs = corpus_jobs().len();
    assert!(out.ends_with(&format!("{jobs} passed, 0 failed\n")), "{out}");
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let o = tdy(&["corpus", "--corpus", dir.path().to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0 passed, 0 failed\n");
}

#[test]
fn corpus_reports_mismatches_and_missing_output() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p1.json"), P1).unwrap();
    std::fs::write(dir.path().join("p1.expected"), "command: chi\nchi: 1 + y\n").unwrap();
    std::fs::write(dir.path().join("lonely.json"), P1).unwrap();
    let o = tdy(&["corpus", "--corpus", dir.path().to_str().unwrap()], None);
    let out = stdout(&o);
    assert_eq!(code(&o), 1, "{out}");
    assert!(out.contains("FAIL  p1"), "{out}");
    assert!(out.contains("-chi: 1 + y") && out.contains("+chi: 1 - y"), "{out}");
    assert!(
        out.contains("FAIL  lonely") && out.contains("no expected output"),
        "{out}"
    );

    let o = tdy(&["corpus", "--corpus", dir.path().to_str().unwrap(), "--update"], None);
    assert_eq!(code(&o), 0);
    let o = tdy(&["corpus", "--corpus", dir.path().to_str().unwrap()], None);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn a_failing_job_fails_its_row() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.json"), r#"{"command": "chi", "rank": 1}"#).unwrap();
    std::fs::write(dir.path().join("bad.expected"), "").unwrap();
    let o = tdy(&["corpus", "--corpus", dir.path().to_str().unwrap()], None);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL  bad"));
}

/// Every corpus job uses only fields its schema branch declares, and the
/// schema lists exactly the commands the runner accepts.
#[test]
fn schema_matches_the_corpus() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(corpus_dir().join("../schema/job.schema.json")).unwrap())
            .unwrap();
    let branches = schema["oneOf"].as_array().unwrap();
    let commands: BTreeSet<&str> = schema["properties"]["command"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    let branch_commands: BTreeSet<&str> = branches
        .iter()
        .map(|b| b["properties"]["command"]["const"].as_str().unwrap())
        .collect();
    assert_eq!(commands, branch_commands);

    let mut used = BTreeSet::new();
    for (name, src) in corpus_jobs() {
        let job: Value = serde_json::from_str(&src).unwrap();
        let command = job["command"].as_str().unwrap();
        let branch = branches
            .iter()
            .find(|b| b["properties"]["command"]["const"] == command)
            .unwrap();
        for key in job.as_object().unwrap().keys() {
            assert!(
                branch["properties"].get(key).is_some(),
                "{name}: {key} not in the schema"
            );
        }
        for key in branch["required"].as_array().into_iter().flatten() {
            assert!(job.get(key.as_str().unwrap()).is_some(), "{name}: missing {key}");
        }
        JobSpec::parse(&src).unwrap();
        used.insert(command.to_string());
    }
    for c in &commands {
        assert!(used.contains(*c), "no corpus job for {c}");
    }
}
