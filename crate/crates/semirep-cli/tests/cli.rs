//! End-to-end runs of the binary: file formats, exit codes, report schema
//! conformance, and witness replay through the library.

use semirep::graph::{Graph, Orientation, ShortcutWitness};
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semirep"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("semirep-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_is_deterministic_and_reparseable() {
    let a = run(&["gen", "--family", "simplified_m", "-n", "3", "-k", "2", "-m", "1"]);
    assert!(a.status.success());
    let b = run(&["gen", "--family", "simplified_m", "-n", "3", "-k", "2", "-m", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.trim_end().lines().next(), Some("graph 2 1"));
    assert!(text.contains("l 0 010"));
    assert!(text.contains("e 0 1"));

    // the sp(3) family: 6 vertices, 12 edges
    let c = run(&["gen", "--family", "simplified_overlap", "-n", "3"]);
    let text = String::from_utf8(c.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("graph 6 12"));

    let d = run(&["gen", "--family", "wheel", "-n", "5"]);
    let text = String::from_utf8(d.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("graph 6 10"));
}

#[test]
fn gen_writes_digraph_families_with_arcs() {
    let out = run(&["gen", "--family", "debruijn", "-n", "3", "-k", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("digraph 8 16"));
    assert!(text.contains("a 0 0")); // loop at 000
}

#[test]
fn decide_certificate_round_trips_through_check_orientation() {
    let graph_path = tmp("k4.el");
    let cert_path = tmp("k4.or");
    let out = run(&["gen", "--family", "complete", "-k", "4", "--out"]);
    assert!(!out.status.success()); // --out needs a value
    let out = run(&[
        "gen",
        "--family",
        "complete",
        "-k",
        "4",
        "--out",
        graph_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "decide",
        graph_path.to_str().unwrap(),
        "--cert-out",
        cert_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "YES");

    let out = run(&[
        "check-orientation",
        graph_path.to_str().unwrap(),
        cert_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["verdict"], "SEMI_TRANSITIVE");
}

#[test]
fn exit_codes_follow_the_contract() {
    let w5 = tmp("w5.el");
    run(&["gen", "--family", "wheel", "-n", "5", "--out", w5.to_str().unwrap()]);

    // 0: a completed decision, regardless of the answer
    let out = run(&["decide", w5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "NO");

    // 1: a mathematical check that fails
    let path = tmp("p4c.el");
    std::fs::write(&path, "graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n").unwrap();
    let orient = tmp("p4c.or");
    std::fs::write(&orient, "a 0 1\na 1 2\na 2 3\na 0 3\n").unwrap();
    let out = run(&[
        "check-orientation",
        path.to_str().unwrap(),
        orient.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "NOT_SEMI_TRANSITIVE");

    // 2: parse errors carry the line number on stderr
    let bad = tmp("bad.el");
    std::fs::write(&bad, "graph 2 1\ne 0 7\n").unwrap();
    let out = run(&["decide", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // 2: unknown family
    let out = run(&["gen", "--family", "moebius", "-n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // 3: exhausted search budget reports INCONCLUSIVE
    let s124 = tmp("s124.el");
    run(&[
        "gen", "--family", "simplified_m", "-n", "2", "-k", "4", "-m", "1", "--out",
        s124.to_str().unwrap(),
    ]);
    let out = run(&["decide", s124.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["verdict"], "INCONCLUSIVE");

    // 3: vertex budget
    let out = run(&["gen", "--family", "simplified", "-n", "10", "-k", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_env_variable_applies() {
    let s124 = tmp("s124-env.el");
    run(&[
        "gen", "--family", "simplified_m", "-n", "2", "-k", "4", "-m", "1", "--out",
        s124.to_str().unwrap(),
    ]);
    let out = bin()
        .args(["decide", s124.to_str().unwrap()])
        .env("SEMIREP_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["verdict"], "INCONCLUSIVE");
}

#[test]
fn embed_reports_cover_the_pipeline_steps() {
    let out = run(&["embed", "--family", "simplified_m", "-n", "4", "-k", "5", "-m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "SEMI_TRANSITIVE");
    assert_eq!(doc["construction"], "n4-embedding");
    assert_eq!(doc["homomorphism_verified"], true);
    assert_eq!(doc["lift_acyclic"], true);
    assert_eq!(doc["template_shortcutting_paths"].as_array().unwrap().len(), 2);
    assert_eq!(doc["counters"]["vertices"], 320);

    let out = run(&["embed", "--family", "simplified_overlap", "-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "SEMI_TRANSITIVE");

    let out = run(&["embed", "--family", "simplified_m", "-n", "2", "-k", "9", "-m", "3"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["embed", "--family", "wheel", "-n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["verdict"], "NOT_COVERED");
}

#[test]
fn bipartite_command_on_both_outcomes() {
    let out = run(&["bipartite", "--family", "increasing", "-n", "2", "-k", "8", "-m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "BIPARTITE");
    let parts = doc["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);

    let out = run(&["bipartite", "--family", "increasing", "-n", "3", "-k", "7", "-m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "ODD_CYCLE");
    let cycle = doc["witnesses"][0]["cycle"].as_array().unwrap();
    assert_eq!(cycle.len() % 2, 1);

    // replay the witness: consecutive labels (cyclically) are edges
    let g = semirep::families::increasing_subgraph(3, 7, 1).unwrap();
    let verts: Vec<usize> = cycle
        .iter()
        .map(|l| g.vertex_by_label(l.as_str().unwrap()).unwrap())
        .collect();
    for i in 0..verts.len() {
        assert!(g.has_edge(verts[i], verts[(i + 1) % verts.len()]));
    }

    let out = run(&["bipartite", "--family", "wheel", "-n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn word_check_modes() {
    let k3 = tmp("k3.el");
    run(&["gen", "--family", "complete", "-k", "3", "--out", k3.to_str().unwrap()]);

    let out = run(&["word-check", k3.to_str().unwrap(), "--word", "0,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "REPRESENTS");

    let out = run(&["word-check", k3.to_str().unwrap(), "--word", "0,0,1,1,2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "DOES_NOT_REPRESENT");

    let c4 = tmp("c4.el");
    std::fs::write(&c4, "graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n").unwrap();
    let out = run(&["word-check", c4.to_str().unwrap(), "--search", "--kmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "FOUND");
    assert_eq!(doc["counters"]["uniformity"], 2);
}

/// A found shortcut witness must replay: its path arcs exist in the checked
/// orientation, the closing arc exists, and the missing edge is really
/// missing.
#[test]
fn shortcut_witnesses_replay_through_the_library() {
    let path = tmp("replay.el");
    std::fs::write(&path, "graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n").unwrap();
    let orient = tmp("replay.or");
    std::fs::write(&orient, "a 0 1\na 1 2\na 2 3\na 0 3\n").unwrap();
    let out = run(&[
        "check-orientation",
        path.to_str().unwrap(),
        orient.to_str().unwrap(),
    ]);
    let doc = stdout_json(&out);
    let w = &doc["witnesses"][0];
    assert_eq!(w["type"], "shortcut");

    let g = Graph::new(4, [(0, 1), (0, 3), (1, 2), (2, 3)]).unwrap();
    let o = Orientation::from_arcs(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let parse = |v: &Value| -> Vec<usize> {
        v.as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().parse().unwrap())
            .collect()
    };
    let witness = ShortcutWitness {
        path: parse(&w["path"]),
        missing_edge: {
            let me = parse(&w["missing_edge"]);
            (me[0], me[1])
        },
    };
    assert!(witness.validate(&o));
}

#[test]
fn reports_validate_against_the_published_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let w5 = tmp("schema-w5.el");
    run(&["gen", "--family", "wheel", "-n", "5", "--out", w5.to_str().unwrap()]);
    let c4 = tmp("schema-c4.el");
    std::fs::write(&c4, "graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n").unwrap();

    let reports = [
        run(&["decide", w5.to_str().unwrap(), "--oracle"]),
        run(&["embed", "--family", "simplified_m", "-n", "3", "-k", "4", "-m", "1"]),
        run(&["bipartite", "--family", "increasing", "-n", "2", "-k", "5", "-m", "1"]),
        run(&["word-check", c4.to_str().unwrap(), "--search", "--kmax", "2"]),
    ];
    for out in &reports {
        validate(&schema, &stdout_json(out));
    }
}

/// Checks a document against the subset of JSON Schema the published schema
/// uses: type, required, properties, items, enum, const,
/// additionalProperties.
fn validate(schema: &Value, doc: &Value) {
    validate_at(schema, doc, "$");
}

fn validate_at(schema: &Value, doc: &Value, path: &str) {
    if let Some(ty) = schema["type"].as_str() {
        let ok = match ty {
            "object" => doc.is_object(),
            "array" => doc.is_array(),
            "string" => doc.is_string(),
            "integer" => doc.is_i64() || doc.is_u64(),
            "number" => doc.is_number(),
            "boolean" => doc.is_boolean(),
            _ => panic!("unhandled schema type {ty}"),
        };
        assert!(ok, "{path}: expected {ty}, got {doc}");
    }
    if let Some(expected) = schema.get("const") {
        assert_eq!(doc, expected, "{path}: const mismatch");
    }
    if let Some(options) = schema["enum"].as_array() {
        assert!(options.contains(doc), "{path}: {doc} not in enum");
    }
    if let Some(required) = schema["required"].as_array() {
        for key in required {
            let key = key.as_str().unwrap();
            assert!(
                doc.get(key).is_some(),
                "{path}: missing required field {key}"
            );
        }
    }
    if let Some(props) = schema["properties"].as_object() {
        for (key, sub) in props {
            if let Some(value) = doc.get(key) {
                validate_at(sub, value, &format!("{path}.{key}"));
            }
        }
    }
    if let Some(extra) = schema.get("additionalProperties") {
        if extra.is_object() {
            if let Some(obj) = doc.as_object() {
                for (key, value) in obj {
                    validate_at(extra, value, &format!("{path}.{key}"));
                }
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = doc.as_array() {
            for (i, value) in arr.iter().enumerate() {
                validate_at(items, value, &format!("{path}[{i}]"));
            }
        }
    }
}

#[test]
fn verify_paper_quick_profile_passes() {
    let out = run(&["verify-paper", "--profile", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "PASS");
    assert_eq!(doc["counters"]["criteria"], 11);
    assert_eq!(doc["counters"]["failed"], 0);
    // one stderr line per criterion
    let lines = String::from_utf8_lossy(&out.stderr);
    assert_eq!(lines.lines().filter(|l| l.contains("criterion")).count(), 11);

    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    validate(&schema, &doc);
}
