use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use pseudoflower::io::*;
use pseudoflower::{enumerate_separations, Graph, SeparationSystem};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn expected(name: &str) -> String {
    std::fs::read_to_string(fixture("expected").join(name)).unwrap()
}

struct Run {
    code: i32,
    report: Value,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pseudoflower")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run { code: out.status.code().unwrap(), report, stderr: String::from_utf8(out.stderr).unwrap() }
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

fn check_schema(r: &Value, command: &str) {
    let obj = r.as_object().expect("report is an object");
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["command", "diagnostics", "payload", "status"]);
    assert_eq!(r["command"], command);
    assert!(["ok", "invalid", "error"].contains(&r["status"].as_str().unwrap()));
    assert!(r["diagnostics"].as_array().unwrap().iter().all(Value::is_string));
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_pseudoflower")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let help = String::from_utf8(out.stdout).unwrap();
    for sub in ["separations", "profiles", "validate", "locate", "maximalize", "gen", "render"] {
        assert!(help.contains(sub), "{sub}");
    }
    let flags = [
        ("separations", vec!["--graph", "--max-order", "--out"]),
        ("profiles", vec!["--order", "--tangles-only", "--max-pairs", "--out"]),
        ("locate", vec!["--flower", "--profiles"]),
        ("render", vec!["--dot"]),
    ];
    for (sub, fl) in flags {
        let out = Command::new(env!("CARGO_BIN_EXE_pseudoflower")).args([sub, "--help"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(fl.iter().all(|x| text.contains(x)), "{sub}: {text}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_pseudoflower")).arg("--version").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).code, 64);
    let r = run(&["separations", "--graph", &f("p3.txt")]);
    assert_eq!(r.code, 64);
    assert!(r.stderr.contains("--max-order"));
    check_schema(&r.report, "usage");
    assert_eq!(run(&["profiles", "--graph", &f("p3.txt"), "--order", "two"]).code, 64);
    assert_eq!(run(&[]).code, 64);
}

#[test]
fn separations_contract() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("seps.json");
    let r = run(&["separations", "--graph", &f("p3.txt"), "--max-order", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "separations");
    assert_eq!(r.report["payload"]["count"], 10);
    let text = read(&out);
    assert_eq!(text, expected("separations_p3_k1.json"));
    let seps = separations_from_json(&text).unwrap();
    assert_eq!(seps, enumerate_separations(&Graph::parse(&read(&fixture("p3.txt"))).unwrap(), 1));
    assert_eq!(separations_to_json(&seps), text);

    let inline = run(&["separations", "--graph", &f("p3.txt"), "--max-order", "1"]);
    assert_eq!(inline.report["payload"]["document"].as_array().unwrap().len(), 10);

    let r = run(&["separations", "--graph", &f("missing.txt"), "--max-order", "1"]);
    assert_eq!(r.code, 1);
    check_schema(&r.report, "separations");
    assert_eq!(r.report["status"], "error");
    let r = run(&["separations", "--graph", &f("malformed.txt"), "--max-order", "1"]);
    assert_eq!(r.code, 64);
    assert!(r.report["diagnostics"][0].as_str().unwrap().contains("line 2"));
}

#[test]
fn profiles_contract() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let r = run(&["profiles", "--graph", &f("k4.txt"), "--order", "2", "--tangles-only", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "profiles");
    assert!(r.report["payload"]["count"].as_u64().unwrap() >= 1);
    let text = read(&out);
    assert_eq!(text, expected("profiles_k4_k2_tangles.json"));
    let g = Graph::parse(&read(&fixture("k4.txt"))).unwrap();
    let system = Arc::new(SeparationSystem::new(&g, 2).unwrap());
    let ps = profiles_from_json(&text, &system).unwrap();
    assert!(ps.iter().all(|p| p.is_tangle()));
    assert_eq!(profiles_to_json(2, &ps), text);

    let r = run(&["profiles", "--graph", &f("empty.txt"), "--order", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["count"], 2);
    assert_eq!(read(&out), expected("profiles_empty_k1.json"));

    let r = run(&["profiles", "--graph", &f("star.txt"), "--order", "3"]);
    assert_eq!(r.code, 3);
    check_schema(&r.report, "profiles");
    assert!(r.report["diagnostics"][0].as_str().unwrap().contains("guard"));
    let r = run(&["profiles", "--graph", &f("star.txt"), "--order", "3", "--max-pairs", "1000"]);
    assert_eq!(r.code, 0);
}

#[test]
fn validate_contract() {
    let r = run(&["validate", "--graph", &f("c4.txt"), "--flower", &f("f_c4.json")]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "validate");
    let clauses = r.report["payload"]["clauses"].as_array().unwrap();
    assert!(clauses.iter().all(|c| c["passed"] == true));
    assert_eq!(r.report["payload"]["kind"], "pseudodaisy");

    let r = run(&["validate", "--graph", &f("star.txt"), "--flower", &f("f_star.json")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["kind"], "pseudoanemone");
    assert_eq!(r.report["payload"]["is_flower"], true);

    for (graph, flower) in [("c4_isolated.txt", "f_c4.json"), ("c4.txt", "f_c4_cut_size.json")] {
        let r = run(&["validate", "--graph", &f(graph), "--flower", &f(flower)]);
        assert_eq!(r.code, 2, "{flower}");
        assert_eq!(r.report["status"], "invalid");
        let diags: Vec<&str> = r.report["diagnostics"].as_array().unwrap().iter().map(|d| d.as_str().unwrap()).collect();
        assert!(diags.iter().any(|d| d.starts_with("clause 1 (cutpoint_size)")), "{diags:?}");
    }

    let r = run(&["validate", "--graph", &f("c4.txt"), "--flower", &f("f_c4_wrong_x.json")]);
    assert_eq!(r.code, 2);
    assert!(r.report["diagnostics"][0].as_str().unwrap().contains("stated x"));
}

#[test]
fn render_contract() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("star.dot");
    let r = run(&["render", "--graph", &f("star.txt"), "--flower", &f("f_star.json"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "render");
    let text = read(&dot);
    assert_eq!(text, expected("f_star.dot"));
    assert_eq!(text.matches("subgraph cluster_petal_").count(), 3);
    assert_eq!(text.matches("subgraph cluster_X").count(), 1);
    let bad = dir.path().join("no/such/dir/x.dot");
    let r = run(&["render", "--graph", &f("star.txt"), "--flower", &f("f_star.json"), "--dot", bad.to_str().unwrap()]);
    assert_eq!(r.code, 1);
}

#[test]
fn gen_contract() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let fl = dir.path().join("f.json");
    let r = run(&[
        "gen", "daisy", "--n", "1", "--a", "2", "--d", "3",
        "--graph-out", g.to_str().unwrap(), "--flower-out", fl.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "gen daisy");
    assert_eq!(r.report["payload"]["k"], 4);
    assert_eq!(read(&g), read(&fixture("daisy_1_2_3.txt")));
    assert_eq!(read(&fl), expected("daisy_1_2_3.json"));
    let v = run(&["validate", "--graph", g.to_str().unwrap(), "--flower", fl.to_str().unwrap()]);
    assert_eq!(v.code, 0);

    let r = run(&["gen", "daisy", "--n", "1", "--a", "2", "--d", "2"]);
    assert_eq!(r.code, 2);

    let an = dir.path().join("an.json");
    let r = run(&[
        "gen", "anemone", "--graph", &f("star.txt"), "--x", "9",
        "--groups", "0,1,2;3,4,5;6,7,8", "--out", an.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let ground = Graph::parse(&read(&fixture("star.txt"))).unwrap().vertices();
    let canonical = flower_to_json(&flower_from_json(&read(&fixture("f_star.json")), ground).unwrap());
    assert_eq!(read(&an), canonical);

    let r = run(&["gen", "grid", "--rows", "3", "--cols", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["edges"], 12);
    let r = run(&["gen", "clique", "--n", "4"]);
    assert_eq!(r.report["payload"]["edges"], 6);
    assert_eq!(run(&["gen", "clique", "--n", "200"]).code, 64);
}

#[test]
fn locate_and_maximalize_contract() {
    let dir = tempfile::tempdir().unwrap();
    let graph = f("daisy_1_0_4.txt");
    let profiles = dir.path().join("p.json");
    let r = run(&["profiles", "--graph", &graph, "--order", "3", "--max-pairs", "100000", "--out", profiles.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let p = profiles.to_str().unwrap();

    let coarse = f("daisy_1_0_4_coarse.json");
    let r = run(&["locate", "--graph", &graph, "--flower", &coarse, "--profiles", p]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "locate");
    let locs = r.report["payload"]["locations"].as_array().unwrap();
    assert_eq!(locs.len(), 4);

    let out = dir.path().join("max.json");
    let r = run(&["maximalize", "--graph", &graph, "--flower", &coarse, "--profiles", p, "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    check_schema(&r.report, "maximalize");
    let payload = &r.report["payload"];
    assert_eq!(payload["steps"].as_array().unwrap().len(), 1);
    assert!(payload["pairs_after"].as_u64() > payload["pairs_before"].as_u64());
    let anchored = &payload["steps"][0]["anchored"];
    for key in ["C", "D", "petal", "anchor"] {
        assert!(anchored.get(key).is_some(), "{key}");
    }
    assert_eq!(read(&out), expected("daisy_1_0_4_max.json"));

    let again = dir.path().join("again.json");
    let o = out.to_str().unwrap();
    let r = run(&["maximalize", "--graph", &graph, "--flower", o, "--profiles", p, "--out", again.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.report["payload"]["steps"].as_array().unwrap().is_empty());
    assert_eq!(read(&again), read(&out));
    let r = run(&["locate", "--graph", &graph, "--flower", o, "--profiles", p]);
    assert!(r.report["payload"]["locations"].as_array().unwrap().iter().all(|l| l["cutpoint"].is_string()));

    let wrong = dir.path().join("p2.json");
    run(&["profiles", "--graph", &graph, "--order", "2", "--max-pairs", "100000", "--out", wrong.to_str().unwrap()]);
    let r = run(&["locate", "--graph", &graph, "--flower", &coarse, "--profiles", wrong.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    let r = run(&["locate", "--graph", &graph, "--flower", &coarse, "--profiles", &f("malformed.txt")]);
    assert_eq!(r.code, 64);
}
