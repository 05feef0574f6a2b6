use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use proptest::prelude::*;
use tempfile::TempDir;

use esakia_cli::document::{emit_poset, parse_poset};
use esakia_cli::dot::export_dot;
use esakia_cli::commands::write_quarantine;
use esakia_cli::{run_command, run_command_with_seed, Outcome};
use esakia_core::random::random_poset;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Outcome {
    run_command(std::iter::once("esakia").chain(args.iter().copied()))
}

fn run_path(cmd: &str, path: &Path) -> Outcome {
    run(&[cmd, path.to_str().unwrap()])
}

fn holds(out: &Outcome, name: &str) -> bool {
    out.report
        .as_ref()
        .and_then(|r| r.verdict(name))
        .unwrap_or_else(|| panic!("no verdict {name}: {}", out.stderr))
        .holds
}

const CHAIN2: &str = r#"{"elements":["r","a"],"covers":[["r","a"]]}"#;
const V: &str = r#"{"elements":["r","a","b"],"covers":[["r","a"],["r","b"]]}"#;

#[test]
fn topologize_two_chain() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chain2.json", CHAIN2);
    let out = run(&["topologize", "--kind", "tree", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(holds(&out, "discrete"));
    assert!(holds(&out, "esakia"));
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["command"], "topologize");
    // Top-level subbase of the 2-chain: ∅, {r}, {a}, {r, a}.
    assert_eq!(report["output"]["staged"]["levels"][1]["subbase"], serde_json::json!([[], [0], [1], [0, 1]]));
}

#[test]
fn check_v_poset() {
    let dir = TempDir::new().unwrap();
    let out = run_path("check", &write(&dir, "v.json", V));
    assert_eq!(out.code, 0);
    assert!(holds(&out, "tree"));
    assert!(!holds(&out, "root_system"));
    assert!(holds(&out, "enough_gaps"));
}

#[test]
fn subcover_rejects_non_cover() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "chain2.json", CHAIN2);
    let bad = write(&dir, "bad.json", r#"[["r"]]"#);
    let out = run(&["subcover", "--cover", bad.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    let v = out.report.as_ref().unwrap().verdict("subcover").unwrap();
    assert!(!v.holds);
    assert!(v.detail.as_str().unwrap().contains("NotACover"));

    let good = write(&dir, "good.json", r#"[["r"], ["a"], ["r", "a"]]"#);
    let out = run(&["subcover", "--cover", good.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    // The recursion takes the first member containing each point it visits.
    assert_eq!(out.report.unwrap().output["subcover"], serde_json::json!([["a"], ["r"]]));

    let not_member = write(&dir, "odd.json", r#"[["r"], ["a"], ["q"]]"#);
    let out = run(&["subcover", "--cover", not_member.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.code, 2);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["check"]).code, 2);
    assert_eq!(run_path("check", &dir.path().join("missing.json")).code, 2);
    let cycle = write(&dir, "cycle.json", r#"{"elements":["r","a"],"covers":[["a","r"],["r","a"]]}"#);
    let out = run_path("check", &cycle);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cycle"));
    let trans = write(
        &dir,
        "trans.json",
        r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"],["a","c"]]}"#,
    );
    assert_eq!(run_path("check", &trans).code, 2);
    assert_eq!(run(&["gallery", "nope", "3"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn topologize_picks_construction_from_shape() {
    let dir = TempDir::new().unwrap();
    let lambda = write(&dir, "lambda.json", r#"{"elements":["a","b","t"],"covers":[["a","t"],["b","t"]]}"#);
    let out = run_path("topologize", &lambda);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.report.unwrap().output["kind"], "root_system");
    // A kind hint that the poset contradicts is a parse-level error.
    let hinted = write(
        &dir,
        "hinted.json",
        r#"{"elements":["a","b","t"],"covers":[["a","t"],["b","t"]],"kind":"tree"}"#,
    );
    assert_eq!(run_path("topologize", &hinted).code, 2);
    // Asking for the wrong construction is a failed verdict.
    let out = run(&["topologize", "--kind", "tree", lambda.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    // Neither a tree nor a root system.
    let diamond = write(
        &dir,
        "diamond.json",
        r#"{"elements":["0","1","2","3"],"covers":[["0","1"],["0","2"],["1","3"],["2","3"]]}"#,
    );
    assert_eq!(run_path("topologize", &diamond).code, 2);
}

#[test]
fn dual_and_spectrum() {
    let dir = TempDir::new().unwrap();
    let out = run_path("dual", &write(&dir, "v.json", V));
    assert_eq!(out.code, 0, "{}", out.stderr);
    // Upsets of the V: ∅, {a}, {b}, {a,b}, {r,a,b}.
    assert_eq!(out.report.as_ref().unwrap().output["sets"].as_array().unwrap().len(), 5);
    assert!(holds(&out, "godel_iff_root_system"));

    let four = write(&dir, "b4.json", r#"{"join_irreducibles":{"elements":["p","q"],"covers":[]}}"#);
    let out = run_path("spectrum", &four);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let spec = &out.report.as_ref().unwrap().output["spectrum"];
    assert_eq!(spec["elements"].as_array().unwrap().len(), 2);
    assert_eq!(spec["covers"].as_array().unwrap().len(), 0);
    // Boolean algebras are prelinear.
    assert!(holds(&out, "godel"));

    let m3 = write(
        &dir,
        "m3.json",
        r#"{"meet":[[0,0,0,0,0],[0,1,0,0,1],[0,0,2,0,2],[0,0,0,3,3],[0,1,2,3,4]],
            "join":[[0,1,2,3,4],[1,1,4,4,4],[2,4,2,4,4],[3,4,4,3,4],[4,4,4,4,4]]}"#,
    );
    assert_eq!(run_path("spectrum", &m3).code, 2);
}

#[test]
fn verify_runs_full_suite_on_a_tree() {
    let dir = TempDir::new().unwrap();
    let tree = write(
        &dir,
        "t.json",
        r#"{"elements":["r","a","b","c","d"],"covers":[["r","a"],["r","b"],["a","c"],["a","d"]]}"#,
    );
    let out = run_path("verify", &tree);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for name in [
        "poset_double_dual",
        "heyting_double_dual",
        "staged_esakia",
        "lifted_opens",
        "climb",
        "main_lemma",
        "separation",
        "subcover",
        "downsets_open",
    ] {
        assert!(holds(&out, name), "{name}");
    }
}

#[test]
fn fuzz_is_reproducible() {
    let a = run(&["fuzz", "--seed", "7", "--count", "24", "--size", "6"]);
    let b = run(&["fuzz", "--seed", "7", "--count", "24", "--size", "6"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    let (ra, rb) = (a.report.unwrap(), b.report.unwrap());
    assert_eq!(ra.stable_json(), rb.stable_json());

    let c = run(&["fuzz", "--seed", "8", "--count", "24", "--size", "6"]).report.unwrap();
    assert_ne!(ra.output["results_digest"], c.output["results_digest"]);

    // The environment override wins over --seed.
    let d = run_command_with_seed(
        ["esakia", "fuzz", "--seed", "1", "--count", "24", "--size", "6"],
        Some("7".into()),
    );
    assert_eq!(d.report.unwrap().stable_json(), ra.stable_json());
    assert_eq!(run_command_with_seed(["esakia", "fuzz"], Some("x".into())).code, 2);
}

#[test]
fn fuzz_quarantine_directory() {
    let dir = TempDir::new().unwrap();
    let q = dir.path().join("quarantine");
    let out = run(&["fuzz", "--seed", "3", "--count", "8", "--size", "5", "--quarantine", q.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(q.is_dir());
    assert_eq!(fs::read_dir(&q).unwrap().count(), 0);

    // Quarantined documents are stored verbatim and replay through `verify`.
    let doc = emit_poset(&random_poset(5, 4, 0.5));
    let d = esakia_cli::report::digest(doc.as_bytes());
    write_quarantine(&q, [(d.as_str(), doc.as_str())]).unwrap();
    let stored = q.join(format!("{d}.json"));
    assert_eq!(fs::read_to_string(&stored).unwrap().trim_end(), doc);
    assert_eq!(run_path("verify", &stored).code, 0);
}

fn edges(dot: &str) -> BTreeSet<(String, String)> {
    dot.lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -> "))
        .map(|(a, b)| (a.trim_matches('"').to_string(), b.trim_matches('"').to_string()))
        .collect()
}

#[test]
fn dot_examples() {
    let one = export_dot(&parse_poset(r#"{"elements":["p"],"covers":[]}"#).unwrap(), None);
    assert_eq!(one.matches(';').count(), 3);
    assert!(edges(&one).is_empty());

    let c2 = export_dot(&parse_poset(CHAIN2).unwrap(), None);
    assert_eq!(edges(&c2), BTreeSet::from([("r".to_string(), "a".to_string())]));

    // The finite part of the fan: a top with x, y1, y2 below it and ∞ below x.
    let out = run(&["gallery", "fan-with-tail", "2", "--dot"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let expected: BTreeSet<(String, String)> = [("inf", "x"), ("x", "top"), ("y1", "top"), ("y2", "top")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(edges(&out.stdout), expected);
    assert!(out.stdout.contains("rankdir=BT"));
}

#[test]
fn export_dot_is_deterministic_and_annotated() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "v.json", V);
    let a = run(&["export-dot", "--topology", path.to_str().unwrap()]);
    let b = run(&["export-dot", "--topology", path.to_str().unwrap()]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    // The staged topology on the V is discrete.
    assert!(a.stdout.contains("\"r\" [tooltip=\"N = {r}\"]"));
    let plain = run_path("export-dot", &path);
    assert!(!plain.stdout.contains("tooltip"));
    let lines: Vec<&str> = plain.stdout.lines().filter(|l| !l.contains("->") && l.ends_with("\";")).collect();
    assert_eq!(lines, ["  \"a\";", "  \"b\";", "  \"r\";"]);
}

#[test]
fn gallery_reports_pass() {
    for (name, n) in [("chain-with-leaf", 3), ("fan-with-tail", 3), ("chain-with-leaf", 1)] {
        let out = run(&["gallery", name, &n.to_string()]);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        assert!(holds(&out, "esakia"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_emit_round_trip(seed in any::<u64>(), n in 1usize..=9, d in 0.0f64..1.0, labelled in any::<bool>()) {
        let p = random_poset(seed, n, d);
        let p = if labelled {
            p.with_labels((0..n).map(|i| format!("e{}", (i * 7) % 11)).collect()).unwrap()
        } else {
            p
        };
        let text = emit_poset(&p);
        prop_assert!(!text.contains('\n'));
        prop_assert_eq!(parse_poset(&text).unwrap(), p);
    }
}
