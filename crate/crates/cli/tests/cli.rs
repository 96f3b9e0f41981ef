use hamsq_cli::run;
use hamsq_core::{Graph, HamWitness};
use serde_json::Value;

fn hamsq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hamsq").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"))
}

#[test]
fn fk_check_on_triangle_infers_k() {
    let (code, out, err) = hamsq(&["check", "--property", "f4", "--graph", "Bw", "--tuple", "0,1,2"]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    assert_eq!(v["status"], "found");
    assert_eq!(v["witness"]["host"], "Bw");
    assert!(v["witness"]["satisfied"].is_object());
    let w: HamWitness = serde_json::from_value(v["witness"].clone()).unwrap();
    w.validate().unwrap();
    assert_eq!(w.sequence.first(), Some(&0));
    assert_eq!(w.sequence.last(), Some(&1));
}

#[test]
fn explicit_k_must_match_the_tuple() {
    let (code, _, err) = hamsq(&["check", "--property", "fk", "--k", "4", "--graph", "Bw", "--tuple", "0,1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("needs 4"));
}

#[test]
fn exhausted_check_exits_one() {
    let (code, out, _) = hamsq(&["check", "--property", "f5", "--builtin", "k2m:5", "--tuple", "0,1,2,3,4"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "exhausted");
}

#[test]
fn other_checks() {
    let (code, out, _) =
        hamsq(&["check", "--property", "strong-f3", "--i", "2", "--builtin", "cycle:5", "--tuple", "0,2,4"]);
    assert_eq!(code, 0);
    let w: HamWitness = serde_json::from_value(json(&out)["witness"].clone()).unwrap();
    w.validate().unwrap();
    let (code, _, _) = hamsq(&["check", "--property", "endpoint", "--builtin", "complete:4", "--tuple", "0,3"]);
    assert_eq!(code, 0);
    let (code, out, _) = hamsq(&["check", "--property", "fbar", "--builtin", "k2m:5"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["fbar"], true);
    let (code, out, _) = hamsq(&["check", "--property", "vw-cycle", "--builtin", "h:8,5", "--tuple", "8,0,4"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "exhausted");
}

#[test]
fn k2m_counterexample_is_confirmed() {
    let (code, out, err) = hamsq(&["counterexamples", "--suite", "k2m", "--k", "5", "--no-cache"]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    let record = &v["confirmed"][0];
    assert_eq!(
        Graph::from_graph6(record["graph6"].as_str().unwrap()).unwrap(),
        Graph::complete_bipartite(2, 3).unwrap()
    );
    assert_eq!(record["tuple"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(record["status"], "exhausted");
}

#[test]
fn single_h_example_and_budget() {
    let (code, out, _) = hamsq(&["counterexamples", "--suite", "h", "--n", "8", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["counterexample"], true);
    let (code, out, _) = hamsq(&["counterexamples", "--suite", "h", "--n", "9", "--k", "5", "--budget", "3"]);
    assert_eq!(code, 3);
    assert_eq!(json(&out)["status"], "undecided");
    let (code, _, _) = hamsq(&["counterexamples", "--suite", "h", "--n", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn f4_campaign_counts_every_ordered_tuple() {
    let (code, out, err) = hamsq(&["verify", "--property", "theorem4", "--max-n", "6", "--jobs", "4", "--no-cache"]);
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    // 3 + 10 + 56 graphs; n(n-1)(n-2)(n-3) tuples each
    assert_eq!(v["instances"], 69);
    assert_eq!(v["checks"], 3 * 24 + 10 * 120 + 56 * 360);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn campaign_report_ignores_thread_count() {
    let strip = |text: &str| {
        let mut v = json(text);
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let (_, one, _) = hamsq(&["verify", "--property", "theorem-2", "--max-n", "6", "--jobs", "1", "--no-cache"]);
    let (_, four, _) = hamsq(&["verify", "--property", "theorem-2", "--max-n", "6", "--jobs", "4", "--no-cache"]);
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn budget_turns_campaign_undecided() {
    let (code, out, _) = hamsq(&["verify", "--property", "f4", "--max-n", "5", "--budget", "1", "--no-cache"]);
    assert_eq!(code, 3);
    assert_eq!(json(&out)["status"], "undecided");
}

#[test]
fn cache_file_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.tsv");
    let report = dir.path().join("r.json");
    let args = [
        "verify",
        "--property",
        "theorem-3",
        "--max-n",
        "4",
        "--cache",
        cache.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
    ];
    let (code, out, _) = hamsq(&args);
    assert_eq!((code, out.as_str()), (0, ""));
    let first = json(&std::fs::read_to_string(&report).unwrap());
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert_eq!(lines as u64, first["checks"].as_u64().unwrap());
    assert!(std::fs::read_to_string(&cache).unwrap().lines().all(|l| l.split('\t').nth(1) == Some("theorem-3")));
    // a second run replays from the cache and appends nothing
    let (code, _, _) = hamsq(&args);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), lines);
}

#[test]
fn graph_verbs_and_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    std::fs::write(&file, "Bw\n\nCr\n").unwrap();
    let (code, out, _) = hamsq(&["square", "--file", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 2);
    for item in v.as_array().unwrap() {
        let g = Graph::from_graph6(item["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(item["square"], g.square().to_graph6());
    }
    let (code, out, _) = hamsq(&["blocks", "--builtin", "cycle:4"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["blocks"].as_array().unwrap().len(), 1);
    let (code, out, _) = hamsq(&["eps", "--builtin", "complete:4", "--root", "0"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["found"], true);
    let (code, out, _) = hamsq(&["eps", "--builtin", "k2m:5", "--trail", "2,3"]);
    assert_eq!(code, 0);
    assert!(json(&out)["decomposition"]["trail"].is_array());
    let (code, out, _) = hamsq(&["eps", "--builtin", "k2m:5", "--either", "0,1"]);
    assert_eq!(code, 0);
    assert!(json(&out)["decomposition"]["branch"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["square"][..],
        &["square", "--graph", "Bw", "--builtin", "cycle:4"],
        &["square", "--builtin", "wheel:5"],
        &["square", "--graph", "!!"],
        &["check", "--property", "nonsense", "--graph", "Bw", "--tuple", "0,1"],
        &["check", "--property", "f3", "--graph", "Bw", "--tuple", "0,1,7"],
        &["verify", "--property", "theorem-99"],
        &["counterexamples", "--suite", "petersen"],
        &["frobnicate"],
    ] {
        let (code, out, err) = hamsq(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}
