use std::path::Path;

use bfg_cli::{parse_graph, run_cli, write_graph, CliOutput};
use bfg_core::gen::{fixture, fixtures};
use bfg_core::{build_graph, Bipolar, BipolarFuzzyGraph, Scalar, VertexId};
use proptest::prelude::*;

fn run(args: &[&str]) -> CliOutput {
    run_cli(args.iter().copied())
}

fn write_fixture(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{}.bfg", name.to_lowercase()));
    std::fs::write(&path, write_graph(&fixture(name).unwrap())).unwrap();
    path.to_str().unwrap().to_string()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.bfg"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn fixtures_match_golden_files() {
    for (name, g) in fixtures() {
        let expected = golden(&name.to_lowercase());
        assert_eq!(write_graph(&g), expected, "{name}");
        assert_eq!(parse_graph(&expected).unwrap(), g);
        let out = run(&["fixtures", "--name", name]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout_text(), expected);
    }
}

#[test]
fn metrics_on_f1() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = write_fixture(dir.path(), "F1");
    let out = run(&["metrics", &f1]);
    assert_eq!(out.code, 0, "{}", out.stderr_text());
    let text = out.stdout_text();
    assert!(text.contains("order (1.9,-1.4)"), "{text}");
    assert!(text.contains("size (1.4,-1)"), "{text}");
    assert!(text.contains("vertex v3 membership (0.8,-0.5) degree (1,-0.8) total_degree (1.8,-1.3)"));

    let json: serde_json::Value = serde_json::from_slice(&run(&["metrics", &f1, "--json"]).stdout).unwrap();
    assert_eq!(json["order"]["pos"], "1.9");
    assert_eq!(json["size"]["neg"], "-1");
    assert_eq!(json["extremes"]["max"]["pos"], "1");
    assert_eq!(json["vertices"][0]["degree"]["neg"], "-0.5");
}

#[test]
fn metrics_on_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.bfg");
    std::fs::write(&path, "bfg 1\n").unwrap();
    let out = run(&["metrics", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout_text(), "order (0,0)\nsize (0,0)\n");
}

#[test]
fn classify_on_f2_names_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = write_fixture(dir.path(), "F2");
    let text = run(&["classify", &f2]).stdout_text();
    assert!(text.contains("neighbourly_irregular=false"));
    assert!(text.contains("highly_irregular=false (pairwise: v2 has neighbours v3 and v4"), "{text}");

    let json: serde_json::Value = serde_json::from_slice(&run(&["classify", &f2, "--json"]).stdout).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec![
        "complete",
        "strong",
        "connected",
        "regularity",
        "irregular",
        "neighbourly_irregular",
        "totally_irregular",
        "neighbourly_totally_irregular",
        "highly_irregular",
    ];
    expected.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, expected);
}

#[test]
fn classify_reports_regular_degree_as_decimal_strings() {
    let dir = tempfile::tempdir().unwrap();
    let f4 = write_fixture(dir.path(), "F4");
    let json: serde_json::Value = serde_json::from_slice(&run(&["classify", &f4, "--json"]).stdout).unwrap();
    assert_eq!(json["regularity"]["regular"], serde_json::json!({"pos": "0.6", "neg": "-0.4"}));
    assert_eq!(json["regularity"]["totally_regular"], serde_json::json!({"pos": "1.2", "neg": "-1"}));
}

#[test]
fn verify_all_on_f3() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = write_fixture(dir.path(), "F3");
    let out = run(&["verify", "--theorem", "all", &f3]);
    assert_eq!(out.code, 0);
    let text = out.stdout_text();
    assert!(text.contains("thm4-converse FAILS"), "{text}");
    assert!(text.contains("witness v1,v4"), "{text}");
    assert_eq!(text.lines().filter(|l| !l.starts_with(' ')).count(), 9);

    let json: serde_json::Value =
        serde_json::from_slice(&run(&["verify", "--theorem", "thm4", &f3, "--json"]).stdout).unwrap();
    let verdicts = json["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    assert_eq!(verdicts[1]["theorem"], "thm4-converse");
    assert_eq!(verdicts[1]["outcome"], "fails");
    assert_eq!(verdicts[1]["witness"]["vertices"], serde_json::json!(["v1", "v4"]));
}

#[test]
fn complement_writes_canonical_output() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = write_fixture(dir.path(), "F1");
    let target = dir.path().join("c.bfg");
    let out = run(&["complement", &f1, "-o", target.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, run(&["complement", &f1]).stdout_text());
    let c = parse_graph(&written).unwrap();
    assert_eq!(write_graph(&c), written);
    assert_eq!(c, bfg_core::transform::complement(&fixture("F1").unwrap()));
}

#[test]
fn generate_is_deterministic_and_parseable() {
    let args = ["generate", "--kind", "random", "--n", "9", "--seed", "5", "--p", "0.4", "--grid", "0.1:-0.2,0.3"];
    let first = run(&args);
    assert_eq!(first.code, 0, "{}", first.stderr_text());
    assert_eq!(first, run(&args));
    assert_eq!(parse_graph(&first.stdout_text()).unwrap().vertex_count(), 9);

    let cycle = run(&["generate", "--kind", "even-cycle", "--n", "6", "--seed", "1", "--pattern", "alternating"]);
    let g = parse_graph(&cycle.stdout_text()).unwrap();
    assert_eq!(bfg_core::classify::regularity(&g).unwrap().regular.unwrap().to_string(), "(0.3,-0.3)");

    let cv = run(&["generate", "--kind", "constant-vertex", "--n", "5", "--seed", "2", "--vertex", "1:-1"]);
    let g = parse_graph(&cv.stdout_text()).unwrap();
    assert!(g.vertices().all(|(_, b)| b == Bipolar::FULL));
}

#[test]
fn search_reports_counterexamples() {
    let args = ["search", "--theorem", "thm4-converse", "--max-n", "5", "--seed", "7", "--budget", "2000", "--json"];
    let out = run(&args);
    assert_eq!(out.code, 0, "{}", out.stderr_text());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["failures"].as_u64().unwrap() > 0);
    for c in json["counterexamples"].as_array().unwrap() {
        let g = parse_graph(c["graph"].as_str().unwrap()).unwrap();
        assert_eq!(bfg_core::verify::check(bfg_core::verify::Theorem::DistinctDegreesConverse, &g).outcome.to_string(), "FAILS");
    }
    assert_eq!(out, run(&args));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.bfg");
    std::fs::write(&bad, "bfg 1\nvertex a 0.5 -0.4\nvertex b 0.4 -0.6\nedge a b 0.5 -0.3\n").unwrap();
    let out = run(&["metrics", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr_text().contains("line 4"), "{}", out.stderr_text());

    assert_eq!(run(&["metrics", "/nonexistent/x.bfg"]).code, 1);
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["verify", "--theorem", "thm9", bad.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["fixtures", "--name", "F6"]).code, 2);
    assert_eq!(run(&["generate", "--kind", "random", "--n", "3", "--seed", "1", "--p", "1.5"]).code, 2);
    assert_eq!(run(&["search", "--theorem", "thm2", "--max-n", "9", "--seed", "1", "--budget", "10"]).code, 1);
    // Infeasible explicit vertex value is a domain error.
    assert_eq!(
        run(&["generate", "--kind", "even-cycle", "--n", "4", "--seed", "1", "--grid", "0.5", "--vertex", "0.1:-0.1"]).code,
        1
    );
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout_text().contains("metrics"));
}

fn arb_value() -> impl Strategy<Value = Scalar> {
    prop_oneof![Just(0i64), Just(10_000), 0i64..=10_000].prop_map(Scalar::from_units)
}

fn arb_graph() -> impl Strategy<Value = BipolarFuzzyGraph> {
    prop::collection::btree_map("[A-Za-z0-9_]{1,6}", (arb_value(), arb_value()), 0..8)
        .prop_flat_map(|vs| {
            let ids: Vec<String> = vs.keys().cloned().collect();
            let n = ids.len();
            (Just(vs), prop::collection::vec((0..n.max(1), 0..n.max(1), 0i64..=10_000, 0i64..=10_000), 0..12))
        })
        .prop_map(|(vs, raw_edges)| {
            let values: Vec<(VertexId, Bipolar)> = vs
                .into_iter()
                .map(|(id, (p, n))| (VertexId::new(id).unwrap(), Bipolar::new(p, -n).unwrap()))
                .collect();
            let mut seen = std::collections::BTreeSet::new();
            let mut edges = Vec::new();
            for (i, j, fp, fn_) in raw_edges {
                let (i, j) = (i.min(j), i.max(j));
                if i == j || i >= values.len() || !seen.insert((i, j)) {
                    continue;
                }
                // Scale each component into the domination bound.
                let bound = values[i].1.intersection(values[j].1);
                let pos = Scalar::from_units(bound.pos().units() * fp / 10_000);
                let neg = Scalar::from_units(bound.neg().units() * fn_ / 10_000);
                edges.push((values[i].0.clone(), values[j].0.clone(), Bipolar::new(pos, neg).unwrap()));
            }
            build_graph(values, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_write_round_trip(g in arb_graph()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn parser_never_panics(text in "bfg 1\n(vertex|edge|#|[a-z0-9 .\\-]){0,40}(\n[a-z0-9 .\\-#]{0,30}){0,6}") {
        let _ = parse_graph(&text);
    }
}
