use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use alphacrit_core::{is_isomorphic, parse_graph6, to_graph6, Graph};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn alphacrit(cache: &Path, args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alphacrit"))
        .args(args)
        .env("ALPHACRIT_CACHE_DIR", cache)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    let Output {
        status,
        stdout,
        stderr,
    } = child.wait_with_output().unwrap();
    Run {
        code: status.code().unwrap(),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    alphacrit(dir.path(), args, None)
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/report.schema.json"
    ))
    .unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

/// Every stdout line as a schema-valid report.
fn reports(r: &Run) -> Vec<Value> {
    let v = schema();
    r.stdout
        .lines()
        .map(|l| {
            let doc: Value = serde_json::from_str(l).unwrap();
            let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{l}: {errors:?}");
            doc
        })
        .collect()
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--json", "--no-timing"];
    full.extend_from_slice(args);
    let r = run(&full);
    assert_eq!(r.code, 0, "{}", r.stderr);
    reports(&r)
}

fn g6(g: &Graph) -> String {
    to_graph6(g)
}

#[test]
fn alpha_of_small_critical_graphs() {
    let c5 = g6(&Graph::cycle(5));
    let out = json(&["alpha", &c5, "@", "A_"]);
    let pick = |i: usize| {
        (
            out[i]["result"]["alpha"].clone(),
            out[i]["result"]["defect"].clone(),
            out[i]["result"]["is_alpha_critical"].clone(),
        )
    };
    assert_eq!(pick(0), (2.into(), 1.into(), true.into()));
    assert_eq!(pick(1), (1.into(), (-1).into(), true.into()));
    assert_eq!(pick(2), (1.into(), 0.into(), true.into()));
    assert_eq!(out[0]["inputs"][0], c5.as_str());
    assert_eq!(out[0]["result"]["tau"], 3);
}

#[test]
fn graphs_are_read_from_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let r = alphacrit(
        dir.path(),
        &["--json", "--no-timing", "alpha"],
        Some("Dhc\n\n  C~  \n"),
    );
    assert_eq!(r.code, 0);
    let alphas: Vec<Value> = reports(&r)
        .iter()
        .map(|d| d["result"]["alpha"].clone())
        .collect();
    assert_eq!(alphas, vec![Value::from(2), Value::from(1)]);
}

#[test]
fn compose_examples() {
    let k3 = g6(&Graph::complete(3));
    let sub = &json(&["compose", "subdivide", &k3, "0,1"])[0]["result"];
    let g = parse_graph6(sub["graph6"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(5)));
    assert_eq!(
        (sub["vertices_added"].clone(), sub["edges_added"].clone()),
        (2.into(), 2.into())
    );

    let dup = &json(&["compose", "duplicate", &k3, "0"])[0]["result"];
    assert_eq!(dup["graph6"], g6(&Graph::complete(4)));

    let c5 = g6(&Graph::cycle(5));
    let join = &json(&["compose", "--alpha", "join", &c5, "2,3", &c5, "2,3"])[0]["result"];
    assert_eq!(join["n"], 10);
    assert_eq!(join["alpha_after"], 3);
    let j = g6(&parse_graph6(join["graph6"].as_str().unwrap()).unwrap());
    assert_eq!(json(&["alpha", &j])[0]["result"]["is_alpha_critical"], true);
    assert_eq!(join["labels"][5], "h:0");
}

#[test]
fn compose_split_and_edge_vertex() {
    let c5 = g6(&Graph::cycle(5));
    let split = &json(&["compose", "split", &c5, "0", "1"])[0]["result"];
    assert_eq!(
        (split["n"].clone(), split["edges"].clone()),
        (7.into(), 7.into())
    );
    let k3 = g6(&Graph::complete(3));
    let ev = &json(&["compose", "ev", &c5, "0,4", &k3, "0", "1"])[0]["result"];
    let w = parse_graph6(ev["graph6"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&w, &Graph::cycle(7)));
}

#[test]
fn maximal_examples() {
    let c5 = &json(&["maximal", &g6(&Graph::cycle(5))])[0]["result"];
    let entries = c5["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    assert!(entries
        .iter()
        .all(|e| e["class"].as_str().unwrap().starts_with("canonical:")));

    let k4 = &json(&["maximal", "C~"])[0]["result"];
    assert_eq!(
        k4["entries"],
        serde_json::json!([{ "vertices": [], "class": "canonical:0" }])
    );

    let c7 = &json(&["maximal", &g6(&Graph::cycle(7))])[0]["result"];
    assert!(c7["non_canonical"].as_u64().unwrap() > 0);
    assert!(c7["entries"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["class"] == "non-canonical"));
}

#[test]
fn verify_hajnal_lists_the_census() {
    let out = json(&["verify", "hajnal", "--n", "8"]);
    let r = &out[0]["result"];
    assert_eq!(r["passed"], true);
    let listing = r["listing"].as_array().unwrap();
    assert_eq!(listing.len(), 24);
    assert!(listing
        .iter()
        .all(|l| l["max_degree"].as_i64().unwrap() <= l["defect"].as_i64().unwrap() + 1));
}

#[test]
fn verify_defect_census_buckets() {
    let r = &json(&["verify", "defect-census", "--n", "8"])[0]["result"];
    assert_eq!(r["passed"], true);
    let defect = |d: i64| {
        r["listing"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|l| l["defect"] == d)
            .count()
    };
    assert_eq!((defect(1), defect(2)), (3, 5));
}

#[test]
fn verify_join_theorem_passes() {
    let r = &json(&[
        "verify",
        "join-theorem",
        "--instances",
        "200",
        "--seed",
        "7",
    ])[0]["result"];
    assert_eq!(r["passed"], true);
    assert_eq!(r["checks"][0]["instances"], 200);
    assert_eq!(r["checks"][1]["instances"], 150);
}

#[test]
fn failing_suite_exits_one_with_counterexamples() {
    let r = run(&[
        "--json",
        "--no-timing",
        "verify",
        "ev-maximal",
        "--instances",
        "10",
    ]);
    assert_eq!(r.code, 1);
    let doc = &reports(&r)[0]["result"];
    assert_eq!(doc["passed"], false);
    let check = &doc["checks"][0];
    assert!(check["failures"].as_u64().unwrap() > 0);
    for g in check["counterexamples"][0]["graphs"].as_array().unwrap() {
        parse_graph6(g.as_str().unwrap()).unwrap();
    }
}

#[test]
fn text_output_is_readable() {
    let r = run(&["verify", "hajnal", "--n", "5"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("hajnal (n=5, instances=0, seed=7): PASS"));
    let r = run(&["alpha", "Dhc"]);
    assert!(r.stdout.contains("alpha=2"));
}

#[test]
fn enumerate_examples() {
    let two = run(&[
        "enumerate",
        "--n",
        "2",
        "--connected",
        "--filter",
        "alpha-critical",
    ]);
    assert_eq!(two.stdout, "A_\n");

    let up_to_five = run(&[
        "enumerate",
        "--up-to",
        "5",
        "--connected",
        "--filter",
        "alpha-critical",
    ]);
    let gs: Vec<Graph> = up_to_five
        .stdout
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .collect();
    let expected = [
        Graph::empty(0),
        Graph::empty(1),
        Graph::complete(2),
        Graph::cycle(3),
        Graph::complete(4),
        Graph::cycle(5),
        Graph::complete(5),
    ];
    assert_eq!(gs.len(), expected.len());
    assert!(expected
        .iter()
        .all(|e| gs.iter().any(|g| is_isomorphic(g, e))));

    let four = run(&[
        "enumerate",
        "--n",
        "4",
        "--filter",
        "alpha-critical",
        "--connected",
        "--format",
        "json",
        "--no-timing",
    ]);
    let docs = reports(&four);
    let defect_two: Vec<&Value> = docs.iter().filter(|d| d["result"]["defect"] == 2).collect();
    assert_eq!(defect_two.len(), 1);
    assert_eq!(defect_two[0]["result"]["graph6"], "C~");

    let all = run(&["enumerate", "--n", "5"]);
    assert_eq!(all.stdout.lines().count(), 34);
    let critical = run(&["enumerate", "--n", "4", "--filter", "alpha-critical"]);
    // K4, K3 + K1, K2 + K2, K2 + 2K1 and 4K1.
    assert_eq!(critical.stdout.lines().count(), 5);
}

#[test]
fn census_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = alphacrit(dir.path(), &["enumerate", "--n", "6", "--connected"], None);
    let files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].to_str().unwrap().ends_with(".g6.gz"));
    let second = alphacrit(dir.path(), &["enumerate", "--n", "6", "--connected"], None);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout.lines().count(), 112);

    std::fs::write(&files[0], b"not gzip").unwrap();
    let third = alphacrit(dir.path(), &["enumerate", "--n", "6", "--connected"], None);
    assert_eq!(third.code, 0);
    assert_eq!(third.stdout, first.stdout);

    let other = tempfile::tempdir().unwrap();
    alphacrit(
        other.path(),
        &["enumerate", "--n", "6", "--connected", "--no-cache"],
        None,
    );
    assert_eq!(std::fs::read_dir(other.path()).unwrap().count(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json",
        "--no-timing",
        "verify",
        "basic-theorem",
        "--instances",
        "30",
        "--seed",
        "11",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.code, b.code);
    let threads = run(&[
        "--json",
        "--no-timing",
        "--threads",
        "1",
        "verify",
        "basic-theorem",
        "--instances",
        "30",
        "--seed",
        "11",
    ]);
    assert_eq!(threads.stdout, a.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["alpha", "D~"]).code, 2);
    assert_eq!(run(&["alpha", "~?G@"]).code, 3);
    assert_eq!(run(&["compose", "join", "Bw", "0,1,2", "Bw", "0"]).code, 4);
    assert_eq!(run(&["compose", "subdivide", "Bw", "0,7"]).code, 4);
    assert_eq!(run(&["compose", "split", "Dhc", "0", "2"]).code, 4);
    assert_eq!(run(&["compose", "duplicate", "Bw", "x"]).code, 4);
    assert_eq!(run(&["verify", "no-such-suite"]).code, 4);
    assert_eq!(run(&["enumerate", "--n", "9"]).code, 5);
    assert_eq!(run(&["maximal", &g6(&Graph::cycle(15))]).code, 5);
    assert_eq!(run(&["verify", "hajnal", "--n", "12"]).code, 5);
    assert_eq!(run(&["--help"]).code, 0);
    let bad = run(&["alpha", "D~"]);
    assert!(bad.stderr.contains("malformed graph6"));
}
