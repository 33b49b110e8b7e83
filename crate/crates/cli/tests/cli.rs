use std::collections::BTreeSet;

use assert_cmd::Command;
use dot_parser::{ast, canonical};
use serde_json::Value;

fn cherednik() -> Command {
    Command::cargo_bin("cherednik").expect("binary is built")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cherednik()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).expect("UTF-8 output")
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid JSON")
}

const CHAMBER_ONE: [&str; 4] = ["--kappa", "-1/2", "--s", "0,-4"];

fn with_chamber_one<'a>(rest: &[&'a str]) -> Vec<&'a str> {
    let mut v: Vec<&str> = rest.to_vec();
    v.extend(CHAMBER_ONE);
    v
}

#[test]
fn table_reproduces_chamber_one() {
    let text = stdout_of(&with_chamber_one(&["table", "--n", "3"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda\tn\tp\tq\tdim\tfinite_dim"));
    let rows: BTreeSet<String> = lines.map(str::to_string).collect();
    let expected: BTreeSet<String> = [
        "-|3\t3\t1\t1\t2\tfalse",
        "-|2,1\t3\t3\t0\t3\tfalse",
        "-|1,1,1\t3\t3\t0\t3\tfalse",
        "1|2\t3\t0\t1\t1\tfalse",
        "1|1,1\t3\t3\t0\t3\tfalse",
        "2|1\t3\t1\t0\t1\tfalse",
        "1,1|1\t3\t2\t0\t2\tfalse",
        "3|-\t3\t0\t0\t0\ttrue",
        "2,1|-\t3\t2\t0\t2\tfalse",
        "1,1,1|-\t3\t0\t0\t0\ttrue",
    ]
    .into_iter()
    .map(str::to_string)
    .collect();
    assert_eq!(rows, expected);
}

#[test]
fn support_json_has_the_documented_fields() {
    let v = json_of(&with_chamber_one(&["support", "--lambda", "-|3", "--json"]));
    assert_eq!(v["lambda"], "-|3");
    assert_eq!(v["p"], 1);
    assert_eq!(v["q"], 1);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["finite_dim"], false);
    assert!(v["trace"].is_array());
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn table_json_and_finite_dims_agree() {
    let v = json_of(&with_chamber_one(&[
        "table", "--n", "3", "--format", "json",
    ]));
    let finite: BTreeSet<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["finite_dim"] == true)
        .map(|r| r["lambda"].as_str().unwrap().to_string())
        .collect();
    let listed: BTreeSet<String> = stdout_of(&with_chamber_one(&["finite-dims", "--n", "3"]))
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(finite, listed);
    assert_eq!(
        listed,
        ["3|-", "1,1,1|-"].iter().map(|s| s.to_string()).collect()
    );
}

#[test]
fn output_is_deterministic() {
    let args = with_chamber_one(&["table", "--n", "5", "--json"]);
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

fn unquote(id: String) -> String {
    id.strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .map_or(id.clone(), str::to_string)
}

/// Edges of the `f̃` graph parsed back from DOT: `(source, label) -> target`.
fn parse_edges(dot: &str) -> (BTreeSet<String>, BTreeSet<(String, String, String)>) {
    let graph = canonical::Graph::from(ast::Graph::try_from(dot).expect("DOT parses"));
    assert!(graph.is_digraph);
    let graph = graph.filter_map(|(k, v)| Some((unquote(k.into()), unquote(v.into()))));
    let nodes = graph.nodes.set.keys().map(|n| unquote(n.clone())).collect();
    let edges = graph
        .edges
        .set
        .into_iter()
        .map(|e| {
            let label = e
                .attr
                .elems
                .iter()
                .find(|(k, _)| k == "label")
                .map(|(_, v)| v.clone())
                .expect("edge label");
            (unquote(e.from), label, unquote(e.to))
        })
        .collect();
    (nodes, edges)
}

#[test]
fn dot_graph_matches_chamber_one_arrows() {
    let dot = stdout_of(&with_chamber_one(&["crystal", "graph", "--n", "3"]));
    let (nodes, edges) = parse_edges(&dot);
    assert_eq!(nodes.len(), 1 + 2 + 5 + 10);
    // the printed arrows with f1(-|2) corrected to zero
    let arrows = [
        ("-|-", "0", Some("-|1")),
        ("-|-", "1", None),
        ("-|1", "0", Some("1|1")),
        ("-|1", "1", Some("-|1,1")),
        ("1|-", "0", None),
        ("1|-", "1", Some("1,1|-")),
        ("-|1,1", "0", Some("-|1,1,1")),
        ("-|1,1", "1", Some("-|2,1")),
        ("-|2", "0", Some("-|3")),
        ("-|2", "1", None),
        ("1|1", "0", None),
        ("1|1", "1", Some("1|1,1")),
        ("1,1|-", "0", Some("1,1|1")),
        ("1,1|-", "1", Some("2,1|-")),
        ("2|-", "0", Some("2|1")),
        ("2|-", "1", None),
    ];
    let sources: BTreeSet<&str> = arrows.iter().map(|a| a.0).collect();
    let from_sources: BTreeSet<(String, String, String)> = edges
        .iter()
        .filter(|(s, _, _)| sources.contains(s.as_str()))
        .cloned()
        .collect();
    let expected: BTreeSet<(String, String, String)> = arrows
        .iter()
        .filter_map(|(s, z, t)| t.map(|t| (s.to_string(), z.to_string(), t.to_string())))
        .collect();
    assert_eq!(from_sources, expected);
}

#[test]
fn empty_graph_has_one_node() {
    let dot = stdout_of(&with_chamber_one(&["crystal", "graph", "--n", "0"]));
    let (nodes, edges) = parse_edges(&dot);
    assert_eq!(nodes.into_iter().collect::<Vec<_>>(), ["-|-"]);
    assert!(edges.is_empty());
}

#[test]
fn heisenberg_graph_parses() {
    let dot = stdout_of(&with_chamber_one(&[
        "crystal", "graph", "--n", "4", "--which", "heis",
    ]));
    let (_, edges) = parse_edges(&dot);
    assert!(edges.contains(&("-|-".into(), "0".into(), "-|2".into())));
    for (from, _, to) in &edges {
        let size = |s: &str| -> usize {
            s.split(['|', ','])
                .filter(|t| *t != "-")
                .map(|t| t.parse::<usize>().unwrap())
                .sum()
        };
        assert_eq!(size(to), size(from) + 2);
    }
}

#[test]
fn crystal_apply_and_depth() {
    let f = stdout_of(&with_chamber_one(&[
        "crystal", "apply", "--lambda", "-|1,1", "--op", "f", "--z", "1",
    ]));
    assert_eq!(f.trim(), "-|2,1");
    let e = stdout_of(&with_chamber_one(&[
        "crystal", "apply", "--lambda", "-|2,1", "--op", "e", "--z", "1",
    ]));
    assert_eq!(e.trim(), "-|1,1");
    let zero = stdout_of(&with_chamber_one(&[
        "crystal", "apply", "--lambda", "-|2", "--op", "f", "--z", "1",
    ]));
    assert_eq!(zero.trim(), "zero");
    let v = json_of(&with_chamber_one(&[
        "crystal", "depth", "--lambda", "-|3", "--json",
    ]));
    assert_eq!(v["depth"], 1);
}

#[test]
fn heis_commands() {
    assert_eq!(
        stdout_of(&with_chamber_one(&["heis", "q", "--lambda", "-|3"])).trim(),
        "1"
    );
    assert_eq!(
        stdout_of(&with_chamber_one(&["heis", "q", "--lambda", "1|1"])).trim(),
        "0"
    );
    let up = stdout_of(&with_chamber_one(&[
        "heis", "apply", "--lambda", "-|-", "--op", "f", "--i", "0",
    ]));
    let down = stdout_of(&with_chamber_one(&[
        "heis",
        "apply",
        "--lambda",
        up.trim(),
        "--op",
        "e",
        "--i",
        "0",
    ]));
    assert_eq!(down.trim(), "-|-");
}

#[test]
fn wall_crossing_commands() {
    let text = stdout_of(&["wc", "pair", "--m", "0", "--n", "2"]);
    for line in text.lines().skip(1) {
        let (lam, image) = line.split_once('\t').unwrap();
        let (a, b) = lam.split_once('|').unwrap();
        assert_eq!(image, format!("{b}|{a}"));
    }
    assert_eq!(
        stdout_of(&["wc", "typea", "--e", "2", "--lambda", "4"]).trim(),
        "2,2"
    );
    let v = json_of(&[
        "wc",
        "transport",
        "--kappa",
        "-1/2",
        "--s",
        "0,2",
        "--to-asymptotic",
        "2",
        "--lambda",
        "3|-",
        "--json",
    ]);
    assert_eq!(v["image"], "-|3");
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn walls_are_tabulated() {
    let text = stdout_of(&["walls", "--kappa", "-1/2", "--s", "0,2", "--n", "3"]);
    assert_eq!(
        text,
        "i\tj\tm\tposition\n1\t2\t-2\t-1\n1\t2\t0\t-3\n1\t2\t2\t-5\n"
    );
}

#[test]
fn kappa_zero_uses_rank_one_values() {
    let v = json_of(&[
        "support", "--kappa", "0", "--h", "0,0", "--lambda", "2|1", "--json",
    ]);
    assert_eq!((v["p"].as_u64(), v["q"].as_u64()), (Some(0), Some(3)));
    cherednik()
        .args(["support", "--kappa", "0", "--s", "0,0", "--lambda", "2|1"])
        .assert()
        .code(1);
}

#[test]
fn verify_suites() {
    cherednik()
        .args(["verify", "--suite", "wilcox", "--bounds", "e=2,n=8"])
        .assert()
        .code(0);
    cherednik()
        .args(["verify", "--suite", "example"])
        .assert()
        .code(0);
    cherednik()
        .args(["verify", "--suite", "axioms", "--bounds", "n=3"])
        .args(CHAMBER_ONE)
        .assert()
        .code(0);
    let v = json_of(&with_chamber_one(&[
        "verify", "--suite", "counting", "--bounds", "n=4", "--json",
    ]));
    assert_eq!(v["passed"], true);
}

#[test]
fn exit_codes() {
    cherednik()
        .args([
            "support", "--kappa", "-1/2", "--s", "0,-4", "--lambda", "3,4|-",
        ])
        .assert()
        .code(1);
    cherednik()
        .args([
            "support", "--kappa", "-1/2", "--s", "0,-4", "--lambda", "1|1|1",
        ])
        .assert()
        .code(1);
    cherednik().args(["nonsense"]).assert().code(1);
    cherednik()
        .args(["verify", "--suite", "wilcox", "--bounds", "x=1"])
        .assert()
        .code(1);
    // the Heisenberg crystal needs κ < 0
    cherednik()
        .args([
            "heis", "q", "--kappa", "1/2", "--s", "0,4", "--lambda", "-|3",
        ])
        .assert()
        .code(2);
}
