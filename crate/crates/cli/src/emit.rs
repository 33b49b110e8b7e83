//! TSV, JSON and DOT renderings.

use std::fmt::Write as _;

use serde::Serialize;

use cherednik_core::supports::SupportResult;

/// Bumped whenever a JSON field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

pub const TSV_HEADER: &str = "lambda\tn\tp\tq\tdim\tfinite_dim";

pub fn tsv_row(r: &SupportResult) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        r.lambda, r.n, r.p, r.q, r.dim_support, r.finite_dim
    )
}

pub fn tsv_table(rows: &[SupportResult]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&tsv_row(r));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct SupportJson {
    pub lambda: String,
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub finite_dim: bool,
    pub trace: Vec<String>,
}

impl From<&SupportResult> for SupportJson {
    fn from(r: &SupportResult) -> Self {
        SupportJson {
            lambda: r.lambda.to_string(),
            p: r.p,
            q: r.q,
            dim: r.dim_support,
            finite_dim: r.finite_dim,
            trace: r.trace.iter().map(ToString::to_string).collect(),
        }
    }
}

fn quoted(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A directed graph with labelled edges, written in node order.
#[derive(Debug, Default, Serialize)]
pub struct Graph {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String, String)>,
}

impl Graph {
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", quoted(name)).unwrap();
        for n in &self.nodes {
            writeln!(out, "  {};", quoted(n)).unwrap();
        }
        for (from, to, label) in &self.edges {
            writeln!(
                out,
                "  {} -> {} [label={}];",
                quoted(from),
                quoted(to),
                quoted(label)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
