//! The `sgraph` text format and DOT export.
//!
//! ```text
//! # comment
//! p sgraph 3
//! e 0 1 +
//! e 1 2 -
//! ```
//!
//! Edge lines are written sorted, so equal graphs serialise to equal bytes.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_sign(tok: &str, line: usize) -> Result<Sign> {
    match tok {
        "+" => Ok(Sign::Positive),
        "-" | "\u{2212}" => Ok(Sign::Negative),
        _ => Err(err(line, format!("bad sign {tok:?}, expected + or -"))),
    }
}

fn parse_num(tok: Option<&str>, what: &str, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} {tok:?}")))
}

pub fn parse(text: &str) -> Result<SignedGraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(err(line, "second header"));
                }
                if toks.next() != Some("sgraph") {
                    return Err(err(line, "header must read `p sgraph <n>`"));
                }
                n = Some(parse_num(toks.next(), "vertex count", line)?);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line, "edge before the header"))?;
                let u = parse_num(toks.next(), "endpoint", line)?;
                let v = parse_num(toks.next(), "endpoint", line)?;
                let sign = parse_sign(toks.next().ok_or_else(|| err(line, "missing sign"))?, line)?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(line, format!("vertex {x} out of range 0..{n}")));
                    }
                }
                if u == v && sign.is_negative() {
                    return Err(err(line, format!("negative loop at {u}")));
                }
                let e = Edge::new(u, v, sign);
                if edges.contains(&e) {
                    return Err(err(line, format!("duplicate edge {e}")));
                }
                edges.push(e);
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("trailing token {extra:?}")));
        }
    }
    let n = n.ok_or_else(|| err(last.max(1), "missing `p sgraph <n>` header"))?;
    SignedGraph::new(n, edges.into_iter().map(|e| (e.u, e.v, e.sign)))
}

pub fn write(g: &SignedGraph) -> String {
    let mut s = format!("p sgraph {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {} {}", e.u, e.v, e.sign);
    }
    s
}

/// Undirected DOT; negative edges are dashed.
pub fn to_dot(g: &SignedGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for e in g.edges() {
        let style = match e.sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        let _ = writeln!(s, "  {} -- {} [style={style}];", e.u, e.v);
    }
    s.push_str("}\n");
    s
}
