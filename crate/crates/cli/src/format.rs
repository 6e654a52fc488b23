//! The `.sg` text format.
//!
//! ```text
//! # comment
//! sg 3 3
//! v 0 a
//! e 0 1 +
//! e 1 2 -
//! e 0 2 +
//! ```
//!
//! Edge lines are numbered `1..m` in file order; vertex ids are `0..n`.

use std::collections::BTreeMap;
use std::fmt::Write;

use signed_graph::{Sign, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_sign(tok: &str) -> Option<Sign> {
    match tok {
        "+" => Some(Sign::Positive),
        "-" => Some(Sign::Negative),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut labels = BTreeMap::new();
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kind = toks.next().expect("non-empty");
        match (kind, header) {
            ("sg", None) => {
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(err(line, "trailing tokens after header"));
                }
                header = Some((n, m, line));
            }
            ("sg", Some(_)) => return Err(err(line, "duplicate header")),
            (_, None) => return Err(err(line, "expected header `sg <n> <m>`")),
            ("v", Some((n, _, _))) => {
                let id = number(toks.next(), line, "vertex id")?;
                if id >= n {
                    return Err(err(line, format!("vertex {id} out of range 0..{n}")));
                }
                let label = content.splitn(3, char::is_whitespace).nth(2).map(str::trim).unwrap_or("");
                if label.is_empty() {
                    return Err(err(line, "missing label"));
                }
                if labels.insert(id, label.to_string()).is_some() {
                    return Err(err(line, format!("vertex {id} labelled twice")));
                }
            }
            ("e", Some((n, m, _))) => {
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(line, format!("vertex {x} out of range 0..{n}")));
                    }
                }
                let s = toks.next().ok_or_else(|| err(line, "missing sign"))?;
                let sign = parse_sign(s).ok_or_else(|| err(line, format!("sign `{s}` is not `+` or `-`")))?;
                if toks.next().is_some() {
                    return Err(err(line, "trailing tokens after edge"));
                }
                if edges.len() == m {
                    return Err(err(line, format!("more than {m} edge lines")));
                }
                edges.push((u, v, sign));
            }
            (other, Some(_)) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, _) = header.ok_or_else(|| err(last.max(1), "missing header `sg <n> <m>`"))?;
    if edges.len() != m {
        return Err(err(last.max(1), format!("expected {m} edge lines, found {}", edges.len())));
    }
    let g = SignedGraph::new(n, edges).map_err(|e| err(last, e.to_string()))?;
    g.with_labels(labels).map_err(|e| err(last, e.to_string()))
}

/// Normalised text: header, labels by id, edges in order.
pub fn emit_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {} {}\n", g.n(), g.m());
    for (v, l) in g.labels() {
        writeln!(out, "v {v} {l}").expect("string write");
    }
    for e in g.edges() {
        let s = if e.sign.is_positive() { '+' } else { '-' };
        writeln!(out, "e {} {} {s}", e.u, e.v).expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "sg 3 3\nv 0 a b\ne 0 1 +\ne 1 2 -\ne 2 2 +\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.label(0), Some("a b"));
        assert_eq!(emit_graph(&g), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# triangle\n\nsg 2 1 # header\ne 0 1 -\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("e 0 1 +\n", 1),
            ("sg 2 1\ne 0 2 +\n", 2),
            ("sg 2 1\ne 0 1 *\n", 2),
            ("sg 2 2\ne 0 1 +\n", 2),
            ("sg 2 1\ne 0 1 +\ne 0 1 +\n", 3),
            ("sg 2 1\nsg 2 1\n", 2),
            ("sg 2 x\n", 1),
            ("sg 2 0\nq\n", 2),
            ("", 1),
        ];
        for (text, line) in cases {
            assert_eq!(parse_graph(text).unwrap_err().line, line, "{text:?}");
        }
    }
}
