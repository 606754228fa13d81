//! Plain-text formats.
//!
//! Hypergraphs: optional `#` comment lines, a header `n r m`, then `m` lines
//! of `r` strictly increasing vertex labels. Bipartite graphs: a header
//! `s t m`, then `m` lines `u v`. Blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bipartite::BipartiteGraph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 when the problem is the end of input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line")]
    MissingHeader,
    #[error("header must have 3 fields, found {0}")]
    BadHeader(usize),
    #[error("not a non-negative integer: {0:?}")]
    BadNumber(String),
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("invalid dimensions: {0}")]
    BadDimensions(String),
    #[error("expected {expected} vertices, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("vertex {vertex} outside 1..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("vertex {0} repeated")]
    DuplicateVertex(usize),
    #[error("vertex labels must be strictly increasing")]
    NotIncreasing,
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| ParseError {
                line,
                kind: ParseErrorKind::BadNumber(tok.to_string()),
            })
        })
        .collect()
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, [usize; 3]), ParseError> {
    let Some((no, l)) = lines.next() else {
        return err(0, ParseErrorKind::MissingHeader);
    };
    let f = numbers(no, l)?;
    if f.len() != 3 {
        return err(no, ParseErrorKind::BadHeader(f.len()));
    }
    Ok((no, [f[0], f[1], f[2]]))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, [n, r, m]) = header(&mut lines)?;
    if n > MAX_VERTICES {
        return err(hline, ParseErrorKind::TooManyVertices(n));
    }
    if r == 0 || r > n {
        return err(
            hline,
            ParseErrorKind::BadDimensions(format!("need 1 <= r <= n, got n={n}, r={r}")),
        );
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last = hline;
    for (no, l) in lines {
        last = no;
        let vs = numbers(no, l)?;
        if vs.len() != r {
            return err(
                no,
                ParseErrorKind::WrongArity {
                    expected: r,
                    found: vs.len(),
                },
            );
        }
        for (i, &v) in vs.iter().enumerate() {
            if v == 0 || v > n {
                return err(no, ParseErrorKind::VertexOutOfRange { vertex: v, max: n });
            }
            if i > 0 {
                if vs[..i].contains(&v) {
                    return err(no, ParseErrorKind::DuplicateVertex(v));
                }
                if v < vs[i - 1] {
                    return err(no, ParseErrorKind::NotIncreasing);
                }
            }
        }
        let e = VertexSet::from_vertices(vs.iter().map(|&v| v as u32));
        if !seen.insert(e) {
            return err(no, ParseErrorKind::DuplicateEdge);
        }
        edges.push(e);
    }
    if edges.len() != m {
        return err(
            last,
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        );
    }
    Ok(Hypergraph::new(n, r, edges).expect("validated above"))
}

/// Writes the header and the edges in the hypergraph's own (colex) order.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.n(), h.r(), h.len());
    for e in h.edges() {
        let mut first = true;
        for v in e.iter() {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, [s, t, m]) = header(&mut lines)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last = hline;
    for (no, l) in lines {
        last = no;
        let f = numbers(no, l)?;
        if f.len() != 2 {
            return err(
                no,
                ParseErrorKind::WrongArity {
                    expected: 2,
                    found: f.len(),
                },
            );
        }
        let (u, v) = (f[0], f[1]);
        if u == 0 || u > s {
            return err(no, ParseErrorKind::VertexOutOfRange { vertex: u, max: s });
        }
        if v == 0 || v > t {
            return err(no, ParseErrorKind::VertexOutOfRange { vertex: v, max: t });
        }
        if !seen.insert((u, v)) {
            return err(no, ParseErrorKind::DuplicateEdge);
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return err(
            last,
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        );
    }
    Ok(BipartiteGraph::new(s, t, edges).expect("validated above"))
}

pub fn serialize_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {} {}\n", g.s(), g.t(), g.len());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fano;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_hypergraph(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn single_edge() {
        let h = parse_hypergraph("3 2 1\n1 2\n").unwrap();
        assert_eq!((h.n(), h.r(), h.len()), (3, 2, 1));
    }

    #[test]
    fn diagnostics_carry_lines() {
        assert_eq!(kind("3 2 1\n2 2\n"), (2, ParseErrorKind::DuplicateVertex(2)));
        assert_eq!(kind("3 2 1\n2 1\n"), (2, ParseErrorKind::NotIncreasing));
        assert_eq!(kind("# c\n3 2 2\n1 2\n1 2\n"), (4, ParseErrorKind::DuplicateEdge));
        assert_eq!(
            kind("3 2 1\n1 4\n"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 4, max: 3 })
        );
        assert_eq!(
            kind("3 2 1\n1 2 3\n"),
            (2, ParseErrorKind::WrongArity { expected: 2, found: 3 })
        );
        assert_eq!(kind("3 2\n"), (1, ParseErrorKind::BadHeader(2)));
        assert_eq!(
            kind("3 2 2\n1 2\n").1,
            ParseErrorKind::EdgeCount { expected: 2, found: 1 }
        );
        assert_eq!(kind("3 x 2\n").1, ParseErrorKind::BadNumber("x".into()));
        assert_eq!(kind("# only a comment\n").1, ParseErrorKind::MissingHeader);
        assert_eq!(kind("200 2 0\n").1, ParseErrorKind::TooManyVertices(200));
    }

    #[test]
    fn fano_round_trip() {
        let text = serialize_hypergraph(&fano());
        assert!(text.starts_with("7 3 7\n"));
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(back, fano());
        assert_eq!(serialize_hypergraph(&back), text);
    }

    #[test]
    fn bipartite_round_trip() {
        let g = BipartiteGraph::double_star(2, 1);
        let text = serialize_bipartite(&g);
        assert_eq!(parse_bipartite(&text).unwrap(), g);
        assert_eq!(parse_bipartite("2 2 1\n3 1\n").unwrap_err().line, 2);
    }
}
