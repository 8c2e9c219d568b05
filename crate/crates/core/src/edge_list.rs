//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0 <= u, v < n)
//! ```
//!
//! Lines starting with `#` and blank lines are skipped anywhere; CRLF line
//! endings are accepted. A stream of several graphs separates records with a
//! line holding a single `%`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const RECORD_SEPARATOR: &str = "%";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = fields.next().ok_or_else(|| ParseError::Syntax {
            line: line_no,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| ParseError::Syntax {
            line: line_no,
            message: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(ParseError::Syntax {
            line: line_no,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

fn parse_lines<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, ParseError> {
    let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        pairs.push(parse_pair(line_no, line)?);
    }
    if pairs.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: pairs.len(),
        });
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

/// Parses a single graph.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    parse_lines(content_lines(text))
}

/// Parses a `%`-separated stream of graphs. Empty records are skipped.
pub fn parse_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut out = Vec::new();
    let mut record = Vec::new();
    for (no, line) in content_lines(text) {
        if line == RECORD_SEPARATOR {
            if !record.is_empty() {
                out.push(parse_lines(record.drain(..))?);
            }
        } else {
            record.push((no, line));
        }
    }
    if !record.is_empty() {
        out.push(parse_lines(record.into_iter())?);
    }
    Ok(out)
}

/// Writes `g` in the edge-list format, edges in sorted order, LF endings.
pub fn write(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_stream<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut s = String::new();
    for (i, g) in graphs.into_iter().enumerate() {
        if i > 0 {
            s.push_str(RECORD_SEPARATOR);
            s.push('\n');
        }
        s.push_str(&write(g));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn parses_comments_blanks_and_crlf() {
        let text = "# a triangle\r\n\r\n3 3\r\n0 1\r\n# mid comment\r\n1 2\r\n2 0\r\n";
        assert_eq!(parse(text).unwrap(), named::cycle(3));
        assert_eq!(parse("1 0\n").unwrap(), Graph::empty(1));
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse(""), Err(ParseError::MissingHeader));
        assert!(matches!(parse("3 2\n0 1\n"), Err(ParseError::EdgeCount { .. })));
        assert!(matches!(parse("3 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse("3 1\n0 1 2\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("3 1\n-1 1\n"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse("3 1\n1 1\n"), Err(ParseError::Graph(GraphError::LoopEdge(1))));
        assert!(matches!(
            parse("2 1\n0 2\n"),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn write_is_exact() {
        assert_eq!(write(&named::path(3)), "3 2\n0 1\n1 2\n");
        let s = write_stream([&named::cycle(3), &named::path(2)]);
        assert_eq!(s, "3 3\n0 1\n0 2\n1 2\n%\n2 1\n0 1\n");
        assert_eq!(parse_stream(&s).unwrap(), vec![named::cycle(3), named::path(2)]);
    }

    proptest::proptest! {
        #[test]
        fn round_trip(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let mut pairs: Vec<_> = raw.into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            let g = Graph::from_edge_list(n, pairs).unwrap();
            proptest::prop_assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }
}
