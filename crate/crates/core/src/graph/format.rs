//! Plain-text graph files.
//!
//! ```text
//! hexgraph <n> <m>
//! <u> <v>        (m lines, u <= v, 0-indexed)
//! ```
//!
//! Lines starting with `#` are comments. The file must end with a newline.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing header line `hexgraph <n> <m>`")]
    MissingHeader,
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("file must end with a newline")]
    NoTrailingNewline,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "hexgraph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(ParseError::NoTrailingNewline);
    }
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.starts_with('#') || raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "hexgraph" {
                    return Err(line_err(line, "expected `hexgraph <n> <m>`"));
                }
                let n = fields[1].parse().map_err(|_| line_err(line, "bad vertex count"))?;
                let m = fields[2].parse().map_err(|_| line_err(line, "bad edge count"))?;
                header = Some((n, m));
            }
            Some((n, _)) => {
                if fields.len() != 2 {
                    return Err(line_err(line, "expected `<u> <v>`"));
                }
                let u: usize = fields[0].parse().map_err(|_| line_err(line, "bad endpoint"))?;
                let v: usize = fields[1].parse().map_err(|_| line_err(line, "bad endpoint"))?;
                if u > v {
                    return Err(line_err(line, "endpoints must be in ascending order"));
                }
                if v >= n {
                    return Err(line_err(line, format!("endpoint {v} out of range for {n} vertices")));
                }
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::new(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn exact_text() {
        let text = write_graph(&cycle(3));
        assert_eq!(text, "hexgraph 3 3\n0 1\n1 2\n0 2\n");
        assert_eq!(parse_graph(&text).unwrap(), cycle(3));
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_graph("# triangle\nhexgraph 3 3\n# edges\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("hexgraph 3 2\n0 1\n2 1\n").unwrap_err();
        assert_eq!(err, line_err(3, "endpoints must be in ascending order"));
        let err = parse_graph("hexgraph 3 1\n0 7\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
        assert_eq!(parse_graph("hexgraph 2 1\n0 1").unwrap_err(), ParseError::NoTrailingNewline);
        assert_eq!(
            parse_graph("hexgraph 2 2\n0 1\n").unwrap_err(),
            ParseError::EdgeCount { expected: 2, found: 1 }
        );
        assert_eq!(parse_graph("").unwrap_err(), ParseError::MissingHeader);
    }
}
