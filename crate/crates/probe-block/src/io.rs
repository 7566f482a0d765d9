//! Edge-list and graph6 reading and writing.
//!
//! Edge list: a header `n m`, then `m` lines `u v` with `0 <= u, v < n` and
//! `u != v`. Blank lines and lines starting with `#` are ignored anywhere.
//! Repeated edges collapse to one.
//!
//! graph6: the standard one-line ASCII encoding. Only the one-byte size
//! prefix is supported, so `n <= 62`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use probe_block_core::graph::{Graph, GraphError};
use thiserror::Error;

/// Largest order representable with the one-byte graph6 size prefix.
pub const GRAPH6_MAX: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph6 supports at most {GRAPH6_MAX} vertices, got {0}")]
    Graph6Size(usize),
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

/// On-disk graph formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl Format {
    /// `.g6` means graph6; anything else is read as an edge list.
    pub fn sniff(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                line: lineno,
                msg: format!("`{tok}` is not a vertex id"),
            })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = match numbers(header, hline)?[..] {
        [n, m] => (n, m),
        _ => {
            return Err(ParseError::Syntax {
                line: hline,
                msg: "header must be `n m`".into(),
            })
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (u, v) = match numbers(line, lineno)?[..] {
            [u, v] => (u, v),
            _ => {
                return Err(ParseError::Syntax {
                    line: lineno,
                    msg: "edge line must be `u v`".into(),
                })
            }
        };
        // validate per line so errors carry the line number
        let source = if let Some(&vertex) = [u, v].iter().find(|&&w| w >= n) {
            Some(GraphError::VertexOutOfRange { vertex, n })
        } else if u == v {
            Some(GraphError::SelfLoop(u))
        } else {
            None
        };
        if let Some(source) = source {
            return Err(ParseError::Graph {
                line: lineno,
                source,
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses one graph6 line (surrounding whitespace allowed).
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    parse_graph6_at(line.trim(), 1)
}

fn parse_graph6_at(s: &str, lineno: usize) -> Result<Graph, ParseError> {
    let bad = |msg: &str| ParseError::Syntax {
        line: lineno,
        msg: msg.into(),
    };
    let bytes = s.as_bytes();
    let (&first, rest) = bytes
        .split_first()
        .ok_or_else(|| bad("empty graph6 string"))?;
    if first == 126 {
        return Err(bad(
            "multi-byte graph6 size prefix is not supported (n > 62)",
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(bad("invalid graph6 size byte"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(bad("graph6 length does not match the vertex count"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("invalid graph6 data byte"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 pairs are valid"))
}

pub fn to_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > GRAPH6_MAX {
        return Err(ParseError::Graph6Size(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// One graph per non-empty line; an optional `>>graph6<<` header is skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| parse_graph6_at(l.strip_prefix(">>graph6<<").unwrap_or(l), i))
        .collect()
}

/// Parses text in `format`; graph6 text may hold several graphs.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text).map(|g| vec![g]),
        Format::Graph6 => parse_graph6_corpus(text),
    }
}

/// Reads every graph in `path`, choosing the format by extension.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, ReadError> {
    let text = fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.into(),
        source,
    })?;
    parse_graphs(&text, Format::sniff(path)).map_err(|source| ReadError::Parse {
        path: path.into(),
        source,
    })
}

pub fn serialize(g: &Graph, format: Format) -> Result<String, ParseError> {
    match format {
        Format::EdgeList => Ok(write_edge_list(g)),
        Format::Graph6 => to_graph6(g).map(|s| s + "\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(
            parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap(),
            Graph::cycle(4)
        );
        assert_eq!(parse_edge_list("1 0").unwrap(), Graph::empty(1));
        assert_eq!(
            parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap(),
            Graph::complete(3)
        );
        assert_eq!(
            parse_edge_list("# c\n\n3 2\n0 1\n# mid\n1 0\n")
                .unwrap()
                .size(),
            1
        );
    }

    #[test]
    fn edge_list_errors_name_lines() {
        assert_eq!(parse_edge_list(""), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("3"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert_eq!(
            parse_edge_list("3 1\n\n0 3"),
            Err(ParseError::Graph {
                line: 3,
                source: GraphError::VertexOutOfRange { vertex: 3, n: 3 }
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n1 1"),
            Err(ParseError::Graph {
                line: 2,
                source: GraphError::SelfLoop(1)
            })
        );
        assert!(matches!(
            parse_edge_list("3 1\n0 x"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn graph6_known_strings() {
        // standard encodings from the format description
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::path(5)).unwrap(), "DhC");
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("~").is_err());
        assert_eq!(
            to_graph6(&Graph::empty(63)),
            Err(ParseError::Graph6Size(63))
        );
    }

    #[test]
    fn corpus_lines() {
        let gs = parse_graph6_corpus(">>graph6<<C~\n\nBw\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(4), Graph::complete(3)]);
        assert!(matches!(
            parse_graph6_corpus("C~\nC~~"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }
}
