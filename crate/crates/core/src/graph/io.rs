use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Supported text formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `p edge <n> <m>` header followed by 1-indexed `e <u> <v>` lines.
    Dimacs,
    /// One 0-indexed `u v` pair per line.
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" => Ok(Format::Dimacs),
            "edgelist" => Ok(Format::Edgelist),
            other => Err(format!("unknown graph format `{other}` (expected dimacs or edgelist)")),
        }
    }
}

/// Parses a graph. `n_override` fixes the vertex count for edge lists; it is
/// ignored for DIMACS, whose header is authoritative.
pub fn parse_graph(text: &str, format: Format, n_override: Option<usize>) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Edgelist => parse_edgelist(text, n_override),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<usize>().map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(line, format!("expected `p edge`, found `p {}`", other.unwrap_or(""))))
                    }
                }
                n = Some(parse_num(toks.next(), line, "vertex count")?);
                parse_num(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let nv = n.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(Error::Range { line, vertex: x, n: nv });
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) => return Err(parse_err(line, format!("unexpected token `{tok}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing problem line"))?;
    Graph::new(n, edges)
}

fn parse_edgelist(text: &str, n_override: Option<usize>) -> Result<Graph> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let u = parse_num(toks.next(), line, "endpoint")?;
        let v = parse_num(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
        if u == v {
            return Err(parse_err(line, format!("loop at vertex {u}")));
        }
        if let Some(n) = n_override {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Range { line, vertex: x, n });
                }
            }
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = n_override.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::new(n, edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_path() {
        let g = parse_graph("c a path\np edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs, None).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn dimacs_isolated_vertex() {
        let g = parse_graph("p edge 1 0", Format::Dimacs, None).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn edgelist_collapses_duplicates() {
        let g = parse_graph("0 1\n1 0\n", Format::Edgelist, None).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        let g = parse_graph("0 1\n", Format::Edgelist, Some(4)).unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_graph("p edge 3 1\ne 1 x\n", Format::Dimacs, None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("p edge 3 1\ne 1 4\n", Format::Dimacs, None).unwrap_err();
        assert_eq!(err, Error::Range { line: 2, vertex: 4, n: 3 });
        let err = parse_graph("0 1\n2\n", Format::Edgelist, None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("0 5\n", Format::Edgelist, Some(3)).unwrap_err();
        assert!(matches!(err, Error::Range { line: 1, vertex: 5, .. }));
        assert!(parse_graph("e 1 2\n", Format::Dimacs, None).is_err());
    }

    #[test]
    fn writers_round_trip() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&write_dimacs(&g), Format::Dimacs, None).unwrap(), g);
        assert_eq!(parse_graph(&write_edgelist(&g), Format::Edgelist, None).unwrap(), g);
    }
}
