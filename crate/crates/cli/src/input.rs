use std::fs;
use std::path::Path;

use rlvd::{parse_graph, Format, Graph, InstanceInfo, VertexSet};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// A parsed instance together with its descriptor.
pub struct Loaded {
    pub graph: Graph,
    pub info: InstanceInfo,
}

/// DIMACS if the first meaningful line is a `c` or `p` line.
fn sniff(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("c") | Some("p") => Format::Dimacs,
        _ => Format::Edgelist,
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Dimacs => "dimacs",
        Format::Edgelist => "edgelist",
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load_graph(path: &Path, format: Option<Format>) -> Result<Loaded, CliError> {
    let bytes = fs::read(path).map_err(CliError::io(path))?;
    let text = String::from_utf8_lossy(&bytes);
    let format = format.unwrap_or_else(|| sniff(&text));
    let graph = parse_graph(&text, format, None).map_err(|source| CliError::Input { path: path.into(), source })?;
    let info = InstanceInfo {
        path: path.display().to_string(),
        format: format_name(format).into(),
        sha256: sha256_hex(&bytes),
        n: graph.n(),
        m: graph.m(),
    };
    Ok(Loaded { graph, info })
}

/// Whitespace-separated 0-indexed vertex ids; `#` starts a comment.
pub fn load_vertex_set(path: &Path) -> Result<VertexSet, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v = tok.parse().map_err(|_| CliError::Input {
                path: path.into(),
                source: rlvd::Error::Parse { line: idx + 1, msg: format!("invalid vertex `{tok}`") },
            })?;
            out.push(v);
        }
    }
    Ok(VertexSet::from_vec(out))
}
