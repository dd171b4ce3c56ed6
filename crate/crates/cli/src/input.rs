//! Resolving the graph argument shared by most subcommands: a graph6
//! string, an edge-list file, or a named graph.

use std::path::{Path, PathBuf};

use clap::Args;

use chromatic_ramsey::constructions::named_graph;
use chromatic_ramsey::{graph6, Graph};

use crate::CliError;

#[derive(Args, Debug)]
pub struct GraphInput {
    /// graph6 string
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,

    /// edge-list file: optional leading line with the vertex count, then one
    /// `u v` pair per line; `#` starts a comment
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,

    /// named graph: moser_spindle, w5, petersen, k<n>, c<n>, path<n>
    #[arg(long, value_name = "ID")]
    pub named: Option<String>,
}

impl GraphInput {
    pub fn resolve(&self) -> Result<Graph, CliError> {
        let picked = [
            self.graph6.is_some(),
            self.edges.is_some(),
            self.named.is_some(),
        ]
        .iter()
        .filter(|&&p| p)
        .count();
        if picked != 1 {
            return Err(CliError::Usage(
                "provide exactly one of --graph6, --edges, --named".into(),
            ));
        }
        if let Some(s) = &self.graph6 {
            return graph6::decode_str(s)
                .map_err(|e| CliError::Usage(format!("bad --graph6 value: {e}")));
        }
        if let Some(path) = &self.edges {
            return parse_edge_file(path);
        }
        named_graph(self.named.as_ref().expect("checked above"))
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

pub fn parse_edge_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut declared_n: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |w: &str| {
            w.parse::<usize>()
                .map_err(|_| CliError::Data(format!("{}:{}: bad number `{w}`", path.display(), idx + 1)))
        };
        match fields.as_slice() {
            [n] if declared_n.is_none() && pairs.is_empty() => declared_n = Some(parse(n)?),
            [u, v] => pairs.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(CliError::Data(format!(
                    "{}:{}: expected `u v` (or a leading vertex count)",
                    path.display(),
                    idx + 1
                )))
            }
        }
    }
    let n = declared_n.unwrap_or_else(|| {
        pairs
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    Graph::from_edges(n, &pairs).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Parse a forbidden-graph argument: a named id first, then graph6.
pub fn graph_by_name_or_graph6(spec: &str) -> Result<Graph, CliError> {
    named_graph(spec)
        .or_else(|_| graph6::decode_str(spec))
        .map_err(|_| {
            CliError::Usage(format!(
                "`{spec}` is neither a named graph nor a graph6 string"
            ))
        })
}
