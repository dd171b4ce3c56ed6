//! Finite two-color extremal numbers: the most edges an n-vertex graph can
//! carry while splitting into two forbidden-subgraph-free color classes,
//! found by exhaustive search over hosts up to isomorphism.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::all_graphs;
use crate::graph::Graph;
use crate::homo::is_subgraph;

const HOST_LIMIT: usize = 7;

/// A maximal host together with a valid split: `red` holds a subset of the
/// host's edges, `blue()` the rest, and neither class contains the
/// forbidden graph.
#[derive(Clone, Debug)]
pub struct TuranCertificate {
    pub edge_count: usize,
    pub host: Graph,
    pub red: Graph,
}

impl TuranCertificate {
    pub fn blue(&self) -> Graph {
        let mut blue = Graph::new(self.host.n()).expect("host size fits");
        for (u, v) in self.host.edges() {
            if !self.red.has_edge(u, v) {
                blue.add_edge(u, v).expect("in range");
            }
        }
        blue
    }
}

/// Maximum edge count of an n-vertex graph decomposable into two
/// `forbid`-free graphs, with a deterministic certificate. Hosts are scanned
/// in decreasing edge count, ties resolved by the family order of their
/// canonical forms.
pub fn turan2_number(n: usize, forbid: &Graph) -> Result<TuranCertificate> {
    if n > HOST_LIMIT {
        return Err(Error::SizeLimit {
            op: "turan2_number",
            n,
            limit: HOST_LIMIT,
        });
    }
    if forbid.edge_count() == 0 {
        return Err(Error::Unsupported(
            "the forbidden graph needs at least one edge".into(),
        ));
    }
    let hosts = all_graphs(n)?;
    let max_edges = n * n.saturating_sub(1) / 2;
    for target in (0..=max_edges).rev() {
        let level: Vec<&Graph> = hosts.iter().filter(|h| h.edge_count() == target).collect();
        let splits: Vec<Option<Graph>> = level
            .par_iter()
            .map(|host| find_split(host, forbid))
            .collect();
        // family order within an edge count is canonical-graph6 order, so
        // the first feasible host is the deterministic representative
        for (host, split) in level.iter().zip(splits) {
            if let Some(red) = split {
                let cert = TuranCertificate {
                    edge_count: target,
                    host: (*host).clone(),
                    red,
                };
                debug_assert!(!is_subgraph(forbid, &cert.red));
                debug_assert!(!is_subgraph(forbid, &cert.blue()));
                return Ok(cert);
            }
        }
    }
    unreachable!("the edgeless host always splits");
}

/// Backtracking over host edges: color each red or blue, pruning as soon as
/// a class contains the forbidden graph. The first edge is forced red since
/// the classes are interchangeable.
fn find_split(host: &Graph, forbid: &Graph) -> Option<Graph> {
    let edges = host.edges();
    let mut red = Graph::new(host.n()).expect("host size fits");
    let mut blue = Graph::new(host.n()).expect("host size fits");
    if assign(&edges, 0, &mut red, &mut blue, forbid) {
        Some(red)
    } else {
        None
    }
}

fn assign(
    edges: &[(usize, usize)],
    idx: usize,
    red: &mut Graph,
    blue: &mut Graph,
    forbid: &Graph,
) -> bool {
    if idx == edges.len() {
        return true;
    }
    let (u, v) = edges[idx];

    red.add_edge(u, v).expect("host edge in range");
    if !is_subgraph(forbid, red) && assign(edges, idx + 1, red, blue, forbid) {
        return true;
    }
    red.remove_edge(u, v);

    if idx == 0 {
        return false;
    }
    blue.add_edge(u, v).expect("host edge in range");
    if !is_subgraph(forbid, blue) && assign(edges, idx + 1, red, blue, forbid) {
        return true;
    }
    blue.remove_edge(u, v);
    false
}
