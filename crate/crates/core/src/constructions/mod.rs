//! The graph and hypergraph constructions: named small graphs, Cayley
//! circulants, the iterated-tensor families, clique joins, high-girth
//! hypergraph machinery, and the two-color extremal search.

pub mod hypergraph;
pub mod turan;
pub mod tutte;
pub mod zhu;

pub use hypergraph::{find_high_girth_hypergraph, Hypergraph};
pub use turan::{turan2_number, TuranCertificate};
pub use tutte::tutte_graph;
pub use zhu::{bel_join, zhu_family, zhu_graph, ZhuSpec};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Circulant Cayley graph on `Z_modulus`: `v` adjacent to `v + s` for every
/// `s` in the connection set, closed under negation (undirected).
pub fn cayley_graph(modulus: usize, connection: &[usize]) -> Result<Graph> {
    if modulus == 0 {
        return Err(Error::Unsupported("cayley modulus must be >= 1".into()));
    }
    if connection.is_empty() {
        return Err(Error::Unsupported("cayley connection set is empty".into()));
    }
    let mut g = Graph::new(modulus)?;
    for &s in connection {
        if s == 0 || s >= modulus {
            return Err(Error::BadConnection { elem: s, modulus });
        }
        for v in 0..modulus {
            g.add_edge(v, (v + s) % modulus)?;
        }
    }
    Ok(g)
}

/// The Moser spindle on its documented labeling: 7 vertices, 11 edges.
fn moser_spindle() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 4),
            (0, 6),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
        ],
    )
    .expect("fixed edge list is valid")
}

fn petersen() -> Graph {
    let mut g = Graph::new(10).expect("10 fits");
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5).unwrap(); // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5).unwrap(); // inner pentagram
        g.add_edge(v, 5 + v).unwrap(); // spokes
    }
    g
}

/// Look up a graph by identifier: `moser_spindle`, `w5`, `petersen`, or the
/// parameterized `k<n>`, `c<n>`, `path<n>` (underscores optional, `p<n>`
/// accepted for paths).
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "moser_spindle" => return Ok(moser_spindle()),
        // the hub is vertex 0, the rim is 1..=5
        "w5" => return Graph::complete(1)?.join(&Graph::cycle(5)?),
        "petersen" => return Ok(petersen()),
        _ => {}
    }
    for (prefix, build) in [
        ("k", Graph::complete as fn(usize) -> Result<Graph>),
        ("c", Graph::cycle),
        ("path", Graph::path),
        ("p", Graph::path),
    ] {
        if let Some(rest) = lower.strip_prefix(prefix) {
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            if !rest.is_empty() {
                if let Ok(n) = rest.parse::<usize>() {
                    return build(n);
                }
            }
        }
    }
    Err(Error::UnknownName(name.to_string()))
}
