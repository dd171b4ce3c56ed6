//! The iterated matching construction: level one is two isolated vertices;
//! each later level takes an independent set, one vertex per hypergraph
//! vertex, plus one copy of the previous level per hyperedge, matched into
//! the hyperedge by a perfect matching.

use crate::constructions::hypergraph::Hypergraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Build level `hypergraphs.len() + 1` of the construction. The j-th
/// hypergraph must be uniform of the previous level's vertex count; the
/// matching pairs each copy's vertices in index order with the hyperedge's
/// vertices in ascending order (the construction only needs *a* perfect
/// matching; fixing this one keeps the output deterministic).
pub fn tutte_graph(hypergraphs: &[Hypergraph]) -> Result<Graph> {
    let mut current = Graph::new(2)?;
    for (idx, h) in hypergraphs.iter().enumerate() {
        if h.uniformity() != current.n() {
            return Err(Error::Hypergraph(format!(
                "level {} needs a {}-uniform hypergraph, got uniformity {}",
                idx + 2,
                current.n(),
                h.uniformity()
            )));
        }
        let copy_size = current.n();
        let total = h.n() + h.edge_count() * copy_size;
        if total > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: total,
                capacity: MAX_VERTICES,
            });
        }
        // layout: the independent set first, then the copies in hyperedge order
        let mut next = Graph::new(total)?;
        for (c, edge) in h.edges().iter().enumerate() {
            let base = h.n() + c * copy_size;
            for (u, v) in current.edges() {
                next.add_edge(base + u, base + v)?;
            }
            for (j, &target) in edge.iter().enumerate() {
                next.add_edge(base + j, target)?;
            }
        }
        current = next;
    }
    Ok(current)
}
