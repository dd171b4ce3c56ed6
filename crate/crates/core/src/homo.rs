//! Homomorphism existence, quotient enumeration by independent-set
//! contraction, minimal homomorphic images, and the subgraph-isomorphism
//! kernel the Ramsey-list scan is built on.

use crate::canon::check_size;
use crate::error::{Error, Result};
use crate::family::GraphFamily;
use crate::graph::Graph;

/// True iff `host` contains a (not necessarily induced) copy of `pattern`.
///
/// Ullmann-style search: per-vertex candidate bitsets, arc-consistency
/// refinement after every assignment, pattern vertices processed in
/// descending degree order. Pure function, safe to call from many workers on
/// shared graphs.
pub fn is_subgraph(pattern: &Graph, host: &Graph) -> bool {
    let np = pattern.n();
    let nh = host.n();
    assert!(nh <= 64, "subgraph host must have at most 64 vertices");
    if np > nh || pattern.edge_count() > host.edge_count() {
        return false;
    }
    if np == 0 {
        return true;
    }

    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    // pattern adjacency among search positions
    let pat: Vec<u64> = (0..np)
        .map(|i| {
            let mut row = 0u64;
            for j in 0..np {
                if pattern.has_edge(order[i], order[j]) {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();
    let host_rows: Vec<u64> = (0..nh).map(|v| host.row64(v)).collect();
    let host_deg: Vec<usize> = (0..nh).map(|v| host.degree(v)).collect();

    let mut cand: Vec<u64> = (0..np)
        .map(|i| {
            let need = pattern.degree(order[i]);
            (0..nh)
                .filter(|&v| host_deg[v] >= need)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    if !refine(&pat, &host_rows, &mut cand, 0) {
        return false;
    }
    embed(&pat, &host_rows, &cand, 0, 0)
}

fn embed(pat: &[u64], host_rows: &[u64], cand: &[u64], pos: usize, used: u64) -> bool {
    if pos == pat.len() {
        return true;
    }
    let mut choices = cand[pos] & !used;
    while choices != 0 {
        let v = choices.trailing_zeros() as usize;
        choices &= choices - 1;
        let mut next = cand.to_vec();
        next[pos] = 1 << v;
        let mut ok = true;
        for (j, nj) in next.iter_mut().enumerate().skip(pos + 1) {
            if pat[pos] >> j & 1 == 1 {
                *nj &= host_rows[v];
            }
            if *nj & !(used | 1 << v) == 0 {
                ok = false;
                break;
            }
        }
        if ok
            && refine(pat, host_rows, &mut next, pos + 1)
            && embed(pat, host_rows, &next, pos + 1, used | 1 << v)
        {
            return true;
        }
    }
    false
}

/// Arc consistency to fixpoint: a host vertex stays a candidate for `i` only
/// if every pattern neighbor of `i` keeps a candidate adjacent to it.
fn refine(pat: &[u64], host_rows: &[u64], cand: &mut [u64], from: usize) -> bool {
    loop {
        let mut changed = false;
        for i in from..pat.len() {
            let mut kept = 0u64;
            let mut set = cand[i];
            while set != 0 {
                let v = set.trailing_zeros() as usize;
                set &= set - 1;
                let mut good = true;
                for (j, &cj) in cand.iter().enumerate() {
                    if pat[i] >> j & 1 == 1 && cj & host_rows[v] == 0 {
                        good = false;
                        break;
                    }
                }
                if good {
                    kept |= 1 << v;
                }
            }
            if kept != cand[i] {
                cand[i] = kept;
                changed = true;
            }
            if kept == 0 {
                return false;
            }
        }
        if !changed {
            return true;
        }
    }
}

/// True iff an edge-preserving vertex map from `g` into `h` exists.
pub fn has_homomorphism(g: &Graph, h: &Graph) -> Result<bool> {
    check_size("has_homomorphism", g.n())?;
    check_size("has_homomorphism", h.n())?;
    if g.n() == 0 {
        return Ok(true);
    }
    if h.n() == 0 {
        return Ok(false);
    }
    if g.edge_count() > 0 && h.edge_count() == 0 {
        return Ok(false);
    }

    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let src: Vec<u64> = (0..g.n())
        .map(|i| {
            let mut row = 0u64;
            for j in 0..g.n() {
                if g.has_edge(order[i], order[j]) {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();
    let dst_rows: Vec<u64> = (0..h.n()).map(|v| h.row64(v)).collect();
    let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let cand = vec![full; g.n()];
    Ok(hom_search(&src, &dst_rows, &cand, 0))
}

fn hom_search(src: &[u64], dst_rows: &[u64], cand: &[u64], pos: usize) -> bool {
    if pos == src.len() {
        return true;
    }
    let mut choices = cand[pos];
    while choices != 0 {
        let x = choices.trailing_zeros() as usize;
        choices &= choices - 1;
        let mut next = cand.to_vec();
        next[pos] = 1 << x;
        let mut ok = true;
        for (j, nj) in next.iter_mut().enumerate().skip(pos + 1) {
            if src[pos] >> j & 1 == 1 {
                *nj &= dst_rows[x];
                if *nj == 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && hom_search(src, dst_rows, &next, pos + 1) {
            return true;
        }
    }
    false
}

/// A partition of the vertex set of a source graph into independent blocks.
#[derive(Clone, Debug)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates that the blocks are disjoint, cover `0..g.n()`, and are each
    /// independent in `g`.
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; g.n()];
        for block in &blocks {
            for &v in block {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { v, n: g.n() });
                }
                if seen[v] {
                    return Err(Error::Unsupported(format!(
                        "vertex {v} appears in two blocks"
                    )));
                }
                seen[v] = true;
            }
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    if g.has_edge(u, v) {
                        return Err(Error::Unsupported(format!(
                            "block contains adjacent vertices {u} and {v}"
                        )));
                    }
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Unsupported("blocks do not cover the vertex set".into()));
        }
        Ok(VertexPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The quotient graph: one vertex per block, adjacent iff some cross edge
    /// exists in `g`.
    pub fn quotient(&self, g: &Graph) -> Result<Graph> {
        let k = self.blocks.len();
        let mut q = Graph::new(k)?;
        for a in 0..k {
            for b in (a + 1)..k {
                let cross = self.blocks[a]
                    .iter()
                    .any(|&u| self.blocks[b].iter().any(|&v| g.has_edge(u, v)));
                if cross {
                    q.add_edge(a, b)?;
                }
            }
        }
        Ok(q)
    }
}

const QUOTIENT_LIMIT: usize = 12;

/// All quotient graphs of `g` over partitions into independent blocks, up to
/// isomorphism. Deduplicated via canonical forms as partitions are generated.
pub fn quotients(g: &Graph) -> Result<GraphFamily> {
    if g.n() > QUOTIENT_LIMIT {
        return Err(Error::SizeLimit {
            op: "quotients",
            n: g.n(),
            limit: QUOTIENT_LIMIT,
        });
    }
    let rows: Vec<u64> = (0..g.n()).map(|v| g.row64(v)).collect();
    let mut family = GraphFamily::new();
    let mut block_masks: Vec<u64> = Vec::new();
    place_vertex(g, &rows, 0, &mut block_masks, &mut family)?;
    Ok(family)
}

fn place_vertex(
    g: &Graph,
    rows: &[u64],
    v: usize,
    blocks: &mut Vec<u64>,
    family: &mut GraphFamily,
) -> Result<()> {
    if v == g.n() {
        let k = blocks.len();
        let mut q = Graph::new(k)?;
        for a in 0..k {
            for b in (a + 1)..k {
                let cross = bits(blocks[a]).any(|u| rows[u] & blocks[b] != 0);
                if cross {
                    q.add_edge(a, b)?;
                }
            }
        }
        family.insert(&q)?;
        return Ok(());
    }
    for i in 0..blocks.len() {
        if rows[v] & blocks[i] == 0 {
            blocks[i] |= 1 << v;
            place_vertex(g, rows, v + 1, blocks, family)?;
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    place_vertex(g, rows, v + 1, blocks, family)?;
    blocks.pop();
    Ok(())
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// The subgraph-minimal homomorphic images of `g`: quotients from which no
/// single edge or vertex can be deleted without losing the homomorphism from
/// `g`, reduced so no member contains a strictly smaller member.
pub fn minimal_hom_images(g: &Graph) -> Result<GraphFamily> {
    let candidates = quotients(g)?;
    let mut minimal: Vec<Graph> = Vec::new();
    'cand: for h in candidates.iter() {
        for (u, v) in h.edges() {
            let mut smaller = h.clone();
            smaller.remove_edge(u, v);
            if has_homomorphism(g, &smaller)? {
                continue 'cand;
            }
        }
        for v in 0..h.n() {
            if has_homomorphism(g, &h.delete_vertex(v)?)? {
                continue 'cand;
            }
        }
        minimal.push(h.clone());
    }
    let reduced: Vec<&Graph> = minimal
        .iter()
        .filter(|h| {
            !minimal.iter().any(|other| {
                let strictly_smaller = other.n() < h.n()
                    || (other.n() == h.n() && other.edge_count() < h.edge_count());
                strictly_smaller && is_subgraph(other, h)
            })
        })
        .collect();
    GraphFamily::from_graphs(reduced)
}
