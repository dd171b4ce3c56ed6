//! Canonical labeling by iterative refinement plus backtracking over the
//! remaining cell choices; among all labelings consistent with the refinement
//! tree, the lexicographically smallest adjacency bit string wins.
//!
//! Equal-string leaves yield automorphisms, and branches whose root lies in
//! the orbit of an already-explored choice (under the automorphisms fixing
//! the current individualization prefix pointwise) are skipped. That keeps
//! unions of cliques and other very symmetric graphs from exploding.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// NP-hard invariants and labelings are guarded at this size.
pub const NP_HARD_LIMIT: usize = 30;

pub(crate) fn check_size(op: &'static str, n: usize) -> Result<()> {
    if n > NP_HARD_LIMIT {
        return Err(Error::SizeLimit {
            op,
            n,
            limit: NP_HARD_LIMIT,
        });
    }
    Ok(())
}

/// Isomorphism-invariant relabeling: `canonical_form(g) == canonical_form(h)`
/// iff `g` and `h` are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(g.permuted(&canonical_labeling(g)?))
}

/// The permutation (vertex to position) realizing the canonical form.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_size("canonical_form", g.n())?;
    let n = g.n();
    if n <= 1 {
        return Ok(vec![0; n]);
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut search = Search {
        n,
        rows: &rows,
        best_bits: None,
        best_order: Vec::new(),
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(&rows, &mut cells);
    search.descend(cells, &mut Vec::new());
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Equitable refinement of an ordered partition: repeatedly split cells by
/// neighbor counts into earlier-scanned cells, new sub-cells ordered by
/// ascending count. Deterministic, and equivariant under isomorphism.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut split_at = None;
        'scan: for s in 0..cells.len() {
            let mask: u64 = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            for t in 0..cells.len() {
                if cells[t].len() <= 1 {
                    continue;
                }
                let counts: Vec<u32> = cells[t]
                    .iter()
                    .map(|&v| (rows[v] & mask).count_ones())
                    .collect();
                if counts.iter().any(|&c| c != counts[0]) {
                    split_at = Some((t, counts));
                    break 'scan;
                }
            }
        }
        let Some((t, counts)) = split_at else { break };
        let cell = cells.remove(t);
        let mut keys: Vec<u32> = counts.clone();
        keys.sort_unstable();
        keys.dedup();
        for (offset, key) in keys.iter().enumerate() {
            let group: Vec<usize> = cell
                .iter()
                .zip(&counts)
                .filter(|&(_, c)| c == key)
                .map(|(&v, _)| v)
                .collect();
            cells.insert(t + offset, group);
        }
    }
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    best_bits: Option<Vec<u64>>,
    best_order: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, individualized: &mut Vec<usize>) {
        let target = cells.iter().position(|c| c.len() > 1);
        let Some(target) = target else {
            self.record_leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut orbit = UnionFind::new(self.n);
        for auto in &self.autos {
            if individualized.iter().all(|&v| auto[v] == v) {
                for v in 0..self.n {
                    orbit.union(v, auto[v]);
                }
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if tried.iter().any(|&u| orbit.find(u) == orbit.find(v)) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (idx, cell) in cells.iter().enumerate() {
                if idx == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.rows, &mut child);
            individualized.push(v);
            self.descend(child, individualized);
            individualized.pop();
            // refresh orbits with any automorphisms found in the subtree
            orbit = UnionFind::new(self.n);
            for auto in &self.autos {
                if individualized.iter().all(|&u| auto[u] == u) {
                    for u in 0..self.n {
                        orbit.union(u, auto[u]);
                    }
                }
            }
        }
    }

    fn record_leaf(&mut self, cells: &[Vec<usize>]) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bits = leaf_bits(self.rows, &order);
        match &self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_order = order;
            }
            Some(best) => match bits.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_bits = Some(bits);
                    self.best_order = order;
                }
                std::cmp::Ordering::Equal => {
                    // two labelings with the same image give an automorphism
                    if self.autos.len() < 4096 {
                        let mut auto = vec![0; self.n];
                        for pos in 0..self.n {
                            auto[self.best_order[pos]] = order[pos];
                        }
                        if auto.iter().enumerate().any(|(v, &w)| v != w) {
                            self.autos.push(auto);
                        }
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Upper-triangle bits of the relabeled adjacency matrix, packed so that
/// `Vec<u64>` lexicographic order equals bit-string lexicographic order.
fn leaf_bits(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * (n - 1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if rows[order[i]] >> order[j] & 1 == 1 {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, u: usize, v: usize) {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru != rv {
            self.parent[ru] = rv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycles_agree() {
        let c5 = Graph::cycle(5).unwrap();
        let scrambled = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&scrambled).unwrap()
        );
        assert_ne!(
            canonical_form(&Graph::complete(3).unwrap()).unwrap(),
            canonical_form(&Graph::path(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn iso_checks() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
        assert!(is_isomorphic(&Graph::complete(3).unwrap(), &Graph::cycle(3).unwrap()).unwrap());
        assert!(!is_isomorphic(&Graph::complete(4).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        // K_3 and P_3 + isolated vertex have equal degree sums but differ
        let p3_plus = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_isomorphic(&Graph::complete(3).unwrap(), &p3_plus).unwrap());
        // a triangle times an edge is a hexagon
        let product = Graph::complete(3)
            .unwrap()
            .tensor_product(&Graph::complete(2).unwrap())
            .unwrap();
        assert!(is_isomorphic(&product, &Graph::cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // unions of cliques and edgeless graphs exercise the orbit pruning
        let edgeless = Graph::new(12).unwrap();
        assert_eq!(canonical_form(&edgeless).unwrap(), edgeless);

        let two_k6 = Graph::complete(6)
            .unwrap()
            .disjoint_union(&Graph::complete(6).unwrap())
            .unwrap();
        let canon = canonical_form(&two_k6).unwrap();
        assert_eq!(canon.edge_count(), 30);

        let k66 = Graph::new(6).unwrap().join(&Graph::new(6).unwrap()).unwrap();
        assert!(is_isomorphic(&k66, &canonical_form(&k66).unwrap()).unwrap());
    }

    #[test]
    fn size_guard() {
        let big = Graph::new(31).unwrap();
        assert!(matches!(
            canonical_form(&big),
            Err(Error::SizeLimit { .. })
        ));
    }
}
