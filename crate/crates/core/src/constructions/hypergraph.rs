//! Uniform hypergraphs with weak chromatic number and alternating-cycle
//! girth, their text serialization, and randomized search-and-verify for
//! high-girth high-chromatic instances at tiny parameters.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::invariants;

const VERTEX_LIMIT: usize = 20;
const EDGE_LIMIT: usize = 40;

/// An r-uniform hypergraph: vertex count plus a duplicate-free list of
/// r-element vertex sets, each stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::Hypergraph(format!("uniformity must be >= 2, got {r}")));
        }
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut e = edge;
            e.sort_unstable();
            e.dedup();
            if e.len() != r {
                return Err(Error::Hypergraph(format!(
                    "hyperedge {e:?} does not have {r} distinct vertices"
                )));
            }
            if e.iter().any(|&v| v >= n) {
                return Err(Error::Hypergraph(format!(
                    "hyperedge {e:?} out of range for {n} vertices"
                )));
            }
            if normalized.contains(&e) {
                return Err(Error::Hypergraph(format!("duplicate hyperedge {e:?}")));
            }
            normalized.push(e);
        }
        Ok(Hypergraph {
            n,
            r,
            edges: normalized,
        })
    }

    /// A graph viewed as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        Hypergraph::new(
            g.n(),
            2,
            g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Text form: first line `n r`, then one hyperedge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for edge in &self.edges {
            let words: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Hypergraph("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Hypergraph(format!(
                "header must be `n r`, got `{header}`"
            )));
        }
        let n: usize = fields[0]
            .parse()
            .map_err(|_| Error::Hypergraph(format!("bad vertex count `{}`", fields[0])))?;
        let r: usize = fields[1]
            .parse()
            .map_err(|_| Error::Hypergraph(format!("bad uniformity `{}`", fields[1])))?;
        let mut edges = Vec::new();
        for line in lines {
            let edge: Vec<usize> = line
                .split_whitespace()
                .map(|w| {
                    w.parse()
                        .map_err(|_| Error::Hypergraph(format!("bad vertex `{w}`")))
                })
                .collect::<Result<_>>()?;
            edges.push(edge);
        }
        Hypergraph::new(n, r, edges)
    }

    /// Weak chromatic number: fewest colors such that no hyperedge is
    /// monochromatic. One when there are no hyperedges.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > VERTEX_LIMIT {
            return Err(Error::SizeLimit {
                op: "hypergraph_chromatic_number",
                n: self.n,
                limit: VERTEX_LIMIT,
            });
        }
        if self.n == 0 {
            return Ok(0);
        }
        if self.edges.is_empty() {
            return Ok(1);
        }
        // edges become checkable once their largest vertex is colored
        let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (idx, edge) in self.edges.iter().enumerate() {
            by_max[*edge.last().expect("nonempty")].push(idx);
        }
        for k in 2..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.colorable(k, 0, &mut colors, &by_max) {
                return Ok(k);
            }
        }
        unreachable!("n colors leave no hyperedge monochromatic for r >= 2")
    }

    fn colorable(&self, k: usize, v: usize, colors: &mut Vec<usize>, by_max: &[Vec<usize>]) -> bool {
        if v == self.n {
            return true;
        }
        let used = colors[..v].iter().copied().filter(|&c| c != usize::MAX).max();
        let cap = match used {
            None => 1,
            Some(m) => (m + 2).min(k),
        };
        for c in 0..cap {
            colors[v] = c;
            let ok = by_max[v].iter().all(|&idx| {
                let edge = &self.edges[idx];
                !edge.iter().all(|&u| colors[u] == c)
            });
            if ok && self.colorable(k, v + 1, colors, by_max) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Girth under the alternating-cycle definition: distinct vertices and
    /// distinct hyperedges, consecutive vertices sharing the hyperedge
    /// between them. A cycle of length s corresponds to a 2s-cycle of the
    /// bipartite incidence graph, so this is incidence girth halved; length
    /// 2 appears exactly when two hyperedges share two vertices.
    pub fn girth(&self) -> Result<Girth> {
        if self.n > VERTEX_LIMIT || self.edges.len() > EDGE_LIMIT {
            return Err(Error::SizeLimit {
                op: "hypergraph_girth",
                n: self.n.max(self.edges.len()),
                limit: VERTEX_LIMIT.max(EDGE_LIMIT),
            });
        }
        let mut incidence = Graph::new(self.n + self.edges.len())?;
        for (idx, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                incidence.add_edge(v, self.n + idx)?;
            }
        }
        Ok(match invariants::girth(&incidence) {
            Girth::Infinite => Girth::Infinite,
            Girth::Finite(g) => {
                debug_assert_eq!(g % 2, 0, "incidence graphs are bipartite");
                Girth::Finite(g / 2)
            }
        })
    }
}

/// Randomized search for an r-uniform hypergraph with chromatic number at
/// least `k` and girth at least `g`: sample edge sets of growing size and
/// keep only fully verified hits. Returns `None` once the attempt budget is
/// exhausted; never an unverified result.
pub fn find_high_girth_hypergraph(
    r: usize,
    k: usize,
    g: usize,
    budget: usize,
    seed: u64,
) -> Result<Option<Hypergraph>> {
    if r > 4 || k > 3 || g > 4 {
        return Err(Error::SizeLimit {
            op: "find_high_girth_hypergraph",
            n: r.max(k).max(g),
            limit: 4,
        });
    }
    if r < 2 {
        return Err(Error::Hypergraph("uniformity must be >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verts: Vec<usize> = Vec::new();
    for attempt in 0..budget {
        // grow the sample space as attempts accumulate
        let n = r + rng.random_range(0..=(r + g + 2 + attempt / 64).min(VERTEX_LIMIT - r));
        let max_edges = (2 * n).min(EDGE_LIMIT);
        let m = 1 + rng.random_range(0..max_edges);
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
        for _ in 0..m {
            verts.clear();
            verts.extend(0..n);
            verts.shuffle(&mut rng);
            let mut edge: Vec<usize> = verts[..r].to_vec();
            edge.sort_unstable();
            if !edges.contains(&edge) {
                edges.push(edge);
            }
        }
        let Ok(candidate) = Hypergraph::new(n, r, edges) else {
            continue;
        };
        if candidate.chromatic_number()? >= k && candidate.girth()?.at_least(g) {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}
