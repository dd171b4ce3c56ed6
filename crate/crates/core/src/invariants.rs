//! Exact graph invariants: clique number, independence number, chromatic
//! number, girth. The NP-hard ones are branch-and-bound over bitsets and are
//! guarded at 30 vertices; girth is plain BFS and runs at any capacity.

use crate::canon::check_size;
use crate::error::Result;
use crate::graph::{Girth, Graph};

/// Exact clique number, branch and bound with a greedy coloring bound.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_size("clique_number", g.n())?;
    if g.n() == 0 {
        return Ok(0);
    }
    let rows: Vec<u64> = (0..g.n()).map(|v| g.row64(v)).collect();
    let mut best = 0;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    expand_clique(&rows, all, 0, &mut best);
    Ok(best)
}

fn expand_clique(rows: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    while cand != 0 {
        if size + coloring_bound(rows, cand) <= *best {
            return;
        }
        let v = 63 - cand.leading_zeros() as usize;
        cand &= !(1u64 << v);
        expand_clique(rows, cand & rows[v], size + 1, best);
    }
}

/// Number of greedy color classes covering `set`; an upper bound for the
/// clique number of the induced subgraph.
fn coloring_bound(rows: &[u64], set: u64) -> usize {
    let mut rest = set;
    let mut classes = 0;
    while rest != 0 {
        classes += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            rest &= !(1u64 << v);
            avail &= !(rows[v] | (1u64 << v));
        }
    }
    classes
}

/// Exact independence number: the clique number of the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    check_size("independence_number", g.n())?;
    clique_number(&g.complement())
}

/// Exact chromatic number. Zero for the null graph, one for nonempty
/// edgeless graphs; otherwise branch and bound seeded by a greedy coloring
/// upper bound and the clique number as lower bound, branching on the most
/// saturated vertex with ties broken by lowest index.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_size("chromatic_number", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if g.bipartition().is_some() {
        return Ok(2);
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let lower = clique_number(g)?.max(3);
    let mut colors: Vec<usize> = vec![usize::MAX; n];
    let mut best = greedy_coloring(&rows, n);
    debug_assert!(best >= lower);
    if best > lower {
        chi_branch(&rows, n, &mut colors, 0, 0, lower, &mut best);
    }
    Ok(best)
}

fn greedy_coloring(rows: &[u64], n: usize) -> usize {
    let mut colors: Vec<usize> = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = pick_branch_vertex(rows, n, &colors);
        let mut forbidden = 0u64;
        for u in 0..n {
            if colors[u] != usize::MAX && rows[v] >> u & 1 == 1 {
                forbidden |= 1 << colors[u];
            }
        }
        let c = (!forbidden).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Most saturated uncolored vertex; ties by degree, then by lowest index.
fn pick_branch_vertex(rows: &[u64], n: usize, colors: &[usize]) -> usize {
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for u in 0..n {
            if colors[u] != usize::MAX && rows[v] >> u & 1 == 1 {
                seen |= 1 << colors[u];
            }
        }
        let key = (seen.count_ones() as usize, rows[v].count_ones() as usize);
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    pick
}

fn chi_branch(
    rows: &[u64],
    n: usize,
    colors: &mut Vec<usize>,
    colored: usize,
    used: usize,
    lower: usize,
    best: &mut usize,
) {
    if *best == lower {
        return;
    }
    if colored == n {
        *best = used;
        return;
    }
    let v = pick_branch_vertex(rows, n, colors);
    let mut forbidden = 0u64;
    for u in 0..n {
        if colors[u] != usize::MAX && rows[v] >> u & 1 == 1 {
            forbidden |= 1 << colors[u];
        }
    }
    let cap = (used + 1).min(*best - 1);
    for c in 0..cap {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        chi_branch(rows, n, colors, colored + 1, used.max(c + 1), lower, best);
        colors[v] = usize::MAX;
        if *best == lower {
            return;
        }
    }
}

/// Exact girth: BFS from every vertex, shortest closed walk through the root
/// never underestimates and the minimum over roots is exact.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for root in 0..n {
        if best == 3 {
            break;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // cycles discovered from u have length >= 2*dist[u]
            if 2 * dist[u] >= best {
                break;
            }
            for (w_idx, &word) in g.row(u).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let v = w_idx * 64 + word.trailing_zeros() as usize;
                    word &= word - 1;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}
