//! Ramsey-graph enumeration, brute-force family Ramsey numbers, and the
//! chromatic-Ramsey pipeline: exhaustively for 2- and 3-chromatic inputs,
//! and by scanning ingested Ramsey(4,4) catalogs top-down for 4-chromatic
//! inputs.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, check_size};
use crate::dataset::{LevelProvenance, RamseyLists};
use crate::error::{Error, Result};
use crate::family::{all_graphs, GraphFamily};
use crate::fractional::{rational_int, Rational};
use crate::graph::Graph;
use crate::graph6;
use crate::homo::{is_subgraph, minimal_hom_images};
use crate::invariants::{chromatic_number, clique_number, independence_number};
use num::One;

/// Classical two-color Ramsey numbers R(k) for the supported clique orders.
pub fn classical_ramsey_number(k: usize) -> Option<usize> {
    match k {
        1 => Some(1),
        2 => Some(2),
        3 => Some(6),
        4 => Some(18),
        _ => None,
    }
}

/// The a-priori window for the chromatic Ramsey number of a k-chromatic
/// graph: `(k-1)^2 + 1 ..= R(k)`.
pub fn chromatic_ramsey_bounds(k: usize) -> Option<(usize, usize)> {
    classical_ramsey_number(k).map(|r| ((k - 1) * (k - 1) + 1, r))
}

/// A two-coloring of the edges of a complete graph, stored as its red color
/// class; blue is the complement within `K_N`.
#[derive(Clone, Debug)]
pub struct EdgeColoring {
    red: Graph,
}

impl EdgeColoring {
    pub fn new(red: Graph) -> Self {
        EdgeColoring { red }
    }

    pub fn order(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    /// True iff some member of `fam` appears monochromatically.
    pub fn hits_family(&self, fam: &GraphFamily) -> bool {
        let blue = self.blue();
        fam.iter()
            .any(|h| is_subgraph(h, &self.red) || is_subgraph(h, &blue))
    }
}

/// True iff `f` has clique number below `s` and independence number below `t`.
pub fn is_ramsey_graph(f: &Graph, s: usize, t: usize) -> Result<bool> {
    check_size("is_ramsey_graph", f.n())?;
    Ok(clique_number(f)? < s && independence_number(f)? < t)
}

/// All Ramsey(s,t,n)-graphs up to isomorphism, by one-vertex extensions of
/// the level below. Exceeding `max_classes` at any level is an explicit
/// error, never a truncated result.
pub fn enumerate_ramsey_graphs(
    s: usize,
    t: usize,
    n: usize,
    max_classes: usize,
) -> Result<GraphFamily> {
    check_size("enumerate_ramsey_graphs", n)?;
    let mut level: Vec<Graph> = vec![Graph::new(0)?];
    for size in 1..=n {
        let children: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|parent| {
                let mut found = Vec::new();
                for mask in 0u64..(1 << (size - 1)) {
                    let mut child = Graph::new(size)?;
                    for (u, v) in parent.edges() {
                        child.add_edge(u, v)?;
                    }
                    for v in 0..(size - 1) {
                        if mask >> v & 1 == 1 {
                            child.add_edge(v, size - 1)?;
                        }
                    }
                    if is_ramsey_graph(&child, s, t)? {
                        found.push(canonical_form(&child)?);
                    }
                }
                Ok(found)
            })
            .collect::<Result<_>>()?;
        let mut fam = GraphFamily::new();
        for batch in children {
            for child in batch {
                fam.insert_canonical(child);
                if fam.len() > max_classes {
                    return Err(Error::BudgetExceeded {
                        op: "enumerate_ramsey_graphs",
                        detail: format!("more than {max_classes} classes at {size} vertices"),
                    });
                }
            }
        }
        level = fam.iter().cloned().collect();
        if level.is_empty() {
            break;
        }
    }
    if level.first().map(|g| g.n()) != Some(n) {
        return Ok(GraphFamily::new());
    }
    GraphFamily::from_graphs(&level)
}

/// Outcome of the exhaustive family-Ramsey search.
#[derive(Clone, Debug)]
pub enum FamilySearch {
    /// Smallest `N <= n_cap` forcing a monochromatic member, with the red
    /// graph witnessing that `N - 1` does not.
    Found { value: usize, witness: Option<Graph> },
    /// No `N <= n_cap` qualifies.
    ExceedsCap { n_cap: usize },
}

const FAMILY_CAP_LIMIT: usize = 8;

/// Smallest `N <= n_cap` such that every two-coloring of `K_N`'s edges holds
/// a monochromatic member of `fam`, scanning red color classes up to
/// isomorphism.
pub fn family_ramsey_number(fam: &GraphFamily, n_cap: usize) -> Result<FamilySearch> {
    if n_cap > FAMILY_CAP_LIMIT {
        return Err(Error::SizeLimit {
            op: "family_ramsey_number",
            n: n_cap,
            limit: FAMILY_CAP_LIMIT,
        });
    }
    if fam.is_empty() {
        return Ok(FamilySearch::ExceedsCap { n_cap });
    }
    let mut witness: Option<Graph> = None;
    for order in 1..=n_cap {
        let reds = all_graphs(order)?;
        let miss = reds
            .par_iter()
            .position_first(|red| !EdgeColoring::new(red.clone()).hits_family(fam));
        match miss {
            None => {
                return Ok(FamilySearch::Found {
                    value: order,
                    witness,
                })
            }
            Some(idx) => witness = Some(reds[idx].clone()),
        }
    }
    Ok(FamilySearch::ExceedsCap { n_cap })
}

/// Witness entry of a report: the first level where some catalog graph and
/// its complement both avoid every minimal image.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub level: usize,
    pub graph6: String,
    /// False when fast mode stopped at the first miss instead of scanning
    /// the whole level for the lexicographically smallest canonical form.
    pub canonical: bool,
}

/// Per-level timing; kept out of the serialized report so identical inputs
/// produce byte-identical JSON.
#[derive(Clone, Debug)]
pub struct LevelElapsed {
    pub level: usize,
    pub tested: usize,
    pub millis: u128,
}

/// Result record of a chromatic-Ramsey computation.
#[derive(Clone, Debug, Serialize)]
pub struct RamseyReport {
    pub input_graph6: String,
    pub hom_prime: Vec<String>,
    pub value: usize,
    pub witness: Option<Witness>,
    pub turan_density_2: String,
    pub dataset_provenance: Vec<LevelProvenance>,
    #[serde(skip)]
    pub elapsed: Vec<LevelElapsed>,
}

impl RamseyReport {
    /// The derived two-color extremal density `1 - 1/(value - 1)`.
    pub fn turan_density(value: usize) -> Rational {
        Rational::one() - Rational::one() / rational_int(value - 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Scan mode for the list-driven pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Scan every graph of the failing level and report the witness with the
    /// lexicographically smallest canonical graph6.
    Canonical,
    /// Stop at the first miss in list order.
    Fast,
}

/// Chromatic Ramsey number by exhaustive family search: the minimal
/// homomorphic images of `g`, then the smallest `N` forcing one of them
/// monochromatically. Practical for 2- and 3-chromatic inputs.
pub fn chromatic_ramsey_small(g: &Graph, n_cap: usize) -> Result<RamseyReport> {
    if g.n() > 12 {
        return Err(Error::SizeLimit {
            op: "chromatic_ramsey_small",
            n: g.n(),
            limit: 12,
        });
    }
    let chi = chromatic_number(g)?;
    if chi < 2 {
        return Err(Error::Unsupported(
            "chromatic Ramsey numbers need a graph with at least one edge".into(),
        ));
    }
    let start = Instant::now();
    let hom_prime = minimal_hom_images(g)?;
    match family_ramsey_number(&hom_prime, n_cap)? {
        FamilySearch::ExceedsCap { n_cap } => Err(Error::CapExceeded {
            cap: n_cap,
            detail: "no level within the search cap forces a monochromatic image".into(),
        }),
        FamilySearch::Found { value, witness } => {
            let report = RamseyReport {
                input_graph6: graph6::encode_string(&canonical_form(g)?),
                hom_prime: hom_prime.graph6_strings(),
                value,
                witness: match witness {
                    Some(w) => Some(Witness {
                        level: value - 1,
                        graph6: graph6::encode_string(&canonical_form(&w)?),
                        canonical: true,
                    }),
                    None => None,
                },
                turan_density_2: RamseyReport::turan_density(value).to_string(),
                dataset_provenance: Vec::new(),
                elapsed: vec![LevelElapsed {
                    level: value,
                    tested: 0,
                    millis: start.elapsed().as_millis(),
                }],
            };
            check_report_bounds(chi, &report);
            Ok(report)
        }
    }
}

/// Chromatic Ramsey number from validated Ramsey(k,k) catalogs: walk levels
/// from `R(k) - 1` down to `(k-1)^2 + 1`; the first level holding a graph
/// `F` such that neither `F` nor its complement contains any minimal image
/// besides `K_k` gives `level + 1`; if every level is covered the lower
/// bound is the answer.
pub fn chromatic_ramsey_from_lists(
    g: &Graph,
    hom_prime: &GraphFamily,
    lists: &RamseyLists,
    mode: ScanMode,
) -> Result<RamseyReport> {
    let k = lists.clique_order();
    let chi = chromatic_number(g)?;
    if chi != k {
        return Err(Error::Unsupported(format!(
            "input is {chi}-chromatic but the catalog is for {k}-chromatic inputs"
        )));
    }
    let (lo, hi) = chromatic_ramsey_bounds(k).ok_or_else(|| {
        Error::Unsupported(format!("no catalog scan for chromatic number {k}"))
    })?;
    for level in lo..hi {
        if lists.level(level).is_none() {
            return Err(Error::MissingLevel { level });
        }
    }
    let clique = Graph::complete(k)?;
    let clique_fam = GraphFamily::from_graphs([&clique])?;
    let targets: Vec<Graph> = hom_prime.without(&clique_fam).iter().cloned().collect();

    let mut elapsed = Vec::new();
    let mut outcome: Option<(usize, usize, Graph)> = None; // (value, level, witness)
    for level in (lo..hi).rev() {
        let entries = lists
            .level(level)
            .ok_or(Error::MissingLevel { level })?;
        let tick = Instant::now();
        let miss = match mode {
            ScanMode::Fast => entries
                .par_iter()
                .position_first(|f| !hits_targets(f, &targets))
                .map(|idx| entries[idx].clone()),
            ScanMode::Canonical => {
                let misses: Vec<&Graph> = entries
                    .par_iter()
                    .filter(|f| !hits_targets(f, &targets))
                    .collect();
                misses
                    .into_iter()
                    .map(|f| {
                        let canon = canonical_form(f)?;
                        Ok((graph6::encode(&canon), f.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .min_by(|(a, _), (b, _)| a.cmp(b))
                    .map(|(_, f)| f)
            }
        };
        elapsed.push(LevelElapsed {
            level,
            tested: entries.len(),
            millis: tick.elapsed().as_millis(),
        });
        if let Some(f) = miss {
            outcome = Some((level + 1, level, f));
            break;
        }
    }

    let (value, witness) = match outcome {
        Some((value, level, f)) => {
            verify_witness(&f, k, &targets)?;
            let graph6 = match mode {
                ScanMode::Canonical => graph6::encode_string(&canonical_form(&f)?),
                ScanMode::Fast => graph6::encode_string(&f),
            };
            (
                value,
                Some(Witness {
                    level,
                    graph6,
                    canonical: mode == ScanMode::Canonical,
                }),
            )
        }
        None => (lo, None),
    };
    let report = RamseyReport {
        input_graph6: graph6::encode_string(&canonical_form(g)?),
        hom_prime: hom_prime.graph6_strings(),
        value,
        witness,
        turan_density_2: RamseyReport::turan_density(value).to_string(),
        dataset_provenance: lists.provenance().to_vec(),
        elapsed,
    };
    check_report_bounds(chi, &report);
    Ok(report)
}

fn hits_targets(f: &Graph, targets: &[Graph]) -> bool {
    let complement = f.complement();
    targets
        .iter()
        .any(|h| is_subgraph(h, f) || is_subgraph(h, &complement))
}

/// Independent re-verification of a scan witness: the Ramsey condition via
/// the exact invariants, and the non-containment via a plain injective-map
/// search that shares nothing with the candidate-matrix kernel.
fn verify_witness(f: &Graph, k: usize, targets: &[Graph]) -> Result<()> {
    if !is_ramsey_graph(f, k, k)? {
        return Err(Error::Dataset(format!(
            "scan witness {} is not a Ramsey({k},{k})-graph",
            graph6::encode_string(f)
        )));
    }
    let complement = f.complement();
    for h in targets {
        // the independent check is affordable for small patterns only
        if h.n() <= 7 && (embeds_bruteforce(h, f) || embeds_bruteforce(h, &complement)) {
            return Err(Error::Dataset(format!(
                "scan witness {} contains a minimal image after all",
                graph6::encode_string(f)
            )));
        }
    }
    Ok(())
}

/// Naive injective embedding check, deliberately independent of `is_subgraph`.
fn embeds_bruteforce(pattern: &Graph, host: &Graph) -> bool {
    fn go(pattern: &Graph, host: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let pos = map.len();
        if pos == pattern.n() {
            return true;
        }
        for v in 0..host.n() {
            if used[v] {
                continue;
            }
            if (0..pos).all(|j| !pattern.has_edge(j, pos) || host.has_edge(map[j], v)) {
                map.push(v);
                used[v] = true;
                if go(pattern, host, map, used) {
                    return true;
                }
                used[v] = false;
                map.pop();
            }
        }
        false
    }
    if pattern.n() > host.n() {
        return false;
    }
    go(pattern, host, &mut Vec::new(), &mut vec![false; host.n()])
}

fn check_report_bounds(chi: usize, report: &RamseyReport) {
    if let Some((lo, hi)) = chromatic_ramsey_bounds(chi) {
        debug_assert!(
            (lo..=hi).contains(&report.value),
            "value {} outside [{lo}, {hi}] for a {chi}-chromatic input",
            report.value
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cayley_graph;

    #[test]
    fn ramsey_graph_predicate() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_ramsey_graph(&c5, 3, 3).unwrap());
        assert!(!is_ramsey_graph(&Graph::complete(3).unwrap(), 3, 3).unwrap());
        // the Paley circulant of order 17
        let paley = cayley_graph(17, &[1, 2, 4, 8]).unwrap();
        assert!(is_ramsey_graph(&paley, 4, 4).unwrap());
        assert!(!is_ramsey_graph(&paley, 3, 3).unwrap());
    }

    #[test]
    fn enumerate_small_levels() {
        let fam = enumerate_ramsey_graphs(3, 3, 5, 10_000).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.contains(&Graph::cycle(5).unwrap()).unwrap());
        assert!(enumerate_ramsey_graphs(3, 3, 6, 10_000).unwrap().is_empty());

        // omega < 2 forces edgeless graphs while alpha stays below t
        let fam = enumerate_ramsey_graphs(2, 4, 3, 10_000).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.contains(&Graph::new(3).unwrap()).unwrap());
        assert!(enumerate_ramsey_graphs(2, 4, 4, 10_000).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_exhaustive_filter() {
        for n in 1..=7usize {
            for (s, t) in [(3, 3), (3, 4), (4, 4)] {
                let fast = enumerate_ramsey_graphs(s, t, n, 100_000).unwrap();
                let mut slow = GraphFamily::new();
                for g in all_graphs(n).unwrap().iter() {
                    if is_ramsey_graph(g, s, t).unwrap() {
                        slow.insert(g).unwrap();
                    }
                }
                assert_eq!(fast.len(), slow.len(), "({s},{t},{n})");
                for g in fast.iter() {
                    assert!(slow.contains(g).unwrap());
                }
            }
        }
    }

    #[test]
    fn enumeration_budget_is_explicit() {
        assert!(matches!(
            enumerate_ramsey_graphs(4, 4, 6, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn family_numbers() {
        let single = |g: &Graph| GraphFamily::from_graphs([g]).unwrap();
        let k2 = single(&Graph::complete(2).unwrap());
        match family_ramsey_number(&k2, 8).unwrap() {
            FamilySearch::Found { value, .. } => assert_eq!(value, 2),
            other => panic!("unexpected {other:?}"),
        }

        let k3 = single(&Graph::complete(3).unwrap());
        match family_ramsey_number(&k3, 8).unwrap() {
            FamilySearch::Found { value, witness } => {
                assert_eq!(value, 6);
                // the unique extremal coloring at five vertices
                assert!(crate::canon::is_isomorphic(
                    &witness.unwrap(),
                    &Graph::cycle(5).unwrap()
                )
                .unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }

        let both = GraphFamily::from_graphs([
            &Graph::cycle(3).unwrap(),
            &Graph::cycle(5).unwrap(),
        ])
        .unwrap();
        match family_ramsey_number(&both, 8).unwrap() {
            FamilySearch::Found { value, .. } => assert_eq!(value, 5),
            other => panic!("unexpected {other:?}"),
        }

        // a family whose number exceeds the cap reports, not errors
        let k4 = single(&Graph::complete(4).unwrap());
        assert!(matches!(
            family_ramsey_number(&k4, 8).unwrap(),
            FamilySearch::ExceedsCap { .. }
        ));
        assert!(family_ramsey_number(&k4, 9).is_err());
    }

    #[test]
    fn monotone_under_family_growth() {
        let k3 = GraphFamily::from_graphs([&Graph::complete(3).unwrap()]).unwrap();
        let more = GraphFamily::from_graphs([
            &Graph::complete(3).unwrap(),
            &Graph::cycle(5).unwrap(),
        ])
        .unwrap();
        let value = |fam: &GraphFamily| match family_ramsey_number(fam, 8).unwrap() {
            FamilySearch::Found { value, .. } => value,
            _ => panic!("expected a value"),
        };
        assert!(value(&k3) >= value(&more));
    }

    #[test]
    fn small_pipeline_values() {
        let report = chromatic_ramsey_small(&Graph::complete(2).unwrap(), 8).unwrap();
        assert_eq!(report.value, 2);
        assert_eq!(report.turan_density_2, "0");

        let report = chromatic_ramsey_small(&Graph::complete(3).unwrap(), 8).unwrap();
        assert_eq!(report.value, 6);
        assert_eq!(report.turan_density_2, "4/5");

        let report = chromatic_ramsey_small(&Graph::cycle(5).unwrap(), 8).unwrap();
        assert_eq!(report.value, 5);
        assert_eq!(report.turan_density_2, "3/4");
        assert_eq!(report.witness.as_ref().unwrap().level, 4);

        assert!(chromatic_ramsey_small(&Graph::new(3).unwrap(), 8).is_err());
    }

    #[test]
    fn bipartite_inputs_always_land_at_two() {
        for n in 2..=5usize {
            for g in all_graphs(n).unwrap().iter() {
                if g.edge_count() == 0 || chromatic_number(g).unwrap() != 2 {
                    continue;
                }
                assert_eq!(chromatic_ramsey_small(g, 8).unwrap().value, 2, "{g:?}");
            }
        }
    }

    #[test]
    fn scan_agrees_with_small_pipeline_on_3_chromatic_inputs() {
        let lists = RamseyLists::builtin_33().unwrap();
        for n in 3..=6usize {
            for g in all_graphs(n).unwrap().iter() {
                if chromatic_number(g).unwrap() != 3 {
                    continue;
                }
                let hom_prime = minimal_hom_images(g).unwrap();
                let scanned =
                    chromatic_ramsey_from_lists(g, &hom_prime, &lists, ScanMode::Canonical)
                        .unwrap();
                let small = chromatic_ramsey_small(g, 8).unwrap();
                assert_eq!(scanned.value, small.value, "graph {g:?}");
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let report = chromatic_ramsey_small(&Graph::cycle(5).unwrap(), 8).unwrap();
        let json = report.to_json();
        let keys: Vec<&str> = [
            "input_graph6",
            "hom_prime",
            "value",
            "witness",
            "turan_density_2",
            "dataset_provenance",
        ]
        .into_iter()
        .filter(|k| json.contains(&format!("\"{k}\"")))
        .collect();
        assert_eq!(keys.len(), 6, "{json}");
        // field order is fixed by declaration order
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        let mut sorted = positions.clone();
        sorted.sort_unstable();
        assert_eq!(positions, sorted);
        assert!(!json.contains("elapsed"));
    }
}
