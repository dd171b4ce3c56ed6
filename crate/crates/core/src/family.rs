//! Finite graph families stored up to isomorphism, plus the cached
//! enumeration of all graphs on a given vertex count up to isomorphism.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::canonical_form;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;

/// A set of graphs, one canonical representative per isomorphism class,
/// iterated in sorted order: vertex count, then edge count, then the graph6
/// bytes of the canonical form.
// sort key: (n, edge count, canonical graph6 bytes)
type FamilyKey = (usize, usize, Vec<u8>);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFamily {
    members: Vec<(FamilyKey, Graph)>,
}

impl GraphFamily {
    pub fn new() -> Self {
        GraphFamily::default()
    }

    pub fn from_graphs<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Self> {
        let mut fam = GraphFamily::new();
        for g in graphs {
            fam.insert(g)?;
        }
        Ok(fam)
    }

    /// Insert the isomorphism class of `g`; returns false if already present.
    pub fn insert(&mut self, g: &Graph) -> Result<bool> {
        let canon = canonical_form(g)?;
        Ok(self.insert_canonical(canon))
    }

    /// Insert a graph that is already in canonical form.
    pub(crate) fn insert_canonical(&mut self, canon: Graph) -> bool {
        let key = (canon.n(), canon.edge_count(), graph6::encode(&canon));
        match self.members.binary_search_by(|(k, _)| k.cmp(&key)) {
            Ok(_) => false,
            Err(idx) => {
                self.members.insert(idx, (key, canon));
                true
            }
        }
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        let canon = canonical_form(g)?;
        let key = (canon.n(), canon.edge_count(), graph6::encode(&canon));
        Ok(self.members.binary_search_by(|(k, _)| k.cmp(&key)).is_ok())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|(_, g)| g)
    }

    /// Canonical graph6 strings in iteration order.
    pub fn graph6_strings(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|((_, _, g6), _)| String::from_utf8(g6.clone()).expect("graph6 is ASCII"))
            .collect()
    }

    /// Members minus every class isomorphic to a member of `other`.
    pub fn without(&self, other: &GraphFamily) -> GraphFamily {
        GraphFamily {
            members: self
                .members
                .iter()
                .filter(|(key, _)| {
                    other
                        .members
                        .binary_search_by(|(k, _)| k.cmp(key))
                        .is_err()
                })
                .cloned()
                .collect(),
        }
    }
}

impl<'a> IntoIterator for &'a GraphFamily {
    type Item = &'a Graph;
    type IntoIter = std::vec::IntoIter<&'a Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter().collect::<Vec<_>>().into_iter()
    }
}

/// All graphs on exactly `n` vertices up to isomorphism (canonical forms in
/// family order), built by one-vertex extensions and cached per `n`.
///
/// Counts grow as 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 1..=8, so this is
/// meant for n <= 8 plus change.
pub fn all_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Ok(found.clone());
    }
    let level: Arc<Vec<Graph>> = if n == 0 {
        Arc::new(vec![Graph::new(0)?])
    } else {
        let parents = all_graphs(n - 1)?;
        let mut fam = GraphFamily::new();
        for parent in parents.iter() {
            for mask in 0u64..(1 << (n - 1)) {
                let mut child = Graph::new(n)?;
                for (u, v) in parent.edges() {
                    child.add_edge(u, v)?;
                }
                for v in 0..(n - 1) {
                    if mask >> v & 1 == 1 {
                        child.add_edge(v, n - 1)?;
                    }
                }
                fam.insert(&child)?;
            }
        }
        Arc::new(fam.iter().cloned().collect())
    };
    cache.lock().unwrap().insert(n, level.clone());
    Ok(level)
}
