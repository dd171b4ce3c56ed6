//! Iterated tensor products over the family of graphs on a bounded vertex
//! universe whose fractional chromatic number exceeds a threshold, and the
//! clique joins built on top of them.

use crate::error::{Error, Result};
use crate::family::{all_graphs, GraphFamily};
use crate::fractional::{fractional_chromatic_number, rational_int};
use crate::graph::Graph;

/// Parameters of the product: target chromatic level, vertex-universe size,
/// and whether the factor family is reduced to one representative per
/// isomorphism class with isolated vertices stripped.
#[derive(Clone, Copy, Debug)]
pub struct ZhuSpec {
    pub level: usize,
    pub universe: usize,
    pub reduced: bool,
}

impl ZhuSpec {
    pub fn new(level: usize, universe: usize, reduced: bool) -> Result<Self> {
        if level < 2 || level > universe {
            return Err(Error::Unsupported(format!(
                "need 2 <= level <= universe, got level {level}, universe {universe}"
            )));
        }
        Ok(ZhuSpec {
            level,
            universe,
            reduced,
        })
    }
}

const REDUCED_UNIVERSE_LIMIT: usize = 5;

/// The factor list in product order.
///
/// Reduced: one canonical representative per isomorphism class of graphs on
/// at most `universe` vertices without isolated vertices, fractional
/// chromatic number strictly above `level - 1`, in family order. The full
/// labeled family explodes (17496 product vertices already at level 2,
/// universe 3), and dropping duplicate labelings and isolated vertices
/// preserves the product's homomorphic equivalence class, so reduced is the
/// default; the labeled family stays available where it is singleton anyway.
fn zhu_factors(spec: &ZhuSpec) -> Result<Vec<Graph>> {
    if spec.reduced {
        if spec.universe > REDUCED_UNIVERSE_LIMIT {
            return Err(Error::SizeLimit {
                op: "zhu_family",
                n: spec.universe,
                limit: REDUCED_UNIVERSE_LIMIT,
            });
        }
        let threshold = rational_int(spec.level - 1);
        let mut fam = GraphFamily::new();
        for k in 1..=spec.universe {
            for g in all_graphs(k)?.iter() {
                let isolate_free = (0..g.n()).all(|v| g.degree(v) > 0);
                if isolate_free && fractional_chromatic_number(g)? > threshold {
                    fam.insert(g)?;
                }
            }
        }
        Ok(fam.iter().cloned().collect())
    } else {
        // the unreduced labeled family is materialized only where the
        // product stays within capacity
        if !matches!((spec.level, spec.universe), (2, 2) | (3, 3)) {
            return Err(Error::BudgetExceeded {
                op: "zhu_family",
                detail: format!(
                    "unreduced family for level {} universe {} exceeds the capacity budget",
                    spec.level, spec.universe
                ),
            });
        }
        let threshold = rational_int(spec.level - 1);
        let n = spec.universe;
        let mut out = Vec::new();
        for subset in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
            let k = verts.len();
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|a| ((a + 1)..k).map(move |b| (a, b)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(k, &edges)?;
                if fractional_chromatic_number(&g)? > threshold {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }
}

/// The factor family as a set up to isomorphism.
pub fn zhu_family(spec: &ZhuSpec) -> Result<GraphFamily> {
    GraphFamily::from_graphs(&zhu_factors(spec)?)
}

/// The iterated tensor product over the factor family, folded in the
/// family's canonical iteration order; a singleton family returns its member.
pub fn zhu_graph(spec: &ZhuSpec) -> Result<Graph> {
    let factors = zhu_factors(spec)?;
    let mut iter = factors.into_iter();
    let first = iter
        .next()
        .expect("level <= universe keeps the clique in the family");
    iter.try_fold(first, |acc, g| acc.tensor_product(&g))
}

/// The join `K_{k-i} v Z_{i,n}`; for `i = k` this is the bare product.
pub fn bel_join(k: usize, i: usize, spec: &ZhuSpec) -> Result<Graph> {
    if i < 1 || i > k {
        return Err(Error::Unsupported(format!("need 1 <= i <= k, got i {i}, k {k}")));
    }
    if spec.level != i {
        return Err(Error::Unsupported(format!(
            "join level {i} disagrees with product level {}",
            spec.level
        )));
    }
    Graph::complete(k - i)?.join(&zhu_graph(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::Rational;
    use crate::homo::has_homomorphism;
    use crate::invariants::chromatic_number;

    #[test]
    fn smallest_families() {
        let fam = zhu_family(&ZhuSpec::new(2, 2, true).unwrap()).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.contains(&Graph::complete(2).unwrap()).unwrap());

        // only the triangle beats fractional chromatic number 2 on 3 vertices
        let fam = zhu_family(&ZhuSpec::new(3, 3, true).unwrap()).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.contains(&Graph::complete(3).unwrap()).unwrap());

        let fam = zhu_family(&ZhuSpec::new(2, 3, true).unwrap()).unwrap();
        assert_eq!(fam.len(), 3);
        assert!(fam.contains(&Graph::complete(2).unwrap()).unwrap());
        assert!(fam.contains(&Graph::path(3).unwrap()).unwrap());
        assert!(fam.contains(&Graph::complete(3).unwrap()).unwrap());
    }

    #[test]
    fn unreduced_where_available() {
        let fam = zhu_family(&ZhuSpec::new(2, 2, false).unwrap()).unwrap();
        assert_eq!(fam.len(), 1);
        let fam = zhu_family(&ZhuSpec::new(3, 3, false).unwrap()).unwrap();
        assert!(fam.contains(&Graph::complete(3).unwrap()).unwrap());
        assert!(zhu_family(&ZhuSpec::new(2, 3, false).unwrap()).is_err());
    }

    #[test]
    fn products() {
        assert_eq!(
            zhu_graph(&ZhuSpec::new(2, 2, true).unwrap()).unwrap(),
            Graph::complete(2).unwrap()
        );
        assert_eq!(
            zhu_graph(&ZhuSpec::new(3, 3, true).unwrap()).unwrap(),
            Graph::complete(3).unwrap()
        );
        let z23 = zhu_graph(&ZhuSpec::new(2, 3, true).unwrap()).unwrap();
        assert_eq!(z23.n(), 2 * 3 * 3);
        assert_eq!(chromatic_number(&z23).unwrap(), 2);
        let chi_f = crate::fractional::fractional_chromatic_number(&z23).unwrap();
        assert!(chi_f > rational_int(1));
        assert_eq!(chi_f, Rational::from_integer(2.into()));
    }

    #[test]
    fn product_projection_gives_homomorphism_to_next_level() {
        // the level-3 product is a homomorphic image of the level-2 product
        let z23 = zhu_graph(&ZhuSpec::new(2, 3, true).unwrap()).unwrap();
        let z33 = zhu_graph(&ZhuSpec::new(3, 3, true).unwrap()).unwrap();
        assert!(has_homomorphism(&z23, &z33).unwrap());
        // and not the other way: a triangle cannot map into a bipartite graph
        assert!(!has_homomorphism(&z33, &z23).unwrap());
    }

    #[test]
    fn chromatic_level_is_attained() {
        for (level, universe) in [(2usize, 2usize), (2, 3), (3, 3)] {
            let z = zhu_graph(&ZhuSpec::new(level, universe, true).unwrap()).unwrap();
            assert_eq!(chromatic_number(&z).unwrap(), level, "({level},{universe})");
            let chi_f = crate::fractional::fractional_chromatic_number(&z).unwrap();
            assert!(chi_f > rational_int(level - 1), "({level},{universe})");
        }
    }

    #[test]
    fn ramsey_value_grows_with_the_level() {
        use crate::ramsey::chromatic_ramsey_small;
        let z22 = zhu_graph(&ZhuSpec::new(2, 2, true).unwrap()).unwrap();
        let z33 = zhu_graph(&ZhuSpec::new(3, 3, true).unwrap()).unwrap();
        let low = chromatic_ramsey_small(&z22, 8).unwrap().value;
        let high = chromatic_ramsey_small(&z33, 8).unwrap().value;
        assert_eq!(low, 2); // the lower bound (level-1)^2 + 1
        assert!(high >= low);
    }

    #[test]
    fn triangle_product_maps_both_ways_with_the_clique() {
        let z33 = zhu_graph(&ZhuSpec::new(3, 3, true).unwrap()).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(has_homomorphism(&z33, &k3).unwrap());
        assert!(has_homomorphism(&k3, &z33).unwrap());
    }

    #[test]
    fn joins() {
        let spec = ZhuSpec::new(2, 2, true).unwrap();
        assert_eq!(
            bel_join(3, 2, &spec).unwrap(),
            Graph::complete(1).unwrap().join(&Graph::complete(2).unwrap()).unwrap()
        );
        assert_eq!(bel_join(2, 2, &spec).unwrap(), Graph::complete(2).unwrap());

        let spec3 = ZhuSpec::new(2, 3, true).unwrap();
        assert_eq!(chromatic_number(&bel_join(3, 2, &spec3).unwrap()).unwrap(), 3);

        assert!(bel_join(3, 1, &spec).is_err()); // level mismatch
        assert!(bel_join(2, 3, &spec).is_err()); // i > k
    }
}
