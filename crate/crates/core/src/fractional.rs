//! Exact fractional chromatic number via the independent-set covering LP,
//! with the fractional clique (dual) program available as an independent
//! cross-check.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplex::{self, LinearProgram, Relation};

pub type Rational = BigRational;

/// Fractional invariants share the 30-vertex guard with the other NP-hard
/// computations; the set count is additionally capped to bound LP size.
const FRACTIONAL_LIMIT: usize = 30;
const MAX_SETS: usize = 200_000;

fn check(op: &'static str, n: usize) -> Result<()> {
    if n > FRACTIONAL_LIMIT {
        return Err(Error::SizeLimit {
            op,
            n,
            limit: FRACTIONAL_LIMIT,
        });
    }
    Ok(())
}

/// All inclusion-maximal independent sets as bitmasks, ascending. These are
/// the maximal cliques of the complement, enumerated with pivoting.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<u64>> {
    check("maximal_independent_sets", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let comp = g.complement();
    let rows: Vec<u64> = (0..n).map(|v| comp.row64(v)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(&rows, 0, full, 0, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn bron_kerbosch(rows: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) -> Result<()> {
    if p == 0 && x == 0 {
        if out.len() >= MAX_SETS {
            return Err(Error::BudgetExceeded {
                op: "maximal_independent_sets",
                detail: format!("more than {MAX_SETS} maximal sets"),
            });
        }
        out.push(r);
        return Ok(());
    }
    // pivot: vertex of p|x covering the most of p, ties by lowest index
    let mut pivot = usize::MAX;
    let mut covered = 0;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let c = (p & rows[u]).count_ones();
        if pivot == usize::MAX || c > covered {
            pivot = u;
            covered = c;
        }
    }
    let mut cand = p & !rows[pivot];
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        bron_kerbosch(rows, r | bit, p & rows[v], x & rows[v], out)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

/// Exact fractional chromatic number: minimize the total weight of maximal
/// independent sets so every vertex receives weight at least one. Zero for
/// the null graph by convention.
pub fn fractional_chromatic_number(g: &Graph) -> Result<Rational> {
    check("fractional_chromatic_number", g.n())?;
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    let sets = maximal_independent_sets(g)?;
    let lp = covering_lp(g.n(), &sets);
    Ok(simplex::solve(&lp)?.objective)
}

/// The dual program solved on its own: maximize total vertex weight subject
/// to every maximal independent set carrying weight at most one. By LP
/// duality this equals the fractional chromatic number; the acceptance suite
/// checks the equality exactly.
pub fn fractional_clique_number(g: &Graph) -> Result<Rational> {
    check("fractional_clique_number", g.n())?;
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    let sets = maximal_independent_sets(g)?;
    let minus_one = -Rational::one();
    let lp = LinearProgram {
        minimize: vec![minus_one; g.n()],
        constraints: sets
            .iter()
            .map(|&set| {
                let row: Vec<Rational> = (0..g.n())
                    .map(|v| {
                        if set >> v & 1 == 1 {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                (row, Relation::Le, Rational::one())
            })
            .collect(),
    };
    Ok(-simplex::solve(&lp)?.objective)
}

/// The covering program over an explicit list of independent sets. Public so
/// callers (and tests) can run it over non-maximal set collections too.
pub fn covering_lp(n: usize, sets: &[u64]) -> LinearProgram {
    LinearProgram {
        minimize: vec![Rational::one(); sets.len()],
        constraints: (0..n)
            .map(|v| {
                let row: Vec<Rational> = sets
                    .iter()
                    .map(|&set| {
                        if set >> v & 1 == 1 {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                (row, Relation::Ge, Rational::one())
            })
            .collect(),
    }
}

pub fn rational_int(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chromatic_number, independence_number};
    use num::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn maximal_sets_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(maximal_independent_sets(&k3).unwrap(), vec![0b001, 0b010, 0b100]);

        let edgeless = Graph::new(3).unwrap();
        assert_eq!(maximal_independent_sets(&edgeless).unwrap(), vec![0b111]);

        // C_5: exactly the five non-adjacent pairs
        let c5 = Graph::cycle(5).unwrap();
        let sets = maximal_independent_sets(&c5).unwrap();
        assert_eq!(sets.len(), 5);
        let oracle = all_maximal_sets(&c5);
        assert_eq!(sets, oracle);
    }

    /// Subset-enumeration oracle for maximal independent sets.
    fn all_maximal_sets(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let independent = |mask: u64| {
            g.edges()
                .iter()
                .all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
        };
        let mut out = Vec::new();
        for mask in 0..(1u64 << n) {
            if !independent(mask) {
                continue;
            }
            let maximal = (0..n)
                .all(|v| mask >> v & 1 == 1 || !independent(mask | 1 << v));
            if maximal {
                out.push(mask);
            }
        }
        out
    }

    #[test]
    fn maximal_sets_match_oracle_on_random_graphs() {
        use rand::rngs::SmallRng;
        use rand::{Rng, SeedableRng};
        let mut rng = SmallRng::seed_from_u64(0x6b5);
        for _ in 0..200 {
            let n = rng.random_range(1..=9);
            let mut g = Graph::new(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(maximal_independent_sets(&g).unwrap(), all_maximal_sets(&g));
        }
    }

    #[test]
    fn chi_f_of_cliques_and_cycles() {
        for n in 1..=8usize {
            assert_eq!(
                fractional_chromatic_number(&Graph::complete(n).unwrap()).unwrap(),
                rational_int(n)
            );
        }
        assert_eq!(
            fractional_chromatic_number(&Graph::cycle(5).unwrap()).unwrap(),
            rat(5, 2)
        );
        assert_eq!(
            fractional_chromatic_number(&Graph::new(4).unwrap()).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            fractional_chromatic_number(&Graph::new(0).unwrap()).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn sandwich_and_duality_small() {
        for n in 1..=6usize {
            for g in crate::family::all_graphs(n).unwrap().iter() {
                let chi_f = fractional_chromatic_number(g).unwrap();
                let lower = rational_int(g.n()) / rational_int(independence_number(g).unwrap());
                let upper = rational_int(chromatic_number(g).unwrap());
                assert!(lower <= chi_f && chi_f <= upper, "sandwich fails on {g:?}");
                assert_eq!(chi_f, fractional_clique_number(g).unwrap(), "duality {g:?}");
            }
        }
    }

    #[test]
    fn maximal_sets_suffice_versus_all_sets() {
        use rand::rngs::SmallRng;
        use rand::{Rng, SeedableRng};
        let mut rng = SmallRng::seed_from_u64(0xa11);
        for _ in 0..60 {
            let n = rng.random_range(1..=7);
            let mut g = Graph::new(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.45) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            // every nonempty independent set, not just the maximal ones
            let independent = |mask: u64| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            };
            let all_sets: Vec<u64> = (1..(1u64 << n)).filter(|&m| independent(m)).collect();
            let via_all = simplex::solve(&covering_lp(n, &all_sets)).unwrap().objective;
            assert_eq!(via_all, fractional_chromatic_number(&g).unwrap());
        }
    }
}
