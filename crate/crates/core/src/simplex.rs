//! Dense two-phase simplex over exact rationals, Bland's rule for
//! anti-cycling. No floating point anywhere: optima come out as exact
//! fractions, which the fractional-coloring equalities in this crate depend
//! on.

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `minimize . x` subject to `row . x (<=|>=|=) rhs` and `x >= 0`.
pub struct LinearProgram {
    pub minimize: Vec<Rational>,
    pub constraints: Vec<(Vec<Rational>, Relation, Rational)>,
}

pub struct LpSolution {
    pub objective: Rational,
    pub variables: Vec<Rational>,
}

struct Tableau {
    cols: usize,
    rows: Vec<Vec<Rational>>, // each row: cols coefficients then rhs
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize, zrow: &mut [Rational]) {
        let factor = self.rows[row][col].clone();
        for entry in self.rows[row].iter_mut() {
            *entry = &*entry / &factor;
        }
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let scale = self.rows[r][col].clone();
            if scale.is_zero() {
                continue;
            }
            for c in 0..=self.cols {
                let delta = &self.rows[row][c] * &scale;
                self.rows[r][c] = &self.rows[r][c] - &delta;
            }
        }
        let scale = zrow[col].clone();
        if !scale.is_zero() {
            for c in 0..=self.cols {
                let delta = &self.rows[row][c] * &scale;
                zrow[c] = &zrow[c] - &delta;
            }
        }
        self.basis[row] = col;
    }

    /// Reduced-cost row for the given costs: `z_j = c_j - c_B B^-1 A_j`,
    /// with the negated objective value in the rhs slot.
    fn cost_row(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut zrow = vec![Rational::zero(); self.cols + 1];
        zrow[..self.cols].clone_from_slice(costs);
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = costs[b].clone();
            if cb.is_zero() {
                continue;
            }
            for c in 0..=self.cols {
                let delta = &self.rows[r][c] * &cb;
                zrow[c] = &zrow[c] - &delta;
            }
        }
        zrow
    }

    /// Bland: entering = lowest-index negative reduced cost; leaving = min
    /// ratio, ties by lowest basis variable index. Returns false at optimum.
    fn bland_step(&mut self, zrow: &mut [Rational], banned_from: usize) -> Result<bool> {
        let enter = (0..banned_from.min(self.cols)).find(|&c| zrow[c] < Rational::zero());
        let Some(enter) = enter else {
            return Ok(false);
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for r in 0..self.rows.len() {
            if self.rows[r][enter] > Rational::zero() {
                let ratio = &self.rows[r][self.cols] / &self.rows[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && self.basis[r] < self.basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            return Err(Error::LpUnbounded);
        };
        self.pivot(leave, enter, zrow);
        Ok(true)
    }
}

pub fn solve(lp: &LinearProgram) -> Result<LpSolution> {
    let nvars = lp.minimize.len();
    let m = lp.constraints.len();
    if m == 0 {
        // with x >= 0 and no constraints, 0 is optimal unless some cost is
        // negative, which our callers never produce unboundedly
        if lp.minimize.iter().any(|c| *c < Rational::zero()) {
            return Err(Error::LpUnbounded);
        }
        return Ok(LpSolution {
            objective: Rational::zero(),
            variables: vec![Rational::zero(); nvars],
        });
    }

    // layout: structural vars, slack/surplus vars, artificial vars, rhs
    let nslack = m;
    let cols = nvars + nslack + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = vec![usize::MAX; m];
    for (r, (coeffs, rel, rhs)) in lp.constraints.iter().enumerate() {
        assert_eq!(coeffs.len(), nvars, "constraint width mismatch");
        let mut row = vec![Rational::zero(); cols + 1];
        let flip = *rhs < Rational::zero();
        for (c, a) in coeffs.iter().enumerate() {
            row[c] = if flip { -a.clone() } else { a.clone() };
        }
        row[cols] = if flip { -rhs.clone() } else { rhs.clone() };
        let rel = match (rel, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (other, _) => *other,
        };
        match rel {
            Relation::Le => {
                row[nvars + r] = Rational::one();
                basis[r] = nvars + r;
            }
            Relation::Ge => {
                row[nvars + r] = -Rational::one();
            }
            Relation::Eq => {}
        }
        if basis[r] == usize::MAX {
            row[nvars + nslack + r] = Rational::one();
            basis[r] = nvars + nslack + r;
        }
        rows.push(row);
    }
    let mut tab = Tableau { cols, rows, basis };

    // phase 1: minimize the artificial sum
    let needs_phase1 = tab.basis.iter().any(|&b| b >= nvars + nslack);
    if needs_phase1 {
        let mut costs = vec![Rational::zero(); cols];
        for cost in costs[nvars + nslack..].iter_mut() {
            *cost = Rational::one();
        }
        let mut zrow = tab.cost_row(&costs);
        while tab.bland_step(&mut zrow, cols)? {}
        let phase1_obj = -zrow[cols].clone();
        if !phase1_obj.is_zero() {
            return Err(Error::LpInfeasible);
        }
        // drive leftover artificials out of the basis, dropping redundant rows
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= nvars + nslack {
                if let Some(c) = (0..nvars + nslack).find(|&c| !tab.rows[r][c].is_zero()) {
                    let mut dummy = vec![Rational::zero(); cols + 1];
                    tab.pivot(r, c, &mut dummy);
                } else {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
            r += 1;
        }
    }

    // phase 2: original objective, artificial columns banned
    let mut costs = vec![Rational::zero(); cols];
    costs[..nvars].clone_from_slice(&lp.minimize);
    let mut zrow = tab.cost_row(&costs);
    while tab.bland_step(&mut zrow, nvars + nslack)? {}

    let mut variables = vec![Rational::zero(); nvars];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < nvars {
            variables[b] = tab.rows[r][tab.cols].clone();
        }
    }
    Ok(LpSolution {
        objective: -zrow[tab.cols].clone(),
        variables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, One};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_min_problem() {
        // min x + y st x + 2y >= 3, 2x + y >= 3  -> x = y = 1, obj 2
        let lp = LinearProgram {
            minimize: vec![rat(1, 1), rat(1, 1)],
            constraints: vec![
                (vec![rat(1, 1), rat(2, 1)], Relation::Ge, rat(3, 1)),
                (vec![rat(2, 1), rat(1, 1)], Relation::Ge, rat(3, 1)),
            ],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.objective, rat(2, 1));
        assert_eq!(sol.variables, vec![Rational::one(), Rational::one()]);
    }

    #[test]
    fn max_as_negated_min() {
        // max x + y st x <= 2, y <= 3, x + y <= 4 -> 4
        let lp = LinearProgram {
            minimize: vec![rat(-1, 1), rat(-1, 1)],
            constraints: vec![
                (vec![rat(1, 1), rat(0, 1)], Relation::Le, rat(2, 1)),
                (vec![rat(0, 1), rat(1, 1)], Relation::Le, rat(3, 1)),
                (vec![rat(1, 1), rat(1, 1)], Relation::Le, rat(4, 1)),
            ],
        };
        assert_eq!(solve(&lp).unwrap().objective, rat(-4, 1));
    }

    #[test]
    fn fractional_optimum_stays_exact() {
        // min x + y st 2x + y >= 1, x + 2y >= 1 -> x = y = 1/3, obj 2/3
        let lp = LinearProgram {
            minimize: vec![rat(1, 1), rat(1, 1)],
            constraints: vec![
                (vec![rat(2, 1), rat(1, 1)], Relation::Ge, rat(1, 1)),
                (vec![rat(1, 1), rat(2, 1)], Relation::Ge, rat(1, 1)),
            ],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.objective, rat(2, 3));
        assert_eq!(sol.variables, vec![rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let infeasible = LinearProgram {
            minimize: vec![rat(1, 1)],
            constraints: vec![
                (vec![rat(1, 1)], Relation::Le, rat(1, 1)),
                (vec![rat(1, 1)], Relation::Ge, rat(2, 1)),
            ],
        };
        assert!(matches!(solve(&infeasible), Err(Error::LpInfeasible)));

        let unbounded = LinearProgram {
            minimize: vec![rat(-1, 1)],
            constraints: vec![(vec![rat(-1, 1)], Relation::Le, rat(0, 1))],
        };
        assert!(matches!(solve(&unbounded), Err(Error::LpUnbounded)));
    }

    #[test]
    fn equality_constraints() {
        // min 2x + 3y st x + y = 5, x - y = 1 -> x = 3, y = 2, obj 12
        let lp = LinearProgram {
            minimize: vec![rat(2, 1), rat(3, 1)],
            constraints: vec![
                (vec![rat(1, 1), rat(1, 1)], Relation::Eq, rat(5, 1)),
                (vec![rat(1, 1), rat(-1, 1)], Relation::Eq, rat(1, 1)),
            ],
        };
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.objective, rat(12, 1));
        assert_eq!(sol.variables, vec![rat(3, 1), rat(2, 1)]);
    }

    #[test]
    fn negative_rhs_normalizes() {
        // min x st -x <= -2  (i.e. x >= 2)
        let lp = LinearProgram {
            minimize: vec![rat(1, 1)],
            constraints: vec![(vec![rat(-1, 1)], Relation::Le, rat(-2, 1))],
        };
        assert_eq!(solve(&lp).unwrap().objective, rat(2, 1));
    }
}
