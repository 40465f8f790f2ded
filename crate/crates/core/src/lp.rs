//! Two-phase dense tableau simplex with Bland's rule.
//!
//! Generic over [`Field`]; with an exact field every pivot is exact and
//! Bland's smallest-index rule guarantees termination on degenerate
//! problems, so feasibility answers are certificates rather than estimates.

use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    Equal,
    GreaterEq,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { point: Vec<T>, value: T },
    Infeasible,
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

#[derive(Clone, Debug)]
struct Constraint<T> {
    coeffs: Vec<T>,
    relation: Relation,
    rhs: T,
}

/// `maximize c·x` subject to linear constraints. Variables are nonnegative
/// unless marked free.
#[derive(Clone, Debug)]
pub struct LinearProgram<T> {
    num_vars: usize,
    free: Vec<bool>,
    constraints: Vec<Constraint<T>>,
    objective: Vec<T>,
}

impl<T: Field> LinearProgram<T> {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            constraints: Vec::new(),
            objective: vec![T::zero(); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<T>, relation: Relation, rhs: T) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "constraint arity");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn maximize(&mut self, objective: Vec<T>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars, "objective arity");
        self.objective = objective;
        self
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_feasible()
    }

    pub fn solve(&self) -> LpOutcome<T> {
        // Column layout: split variables, then one slack per inequality,
        // then one artificial per row.
        let mut split: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
        let mut next = 0;
        for &free in &self.free {
            let pos = next;
            next += 1;
            let neg = if free {
                next += 1;
                Some(next - 1)
            } else {
                None
            };
            split.push((pos, neg));
        }
        let structural = next;
        let num_slacks = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Equal)
            .count();
        let m = self.constraints.len();
        let first_artificial = structural + num_slacks;
        let width = first_artificial + m;

        let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
        let mut slack = structural;
        for (i, c) in self.constraints.iter().enumerate() {
            let mut row = vec![T::zero(); width + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                let (pos, neg) = split[j];
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a.clone();
                }
            }
            match c.relation {
                Relation::LessEq => {
                    row[slack] = T::one();
                    slack += 1;
                }
                Relation::GreaterEq => {
                    row[slack] = -T::one();
                    slack += 1;
                }
                Relation::Equal => {}
            }
            row[width] = c.rhs.clone();
            if c.rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row[first_artificial + i] = T::one();
            tab.push(row);
        }
        let mut basis: Vec<usize> = (first_artificial..width).collect();

        // Phase 1: maximize −Σ artificials.
        let mut phase1 = vec![T::zero(); width];
        for a in phase1.iter_mut().skip(first_artificial) {
            *a = -T::one();
        }
        let mut tableau = Tableau {
            rows: tab,
            basis: &mut basis,
            width,
        };
        let status = tableau.optimize(&phase1, width);
        debug_assert!(status.is_ok(), "phase 1 is bounded");
        let infeasibility = tableau.objective_value(&phase1);
        if !infeasibility.is_zero() {
            return LpOutcome::Infeasible;
        }
        tableau.drive_out_artificials(first_artificial);

        // Phase 2 over the structural and slack columns only.
        let mut phase2 = vec![T::zero(); width];
        for (j, c) in self.objective.iter().enumerate() {
            let (pos, neg) = split[j];
            phase2[pos] = c.clone();
            if let Some(neg) = neg {
                phase2[neg] = -c.clone();
            }
        }
        if tableau.optimize(&phase2, first_artificial).is_err() {
            return LpOutcome::Unbounded;
        }
        let value = tableau.objective_value(&phase2);
        let mut raw = vec![T::zero(); width];
        for (r, &b) in tableau.basis.iter().enumerate() {
            raw[b] = tableau.rows[r][width].clone();
        }
        let point = split
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => raw[pos].clone() - raw[neg].clone(),
                None => raw[pos].clone(),
            })
            .collect();
        LpOutcome::Optimal { point, value }
    }
}

struct Unbounded;

struct Tableau<'a, T> {
    rows: Vec<Vec<T>>,
    basis: &'a mut Vec<usize>,
    width: usize,
}

impl<T: Field> Tableau<'_, T> {
    fn objective_value(&self, cost: &[T]) -> T {
        self.basis
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (r, &b)| {
                acc + cost[b].clone() * self.rows[r][self.width].clone()
            })
    }

    /// Reduced cost `c_j − c_B B⁻¹ A_j` of column `j`.
    fn reduced_cost(&self, cost: &[T], j: usize) -> T {
        self.basis
            .iter()
            .enumerate()
            .fold(cost[j].clone(), |acc, (r, &b)| {
                acc - cost[b].clone() * self.rows[r][j].clone()
            })
    }

    /// Maximizes `cost` using only columns `< allowed` as entering columns.
    fn optimize(&mut self, cost: &[T], allowed: usize) -> Result<(), Unbounded> {
        loop {
            // Bland: lowest-index improving column.
            let Some(enter) = (0..allowed)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j).is_positive())
            else {
                return Ok(());
            };
            // Ratio test; ties broken by lowest basic variable index.
            let mut leave: Option<(usize, T)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rows[r][self.width].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(r, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = T::one() / self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a feasible phase 1, every artificial still in the basis sits at
    /// level zero. Pivot each out on any nonzero non-artificial entry; a row
    /// with none is redundant and its artificial stays at zero.
    fn drive_out_artificials(&mut self, first_artificial: usize) {
        for r in 0..self.rows.len() {
            if self.basis[r] < first_artificial {
                continue;
            }
            if let Some(c) = (0..first_artificial)
                .find(|&c| !self.rows[r][c].is_zero() && !self.basis.contains(&c))
            {
                self.pivot(r, c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;
    use crate::linalg;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qi(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    /// Oracle: enumerate every vertex of `{x ≥ 0, A x ≤ b}` by solving each
    /// choice of `n` tight constraints, and keep the best feasible one.
    fn brute_force_max(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<Rational> {
        let n = c.len();
        let mut all: Vec<(Vec<Rational>, Rational)> = a.iter().cloned().zip(b.iter().cloned()).collect();
        for j in 0..n {
            let mut e = vec![q(0, 1); n];
            e[j] = q(-1, 1);
            all.push((e, q(0, 1)));
        }
        let mut best: Option<Rational> = None;
        for tight in (0..all.len()).combinations(n) {
            let mut aug: Vec<Vec<Rational>> = tight
                .iter()
                .map(|&i| {
                    let mut row = all[i].0.clone();
                    row.push(all[i].1.clone());
                    row
                })
                .collect();
            let pivots = linalg::rref(&mut aug);
            if pivots.len() != n || pivots.contains(&n) {
                continue;
            }
            let x: Vec<Rational> = (0..n).map(|j| aug[j][n].clone()).collect();
            let feasible = all.iter().all(|(row, rhs)| {
                row.iter().zip(&x).fold(q(0, 1), |acc, (p, v)| acc + p * v) <= *rhs
            });
            if feasible {
                let val = c.iter().zip(&x).fold(q(0, 1), |acc, (p, v)| acc + p * v);
                if best.as_ref().is_none_or(|b| val > *b) {
                    best = Some(val);
                }
            }
        }
        best
    }

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → 36 at (2, 6).
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(qi(&[1, 0]), Relation::LessEq, q(4, 1))
            .add_constraint(qi(&[0, 2]), Relation::LessEq, q(12, 1))
            .add_constraint(qi(&[3, 2]), Relation::LessEq, q(18, 1))
            .maximize(qi(&[3, 5]));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                point: qi(&[2, 6]),
                value: q(36, 1)
            }
        );
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // Cycles under the largest-coefficient rule; Bland must terminate.
        let a = vec![
            vec![q(1, 4), q(-8, 1), q(-1, 1), q(9, 1)],
            vec![q(1, 2), q(-12, 1), q(-1, 2), q(3, 1)],
            vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)],
        ];
        let b = vec![q(0, 1), q(0, 1), q(1, 1)];
        let c = vec![q(3, 4), q(-20, 1), q(1, 2), q(-6, 1)];
        let expected = brute_force_max(&a, &b, &c).unwrap();
        assert_eq!(expected, q(5, 4));
        let mut lp = LinearProgram::new(4);
        for (row, rhs) in a.iter().zip(&b) {
            lp.add_constraint(row.clone(), Relation::LessEq, rhs.clone());
        }
        lp.maximize(c);
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, expected),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::<Rational>::new(1);
        lp.add_constraint(qi(&[1]), Relation::GreaterEq, q(2, 1))
            .add_constraint(qi(&[1]), Relation::LessEq, q(1, 1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::<Rational>::new(2);
        lp.add_constraint(qi(&[1, -1]), Relation::LessEq, q(1, 1))
            .maximize(qi(&[1, 0]));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // x free, x + y = -3, y ≥ 0, maximize −y → x = −3, y = 0.
        let mut lp = LinearProgram::new(2);
        lp.set_free(0)
            .add_constraint(qi(&[1, 1]), Relation::Equal, q(-3, 1))
            .maximize(qi(&[0, -1]));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                point: qi(&[-3, 0]),
                value: q(0, 1)
            }
        );
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(qi(&[1, 1]), Relation::Equal, q(1, 1))
            .add_constraint(qi(&[2, 2]), Relation::Equal, q(2, 1))
            .maximize(qi(&[1, 2]));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                point: qi(&[0, 1]),
                value: q(2, 1)
            }
        );
    }

    #[test]
    fn random_small_lps_match_vertex_enumeration() {
        use proptest::prelude::*;
        use proptest::test_runner::TestRunner;
        let mut runner = TestRunner::new(ProptestConfig::with_cases(64));
        let strat = (
            prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..4),
            prop::collection::vec(0i64..=5, 3),
            prop::collection::vec(-3i64..=3, 3),
        );
        runner
            .run(&strat, |(rows, rhs, obj)| {
                let m = rows.len();
                let a: Vec<Vec<Rational>> = rows.iter().map(|r| qi(r)).collect();
                // Box the region so the oracle sees a bounded polytope.
                let mut a_box = a.clone();
                let mut b_box: Vec<Rational> = qi(&rhs[..m]);
                for j in 0..3 {
                    let mut e = vec![q(0, 1); 3];
                    e[j] = q(1, 1);
                    a_box.push(e);
                    b_box.push(q(4, 1));
                }
                let c = qi(&obj);
                let oracle = brute_force_max(&a_box, &b_box, &c);
                let mut lp = LinearProgram::new(3);
                for (row, b) in a_box.iter().zip(&b_box) {
                    lp.add_constraint(row.clone(), Relation::LessEq, b.clone());
                }
                lp.maximize(c);
                match (lp.solve(), oracle) {
                    (LpOutcome::Optimal { value, .. }, Some(best)) => prop_assert_eq!(value, best),
                    (other, best) => prop_assert!(false, "lp {:?} vs oracle {:?}", other, best),
                }
                Ok(())
            })
            .unwrap();
    }
}
