//! Exact linear programming over the rationals.
//!
//! A dense, two-phase tableau simplex with Bland's anticycling rule.
//! Variables are unrestricted in sign; bounds are ordinary constraints. Each
//! variable is split internally into a difference of two nonnegative parts,
//! which is simple and entirely adequate for the problem sizes this crate
//! produces (a few hundred columns). No floats are involved, so "optimal"
//! means optimal, not optimal up to a tolerance.

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Maximization problem over free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpResult {
    pub fn optimal(&self) -> Option<(&Rational, &[Rational])> {
        match self {
            LpResult::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

impl LinearProgram {
    /// A program with a zero objective over `num_vars` free variables.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.num_vars, "objective width");
        self.objective = objective;
    }

    pub fn add_le(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        });
    }

    pub fn add_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point)
    }

    /// Exact feasibility check of a candidate point.
    pub fn check_solution(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, point);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    /// Solves the program. Deterministic: Bland's rule picks the smallest
    /// eligible column and, on ratio ties, the row whose basic variable has
    /// the smallest index, which also guarantees termination.
    pub fn maximize(&self) -> LpResult {
        let one = Rational::one();
        let split = 2 * self.num_vars;

        // Normalize to nonnegative right-hand sides over split variables.
        enum Kind {
            Slack,
            SurplusArtificial,
            Artificial,
        }
        let mut prepared: Vec<(Vec<Rational>, Kind, Rational)> = Vec::new();
        let (mut n_slack, mut n_art) = (0, 0);
        for c in &self.constraints {
            let mut coeffs = Vec::with_capacity(split);
            for a in &c.coeffs {
                coeffs.push(a.clone());
                coeffs.push(-a.clone());
            }
            let mut rhs = c.rhs.clone();
            let negated = rhs < Rational::zero();
            if negated {
                for v in coeffs.iter_mut() {
                    *v = -v.clone();
                }
                rhs = -rhs;
            }
            let kind = match (c.relation, negated) {
                (Relation::Le, false) => Kind::Slack,
                (Relation::Le, true) => Kind::SurplusArtificial,
                (Relation::Eq, _) => Kind::Artificial,
            };
            match kind {
                Kind::Slack => n_slack += 1,
                Kind::SurplusArtificial => {
                    n_slack += 1;
                    n_art += 1;
                }
                Kind::Artificial => n_art += 1,
            }
            prepared.push((coeffs, kind, rhs));
        }

        let ncols = split + n_slack + n_art;
        let mut artificial = vec![false; ncols];
        let mut tableau = Tableau {
            rows: Vec::with_capacity(prepared.len()),
            basis: Vec::with_capacity(prepared.len()),
            ncols,
        };
        let mut next_slack = split;
        let mut next_art = split + n_slack;
        for (coeffs, kind, rhs) in prepared {
            let mut row = vec![Rational::zero(); ncols + 1];
            for (j, v) in coeffs.into_iter().enumerate() {
                row[j] = v;
            }
            row[ncols] = rhs;
            match kind {
                Kind::Slack => {
                    row[next_slack] = one.clone();
                    tableau.basis.push(next_slack);
                    next_slack += 1;
                }
                Kind::SurplusArtificial => {
                    row[next_slack] = -one.clone();
                    next_slack += 1;
                    row[next_art] = one.clone();
                    artificial[next_art] = true;
                    tableau.basis.push(next_art);
                    next_art += 1;
                }
                Kind::Artificial => {
                    row[next_art] = one.clone();
                    artificial[next_art] = true;
                    tableau.basis.push(next_art);
                    next_art += 1;
                }
            }
            tableau.rows.push(row);
        }

        if n_art > 0 {
            // Phase 1: maximize minus the sum of artificials, which is
            // bounded above by zero, so it cannot be unbounded.
            let mut phase1 = vec![Rational::zero(); ncols];
            for j in 0..ncols {
                if artificial[j] {
                    phase1[j] = -one.clone();
                }
            }
            let unbanned = vec![false; ncols];
            let outcome = tableau.run(&phase1, &unbanned);
            assert!(
                matches!(outcome, Outcome::Optimal),
                "phase 1 is bounded above by zero"
            );
            if !tableau.basic_value(&phase1).is_zero() {
                return LpResult::Infeasible;
            }
            tableau.evict_artificials(&artificial);
        }

        let mut phase2 = vec![Rational::zero(); ncols];
        for (i, c) in self.objective.iter().enumerate() {
            phase2[2 * i] = c.clone();
            phase2[2 * i + 1] = -c.clone();
        }
        match tableau.run(&phase2, &artificial) {
            Outcome::Unbounded => LpResult::Unbounded,
            Outcome::Optimal => {
                let mut split_values = vec![Rational::zero(); ncols];
                for (row, &b) in tableau.basis.iter().enumerate() {
                    split_values[b] = tableau.rows[row][ncols].clone();
                }
                let point: Vec<Rational> = (0..self.num_vars)
                    .map(|i| &split_values[2 * i] - &split_values[2 * i + 1])
                    .collect();
                let value = self.objective_value(&point);
                debug_assert!(self.check_solution(&point));
                LpResult::Optimal { value, point }
            }
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product width");
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, v| acc + v)
}

enum Outcome {
    Optimal,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn run(&mut self, obj: &[Rational], banned: &[bool]) -> Outcome {
        loop {
            let Some(enter) = self.entering(obj, banned) else {
                return Outcome::Optimal;
            };
            let Some(leave) = self.leaving(enter) else {
                return Outcome::Unbounded;
            };
            self.pivot(leave, enter);
        }
    }

    /// Bland's rule: the smallest column with positive reduced cost.
    /// Reduced costs are recomputed from scratch; at the sizes this crate
    /// solves, simplicity beats bookkeeping.
    fn entering(&self, obj: &[Rational], banned: &[bool]) -> Option<usize> {
        let zero = Rational::zero();
        let priced: Vec<(usize, &Rational)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| !obj[b].is_zero())
            .map(|(row, &b)| (row, &obj[b]))
            .collect();
        for j in 0..self.ncols {
            if banned[j] {
                continue;
            }
            let mut reduced = obj[j].clone();
            for &(row, cost) in &priced {
                let a = &self.rows[row][j];
                if !a.is_zero() {
                    reduced -= cost * a;
                }
            }
            if reduced > zero {
                return Some(j);
            }
        }
        None
    }

    /// Minimum-ratio row; ties go to the smallest basic variable index.
    fn leaving(&self, enter: usize) -> Option<usize> {
        let zero = Rational::zero();
        let mut best: Option<(Rational, usize, usize)> = None;
        for row in 0..self.rows.len() {
            let a = &self.rows[row][enter];
            if a <= &zero {
                continue;
            }
            let ratio = &self.rows[row][self.ncols] / a;
            let candidate = (ratio, self.basis[row], row);
            best = Some(match best.take() {
                None => candidate,
                Some(current) => {
                    if candidate.0 < current.0
                        || (candidate.0 == current.0 && candidate.1 < current.1)
                    {
                        candidate
                    } else {
                        current
                    }
                }
            });
        }
        best.map(|(_, _, row)| row)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let lead = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v /= &lead;
            }
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (c, v) in other.iter_mut().enumerate() {
                if !pivot_row[c].is_zero() {
                    *v -= &pivot_row[c] * &factor;
                }
            }
        }
        self.basis[row] = col;
    }

    fn basic_value(&self, obj: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| !obj[b].is_zero())
            .map(|(row, &b)| &obj[b] * &self.rows[row][self.ncols])
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    /// After a zero-value phase 1, pivots basic artificials out on any
    /// nonartificial column; rows that offer none are redundant and drop.
    fn evict_artificials(&mut self, artificial: &[bool]) {
        let mut row = 0;
        while row < self.rows.len() {
            if !artificial[self.basis[row]] {
                row += 1;
                continue;
            }
            debug_assert!(self.rows[row][self.ncols].is_zero());
            let target =
                (0..self.ncols).find(|&j| !artificial[j] && !self.rows[row][j].is_zero());
            match target {
                Some(col) => {
                    self.pivot(row, col);
                    row += 1;
                }
                None => {
                    self.rows.remove(row);
                    self.basis.remove(row);
                }
            }
        }
    }
}
