//! Exact rational linear feasibility and optimization kernel.
//!
//! A two-phase primal simplex over `BigRational` with Bland's rule, so every
//! verdict is exact, deterministic, and the method terminates even on
//! degenerate systems. This is a desk-scale kernel: the systems it sees have
//! at most a few dozen variables, so a dense tableau is fine.
//!
//! Variables may carry an optional lower bound; unbounded variables are split
//! into a difference of two nonnegative ones internally.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// A system of exact linear equalities and `<=` inequalities.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub num_vars: usize,
    /// `coeffs . v = rhs`
    pub eq_rows: Vec<(Vec<Rational>, Rational)>,
    /// `coeffs . v <= rhs`
    pub le_rows: Vec<(Vec<Rational>, Rational)>,
    /// `Some(l)` constrains `v_j >= l`; `None` leaves the variable free.
    pub lower_bounds: Vec<Option<Rational>>,
    /// Diagnostic labels, one per variable, unique.
    pub names: Vec<String>,
}

impl LinearSystem {
    /// All-free system with `n` variables named `v0..`.
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            eq_rows: Vec::new(),
            le_rows: Vec::new(),
            lower_bounds: vec![None; num_vars],
            names: (0..num_vars).map(|j| format!("v{j}")).collect(),
        }
    }

    pub fn push_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.eq_rows.push((coeffs, rhs));
    }

    pub fn push_le(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.le_rows.push((coeffs, rhs));
    }

    /// `coeffs . v >= rhs`, stored negated.
    pub fn push_ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push_le(coeffs.into_iter().map(|c| -c).collect(), -rhs);
    }

    fn validate(&self) -> Result<()> {
        if self.lower_bounds.len() != self.num_vars || self.names.len() != self.num_vars {
            return Err(Error::MalformedSystem(format!(
                "bounds/names length must equal num_vars = {}",
                self.num_vars
            )));
        }
        for (coeffs, _) in self.eq_rows.iter().chain(&self.le_rows) {
            if coeffs.len() != self.num_vars {
                return Err(Error::MalformedSystem(format!(
                    "row has {} coefficients, expected {}",
                    coeffs.len(),
                    self.num_vars
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for name in &self.names {
            if !seen.insert(name) {
                return Err(Error::MalformedSystem(format!("duplicate variable label `{name}`")));
            }
        }
        Ok(())
    }

    /// Exact check of a candidate assignment against every row and bound.
    pub fn satisfies(&self, v: &[Rational]) -> bool {
        if v.len() != self.num_vars {
            return false;
        }
        let dot = |coeffs: &[Rational]| -> Rational {
            coeffs.iter().zip(v).map(|(c, x)| c * x).sum()
        };
        self.eq_rows.iter().all(|(c, r)| &dot(c) == r)
            && self.le_rows.iter().all(|(c, r)| &dot(c) <= r)
            && self
                .lower_bounds
                .iter()
                .zip(v)
                .all(|(lb, x)| lb.as_ref().is_none_or(|l| x >= l))
    }
}

/// Outcome of a feasibility or optimization call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Feasible {
        assignment: Vec<Rational>,
        /// Present for optimization calls on bounded problems.
        optimum: Option<Rational>,
    },
    Infeasible,
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveResult::Feasible { .. })
    }

    pub fn assignment(&self) -> Option<&[Rational]> {
        match self {
            SolveResult::Feasible { assignment, .. } => Some(assignment),
            SolveResult::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Decides feasibility; on success the assignment satisfies every row exactly.
/// Deterministic: identical input yields an identical assignment.
pub fn solve_feasibility(sys: &LinearSystem) -> Result<SolveResult> {
    sys.validate()?;
    let std = StandardForm::build(sys);
    let mut tab = Tableau::new(&std);
    if !tab.phase_one() {
        return Ok(SolveResult::Infeasible);
    }
    Ok(SolveResult::Feasible {
        assignment: std.recover(&tab),
        optimum: None,
    })
}

/// Optimizes `objective . v` over the system. `Err(Unbounded)` signals that
/// no optimum exists in the requested direction.
pub fn solve_lp(sys: &LinearSystem, objective: &[Rational], sense: Sense) -> Result<SolveResult> {
    sys.validate()?;
    if objective.len() != sys.num_vars {
        return Err(Error::MalformedSystem(format!(
            "objective has {} coefficients, expected {}",
            objective.len(),
            sys.num_vars
        )));
    }
    let std = StandardForm::build(sys);
    let mut tab = Tableau::new(&std);
    if !tab.phase_one() {
        return Ok(SolveResult::Infeasible);
    }
    // Phase 2 always minimizes; flip the objective for Max.
    let mut obj_std = std.objective(objective);
    if sense == Sense::Max {
        for c in &mut obj_std {
            *c = -c.clone();
        }
    }
    if !tab.phase_two(&obj_std) {
        return Err(Error::Unbounded);
    }
    let assignment = std.recover(&tab);
    let value: Rational = objective.iter().zip(&assignment).map(|(c, x)| c * x).sum();
    Ok(SolveResult::Feasible {
        assignment,
        optimum: Some(value),
    })
}

/// True iff `point` is feasible and attains the exact minimum of
/// `objective . v`. An unbounded or infeasible program has no optimum, so the
/// answer is then `false`.
pub fn verify_optimal(sys: &LinearSystem, objective: &[Rational], point: &[Rational]) -> Result<bool> {
    sys.validate()?;
    if point.len() != sys.num_vars {
        return Err(Error::MalformedSystem(format!(
            "point has {} entries, expected {}",
            point.len(),
            sys.num_vars
        )));
    }
    if !sys.satisfies(point) {
        return Ok(false);
    }
    match solve_lp(sys, objective, Sense::Min) {
        Ok(SolveResult::Feasible { optimum: Some(opt), .. }) => {
            let value: Rational = objective.iter().zip(point).map(|(c, x)| c * x).sum();
            Ok(value == opt)
        }
        Ok(_) => Ok(false),
        Err(Error::Unbounded) => Ok(false),
        Err(e) => Err(e),
    }
}

/// How one original variable maps onto standard-form columns.
enum VarMap {
    /// `v = lb + u`, column `u >= 0`.
    Shifted { col: usize, lb: Rational },
    /// `v = p - q`, columns `p, q >= 0`.
    Split { pos: usize, neg: usize },
}

/// `A z = rhs, z >= 0` with `rhs >= 0`, ready for phase 1. A row whose slack
/// survived sign normalization with coefficient +1 records it as a ready-made
/// basic column, so only the remaining rows need artificials.
struct StandardForm {
    cols: usize,
    rows: Vec<(Vec<Rational>, Rational, Option<usize>)>,
    map: Vec<VarMap>,
}

impl StandardForm {
    fn build(sys: &LinearSystem) -> Self {
        let mut map = Vec::with_capacity(sys.num_vars);
        let mut cols = 0;
        for lb in &sys.lower_bounds {
            match lb {
                Some(l) => {
                    map.push(VarMap::Shifted { col: cols, lb: l.clone() });
                    cols += 1;
                }
                None => {
                    map.push(VarMap::Split { pos: cols, neg: cols + 1 });
                    cols += 2;
                }
            }
        }
        let slack_cols = sys.le_rows.len();
        let total = cols + slack_cols;

        let mut rows = Vec::with_capacity(sys.eq_rows.len() + sys.le_rows.len());
        let mut convert = |coeffs: &[Rational], rhs: &Rational, slack: Option<usize>| {
            let mut row = vec![Rational::zero(); total];
            let mut r = rhs.clone();
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match &map[j] {
                    VarMap::Shifted { col, lb } => {
                        row[*col] += c;
                        r -= c * lb;
                    }
                    VarMap::Split { pos, neg } => {
                        row[*pos] += c;
                        row[*neg] -= c;
                    }
                }
            }
            if let Some(s) = slack {
                row[cols + s] = Rational::one();
            }
            let mut basic = slack.map(|s| cols + s);
            if r.is_negative() {
                for c in &mut row {
                    *c = -c.clone();
                }
                r = -r;
                basic = None;
            }
            rows.push((row, r, basic));
        };
        for (coeffs, rhs) in &sys.eq_rows {
            convert(coeffs, rhs, None);
        }
        for (s, (coeffs, rhs)) in sys.le_rows.iter().enumerate() {
            convert(coeffs, rhs, Some(s));
        }
        StandardForm { cols: total, rows, map }
    }

    /// Objective over standard-form columns (constant offset dropped; it does
    /// not affect the argmin).
    fn objective(&self, obj: &[Rational]) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.cols];
        for (j, cj) in obj.iter().enumerate() {
            match &self.map[j] {
                VarMap::Shifted { col, .. } => c[*col] += cj,
                VarMap::Split { pos, neg } => {
                    c[*pos] += cj;
                    c[*neg] -= cj;
                }
            }
        }
        c
    }

    fn recover(&self, tab: &Tableau) -> Vec<Rational> {
        let z = tab.solution(self.cols);
        self.map
            .iter()
            .map(|m| match m {
                VarMap::Shifted { col, lb } => lb + &z[*col],
                VarMap::Split { pos, neg } => &z[*pos] - &z[*neg],
            })
            .collect()
    }
}

/// Dense simplex tableau with explicit artificial columns.
struct Tableau {
    /// Structural + slack columns; artificials live at `structural..total`.
    structural: usize,
    total: usize,
    /// Each row: `total` coefficients followed by the rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(std: &StandardForm) -> Self {
        let m = std.rows.len();
        let structural = std.cols;
        let artificials = std.rows.iter().filter(|(_, _, b)| b.is_none()).count();
        let total = structural + artificials;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = structural;
        for (coeffs, rhs, basic) in &std.rows {
            let mut row = Vec::with_capacity(total + 1);
            row.extend(coeffs.iter().cloned());
            row.extend(std::iter::repeat_n(Rational::zero(), artificials));
            match basic {
                Some(col) => basis.push(*col),
                None => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            row.push(rhs.clone());
            rows.push(row);
        }
        Tableau { structural, total, rows, basis }
    }

    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.total]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.rows[r][c].clone();
        for v in &mut self.rows[r] {
            *v = &*v / &pivot;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for j in 0..=self.total {
                let delta = &factor * &self.rows[r][j];
                self.rows[i][j] -= delta;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: entering = lowest-index column with negative reduced
    /// cost, leaving = min ratio with ties broken by lowest basic variable
    /// index. Returns false on unboundedness.
    fn run(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let rc = &cost[j]
                    - self
                        .basis
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| &cost[b] * &self.rows[i][j])
                        .sum::<Rational>();
                rc.is_negative()
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }

    /// Minimizes the sum of artificials. Returns false when the system is
    /// infeasible. On success no artificial remains basic at a nonzero level
    /// and redundant rows are dropped.
    fn phase_one(&mut self) -> bool {
        let mut cost = vec![Rational::zero(); self.total];
        for c in &mut cost[self.structural..] {
            *c = Rational::one();
        }
        let unbounded_free = !self.run(&cost, self.total);
        debug_assert!(!unbounded_free, "phase 1 objective is bounded below by 0");
        let value: Rational = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= self.structural)
            .map(|(i, _)| self.rhs(i).clone())
            .sum();
        if !value.is_zero() {
            return false;
        }
        // Drive remaining artificials out of the basis, dropping redundant rows.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.structural {
                match (0..self.structural).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        true
    }

    /// Minimizes `cost` over structural columns. Returns false on
    /// unboundedness.
    fn phase_two(&mut self, cost_structural: &[Rational]) -> bool {
        let mut cost = cost_structural.to_vec();
        cost.resize(self.total, Rational::zero());
        self.run(&cost, self.structural)
    }

    fn solution(&self, cols: usize) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); cols];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < cols {
                z[b] = self.rhs(i).clone();
            }
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn box_feasible_at_lower_bound() {
        let mut sys = LinearSystem::new(1);
        sys.lower_bounds[0] = Some(rat(0));
        sys.push_le(vec![rat(1)], rat(1));
        let r = solve_feasibility(&sys).unwrap();
        assert_eq!(r.assignment().unwrap(), &[rat(0)]);
    }

    #[test]
    fn contradictory_bounds_infeasible() {
        let mut sys = LinearSystem::new(1);
        sys.push_ge(vec![rat(1)], rat(1));
        sys.push_le(vec![rat(1)], rat(0));
        assert_eq!(solve_feasibility(&sys).unwrap(), SolveResult::Infeasible);
    }

    #[test]
    fn min_over_halfline() {
        let mut sys = LinearSystem::new(1);
        sys.push_ge(vec![rat(1)], rat(3));
        let r = solve_lp(&sys, &[rat(1)], Sense::Min).unwrap();
        match r {
            SolveResult::Feasible { assignment, optimum } => {
                assert_eq!(assignment, vec![rat(3)]);
                assert_eq!(optimum, Some(rat(3)));
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn counterexample_scenario_lp() {
        // min (0,1).x s.t. 0 x1 + 2 x2 = 2, x >= 0: optimum 1.
        let mut sys = LinearSystem::new(2);
        sys.lower_bounds = vec![Some(rat(0)), Some(rat(0))];
        sys.push_eq(vec![rat(0), rat(2)], rat(2));
        let r = solve_lp(&sys, &[rat(0), rat(1)], Sense::Min).unwrap();
        match r {
            SolveResult::Feasible { assignment, optimum } => {
                assert_eq!(optimum, Some(rat(1)));
                assert_eq!(assignment[1], rat(1));
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn unbounded_reported() {
        let mut sys = LinearSystem::new(1);
        sys.push_le(vec![rat(1)], rat(0));
        assert!(matches!(solve_lp(&sys, &[rat(1)], Sense::Min), Err(Error::Unbounded)));
    }

    #[test]
    fn max_sense() {
        let mut sys = LinearSystem::new(1);
        sys.lower_bounds[0] = Some(rat(-1));
        sys.push_le(vec![rat(1)], ratio(7, 2));
        let r = solve_lp(&sys, &[rat(2)], Sense::Max).unwrap();
        match r {
            SolveResult::Feasible { optimum, .. } => assert_eq!(optimum, Some(rat(7))),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn verify_optimal_counterexample_scenarios() {
        // Scenario An = (0,2): x = (1,1) is optimal.
        let mut sys = LinearSystem::new(2);
        sys.lower_bounds = vec![Some(rat(0)), Some(rat(0))];
        sys.push_eq(vec![rat(0), rat(2)], rat(2));
        assert!(verify_optimal(&sys, &[rat(0), rat(1)], &[rat(1), rat(1)]).unwrap());

        // Scenario An = (1,1): optimum is 0 at (2,0), so (1,1) is not optimal.
        let mut sys = LinearSystem::new(2);
        sys.lower_bounds = vec![Some(rat(0)), Some(rat(0))];
        sys.push_eq(vec![rat(1), rat(1)], rat(2));
        assert!(!verify_optimal(&sys, &[rat(0), rat(1)], &[rat(1), rat(1)]).unwrap());
    }

    #[test]
    fn verify_optimal_rejects_infeasible_point() {
        let mut sys = LinearSystem::new(1);
        sys.push_le(vec![rat(1)], rat(0));
        assert!(!verify_optimal(&sys, &[rat(1)], &[rat(1)]).unwrap());
    }

    #[test]
    fn verify_optimal_maps_unbounded_to_false() {
        let mut sys = LinearSystem::new(1);
        sys.push_le(vec![rat(1)], rat(0));
        assert!(!verify_optimal(&sys, &[rat(1)], &[rat(0)]).unwrap());
    }

    #[test]
    fn zero_variable_system() {
        let mut sys = LinearSystem::new(0);
        sys.push_le(vec![], rat(1));
        assert!(solve_feasibility(&sys).unwrap().is_feasible());
        sys.push_le(vec![], rat(-1));
        assert_eq!(solve_feasibility(&sys).unwrap(), SolveResult::Infeasible);
    }

    #[test]
    fn constant_equality_rows() {
        let mut sys = LinearSystem::new(1);
        sys.push_eq(vec![rat(0)], rat(0));
        assert!(solve_feasibility(&sys).unwrap().is_feasible());
        sys.push_eq(vec![rat(0)], rat(2));
        assert_eq!(solve_feasibility(&sys).unwrap(), SolveResult::Infeasible);
    }

    #[test]
    fn degenerate_duplicated_rows_terminate() {
        let mut sys = LinearSystem::new(3);
        sys.lower_bounds = vec![Some(rat(0)); 3];
        for _ in 0..4 {
            sys.push_le(vec![rat(1), rat(1), rat(1)], rat(1));
            sys.push_ge(vec![rat(1), rat(1), rat(1)], rat(1));
        }
        let r = solve_lp(&sys, &[rat(1), rat(-1), rat(2)], Sense::Min).unwrap();
        match r {
            SolveResult::Feasible { optimum, .. } => assert_eq!(optimum, Some(rat(-1))),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn feasible_assignment_satisfies_exactly() {
        let mut sys = LinearSystem::new(3);
        sys.lower_bounds = vec![Some(ratio(-1, 2)), None, Some(rat(0))];
        sys.push_eq(vec![rat(1), rat(2), rat(-1)], ratio(5, 3));
        sys.push_le(vec![rat(3), rat(-1), rat(1)], rat(4));
        sys.push_ge(vec![rat(0), rat(1), rat(1)], rat(-2));
        let r = solve_feasibility(&sys).unwrap();
        assert!(sys.satisfies(r.assignment().unwrap()));
    }

    #[test]
    fn deterministic_assignments() {
        let mut sys = LinearSystem::new(4);
        sys.lower_bounds = vec![Some(rat(0)), None, Some(rat(-3)), None];
        sys.push_le(vec![rat(1), rat(1), rat(1), rat(1)], rat(10));
        sys.push_ge(vec![rat(1), rat(-1), rat(0), rat(2)], rat(1));
        let a = solve_feasibility(&sys).unwrap();
        let b = solve_feasibility(&sys).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let mut sys = LinearSystem::new(2);
        sys.names = vec!["x".into(), "x".into()];
        assert!(matches!(solve_feasibility(&sys), Err(Error::MalformedSystem(_))));
    }
}
