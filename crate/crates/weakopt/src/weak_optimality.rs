//! Deciding weak optimality of a point, with witness extraction.
//!
//! The strong-duality characterization says a point is weakly optimal iff
//! some scenario together with dual multipliers satisfies primal feasibility,
//! dual feasibility, complementary slackness, and interval membership all at
//! once. That system is bilinear (multipliers times coefficients), but
//! substituting multiplier-scaled rows `A' = diag(yf) A`, `B' = diag(yn) B`
//! turns it into a linear feasibility system once the sign of every `yf_i`
//! is fixed. Enumerating the `2^k` sign orthants of the equality multipliers
//! therefore decides the question exactly; with no equality rows a single
//! system suffices.
//!
//! A feasible assignment of a testing system rescales back into an explicit
//! witness scenario. Rows whose multiplier is zero are unconstrained by the
//! system and get filled in by a per-row feasibility solve; this is why weak
//! feasibility of the point is a separate precondition and is checked first.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::linsolve::{solve_feasibility, verify_optimal, LinearSystem};
use crate::model::{IlpData, Point, RatMatrix, Scenario, Sign, Verdict, Witness};
use crate::rational::Rational;
use crate::weak_feasibility::{check_point_weak_feasibility, complete_row_scenario, RowKind};
use crate::{Error, Result};

/// Locates the named unknowns inside a testing system's variable vector.
///
/// Layout: `yf (k) | yn (l) | A'f (k*m) | A'n (k*n) | a' (k) | B'f (l*m) |
/// B'n (l*n) | b' (l)`, matrices row-major.
#[derive(Debug, Clone, Copy)]
pub struct TestingVars {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl TestingVars {
    pub fn total(&self) -> usize {
        self.k + self.l + self.k * (self.m + self.n + 1) + self.l * (self.m + self.n + 1)
    }

    pub fn yf(&self, i: usize) -> usize {
        i
    }

    pub fn yn(&self, i: usize) -> usize {
        self.k + i
    }

    pub fn af(&self, i: usize, j: usize) -> usize {
        self.k + self.l + i * self.m + j
    }

    pub fn an(&self, i: usize, j: usize) -> usize {
        self.k + self.l + self.k * self.m + i * self.n + j
    }

    pub fn a(&self, i: usize) -> usize {
        self.k + self.l + self.k * (self.m + self.n) + i
    }

    pub fn bf(&self, i: usize, j: usize) -> usize {
        self.k + self.l + self.k * (self.m + self.n + 1) + i * self.m + j
    }

    pub fn bn(&self, i: usize, j: usize) -> usize {
        self.k + self.l + self.k * (self.m + self.n + 1) + self.l * self.m + i * self.n + j
    }

    pub fn b(&self, i: usize) -> usize {
        self.k + self.l + self.k * (self.m + self.n + 1) + self.l * (self.m + self.n) + i
    }
}

/// The linearized feasibility system deciding weak optimality in one orthant.
pub struct TestingSystem {
    pub sigma: Vec<Sign>,
    pub sys: LinearSystem,
    pub vars: TestingVars,
}

/// Builds the testing system for `data` in orthant `sigma` at the fixed
/// point `x`.
pub fn build_testing_system_orthant(
    data: &IlpData,
    x: &Point,
    sigma: &[Sign],
) -> Result<TestingSystem> {
    let (k, l, m, n) = (
        data.num_eq(),
        data.num_ineq(),
        data.num_free(),
        data.num_nonneg(),
    );
    if sigma.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "sigma has {} entries, program has {} equality rows",
            sigma.len(),
            k
        )));
    }
    if x.xf.len() != m || x.xn.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "point is ({}, {}), program has ({}, {}) variables",
            x.xf.len(),
            x.xn.len(),
            m,
            n
        )));
    }
    let vars = TestingVars { k, l, m, n };
    let mut sys = LinearSystem::new(vars.total());
    let mut names = vec![String::new(); vars.total()];
    for i in 0..k {
        names[vars.yf(i)] = format!("yf{i}");
        names[vars.a(i)] = format!("ap{i}");
        for j in 0..m {
            names[vars.af(i, j)] = format!("Afp_{i}_{j}");
        }
        for j in 0..n {
            names[vars.an(i, j)] = format!("Anp_{i}_{j}");
        }
    }
    for i in 0..l {
        names[vars.yn(i)] = format!("yn{i}");
        names[vars.b(i)] = format!("bp{i}");
        for j in 0..m {
            names[vars.bf(i, j)] = format!("Bfp_{i}_{j}");
        }
        for j in 0..n {
            names[vars.bn(i, j)] = format!("Bnp_{i}_{j}");
        }
    }
    sys.names = names;

    // v in y * [lo, hi], linear because the sign of y is fixed:
    //   y >= 0:  lo*y <= v <= hi*y
    //   y <= 0:  hi*y <= v <= lo*y
    let total = vars.total();
    let membership = |sys: &mut LinearSystem, var: usize, mult: usize, lo: &Rational, hi: &Rational, sign: Sign| {
        let (lower, upper) = match sign {
            Sign::Pos => (lo, hi),
            Sign::Neg => (hi, lo),
        };
        let mut up = vec![Rational::zero(); total];
        up[var] = Rational::from_integer(1.into());
        up[mult] -= upper;
        sys.push_le(up, Rational::zero());
        let mut low = vec![Rational::zero(); total];
        low[var] = -Rational::from_integer(1.into());
        low[mult] += lower;
        sys.push_le(low, Rational::zero());
    };

    // Scaling memberships for the equality block, sign-split per sigma.
    for i in 0..k {
        let s = sigma[i];
        for j in 0..m {
            let iv = data.af.get(i, j);
            membership(&mut sys, vars.af(i, j), vars.yf(i), iv.lo(), iv.hi(), s);
        }
        for j in 0..n {
            let iv = data.an.get(i, j);
            membership(&mut sys, vars.an(i, j), vars.yf(i), iv.lo(), iv.hi(), s);
        }
        membership(&mut sys, vars.a(i), vars.yf(i), data.a[i].lo(), data.a[i].hi(), s);
    }
    // Inequality block: yn is nonnegative throughout.
    for i in 0..l {
        for j in 0..m {
            let iv = data.bf.get(i, j);
            membership(&mut sys, vars.bf(i, j), vars.yn(i), iv.lo(), iv.hi(), Sign::Pos);
        }
        for j in 0..n {
            let iv = data.bn.get(i, j);
            membership(&mut sys, vars.bn(i, j), vars.yn(i), iv.lo(), iv.hi(), Sign::Pos);
        }
        membership(&mut sys, vars.b(i), vars.yn(i), data.b[i].lo(), data.b[i].hi(), Sign::Pos);
    }

    // Scaled primal feasibility, satisfied as equality in every row.
    for i in 0..k {
        let mut row = vec![Rational::zero(); total];
        for j in 0..m {
            row[vars.af(i, j)] = x.xf[j].clone();
        }
        for j in 0..n {
            row[vars.an(i, j)] = x.xn[j].clone();
        }
        row[vars.a(i)] = Rational::from_integer((-1).into());
        sys.push_eq(row, Rational::zero());
    }
    for i in 0..l {
        let mut row = vec![Rational::zero(); total];
        for j in 0..m {
            row[vars.bf(i, j)] = x.xf[j].clone();
        }
        for j in 0..n {
            row[vars.bn(i, j)] = x.xn[j].clone();
        }
        row[vars.b(i)] = Rational::from_integer((-1).into());
        sys.push_eq(row, Rational::zero());
    }

    // Dual feasibility on column sums. Free-variable columns must land inside
    // the cf interval; nonnegative columns split on whether xn_j is strictly
    // positive (two-sided) or zero (upper bound only).
    for j in 0..m {
        let mut cols = vec![Rational::zero(); total];
        for i in 0..k {
            cols[vars.af(i, j)] = Rational::from_integer(1.into());
        }
        for i in 0..l {
            cols[vars.bf(i, j)] = Rational::from_integer(1.into());
        }
        sys.push_le(cols.clone(), data.cf[j].hi().clone());
        sys.push_ge(cols, data.cf[j].lo().clone());
    }
    for j in 0..n {
        let mut cols = vec![Rational::zero(); total];
        for i in 0..k {
            cols[vars.an(i, j)] = Rational::from_integer(1.into());
        }
        for i in 0..l {
            cols[vars.bn(i, j)] = Rational::from_integer(1.into());
        }
        if x.xn[j].is_zero() {
            sys.push_le(cols, data.cn[j].hi().clone());
        } else {
            sys.push_le(cols.clone(), data.cn[j].hi().clone());
            sys.push_ge(cols, data.cn[j].lo().clone());
        }
    }

    // Multiplier signs.
    for i in 0..l {
        sys.lower_bounds[vars.yn(i)] = Some(Rational::zero());
    }
    for i in 0..k {
        match sigma[i] {
            Sign::Pos => sys.lower_bounds[vars.yf(i)] = Some(Rational::zero()),
            Sign::Neg => {
                let mut row = vec![Rational::zero(); total];
                row[vars.yf(i)] = Rational::from_integer(1.into());
                sys.push_le(row, Rational::zero());
            }
        }
    }

    Ok(TestingSystem {
        sigma: sigma.to_vec(),
        sys,
        vars,
    })
}

/// Inequality-only fast path: the single testing system for a program with
/// no equality rows.
pub fn build_testing_system_ineq(data: &IlpData, x: &Point) -> Result<TestingSystem> {
    if data.num_eq() != 0 {
        return Err(Error::DimensionMismatch(format!(
            "inequality-only path requires k = 0, program has {} equality rows",
            data.num_eq()
        )));
    }
    build_testing_system_orthant(data, x, &[])
}

/// Rebuilds a witness scenario and multipliers from a feasible
/// testing-system assignment.
pub fn extract_witness(
    ts: &TestingSystem,
    assignment: &[Rational],
    data: &IlpData,
    x: &Point,
) -> Result<Witness> {
    let v = &ts.vars;
    let get = |idx: usize| assignment[idx].clone();

    let mut af_rows = Vec::with_capacity(v.k);
    let mut an_rows = Vec::with_capacity(v.k);
    let mut a = Vec::with_capacity(v.k);
    let mut yf = Vec::with_capacity(v.k);
    for i in 0..v.k {
        let mult = get(v.yf(i));
        if !mult.is_zero() {
            af_rows.push((0..v.m).map(|j| get(v.af(i, j)) / &mult).collect());
            an_rows.push((0..v.n).map(|j| get(v.an(i, j)) / &mult).collect());
            a.push(get(v.a(i)) / &mult);
        } else {
            let (coeffs, rhs) = complete_row_scenario(data, x, RowKind::Equality(i))?;
            af_rows.push(coeffs[..v.m].to_vec());
            an_rows.push(coeffs[v.m..].to_vec());
            a.push(rhs);
        }
        yf.push(mult);
    }

    let mut bf_rows = Vec::with_capacity(v.l);
    let mut bn_rows = Vec::with_capacity(v.l);
    let mut b = Vec::with_capacity(v.l);
    let mut yn = Vec::with_capacity(v.l);
    for i in 0..v.l {
        let mult = get(v.yn(i));
        if mult.is_positive() {
            bf_rows.push((0..v.m).map(|j| get(v.bf(i, j)) / &mult).collect());
            bn_rows.push((0..v.n).map(|j| get(v.bn(i, j)) / &mult).collect());
            b.push(get(v.b(i)) / &mult);
        } else {
            let (coeffs, rhs) = complete_row_scenario(data, x, RowKind::Inequality(i))?;
            bf_rows.push(coeffs[..v.m].to_vec());
            bn_rows.push(coeffs[v.m..].to_vec());
            b.push(rhs);
        }
        yn.push(mult);
    }

    // Objective: cf takes the scaled column sums (the testing system pins
    // them inside the cf intervals); cn does too, except that columns with
    // xn_j = 0 take the interval's upper endpoint.
    let cf = (0..v.m)
        .map(|j| {
            (0..v.k).map(|i| get(v.af(i, j))).sum::<Rational>()
                + (0..v.l).map(|i| get(v.bf(i, j))).sum::<Rational>()
        })
        .collect();
    let cn = (0..v.n)
        .map(|j| {
            if x.xn[j].is_zero() {
                data.cn[j].hi().clone()
            } else {
                (0..v.k).map(|i| get(v.an(i, j))).sum::<Rational>()
                    + (0..v.l).map(|i| get(v.bn(i, j))).sum::<Rational>()
            }
        })
        .collect();

    let mk = |rows: Vec<Vec<Rational>>, cols: usize, nrows: usize| {
        if nrows == 0 {
            RatMatrix::zeros(0, cols)
        } else {
            RatMatrix::from_rows(rows).expect("rows built with uniform width")
        }
    };
    let scenario = Scenario {
        af: mk(af_rows, v.m, v.k),
        an: mk(an_rows, v.n, v.k),
        bf: mk(bf_rows, v.m, v.l),
        bn: mk(bn_rows, v.n, v.l),
        a,
        b,
        cf,
        cn,
    };
    Ok(Witness {
        scenario,
        yf,
        yn,
        sigma: ts.sigma.clone(),
    })
}

/// Which part of the strong-duality system a bad witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessViolation {
    ShapeMismatch,
    ScenarioMembership,
    PrimalFeasibility,
    DualFeasibility,
    Complementarity,
    MultiplierSign,
    OptimalityRecheck,
}

impl std::fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WitnessViolation::ShapeMismatch => "shape mismatch",
            WitnessViolation::ScenarioMembership => "scenario membership",
            WitnessViolation::PrimalFeasibility => "primal feasibility",
            WitnessViolation::DualFeasibility => "dual feasibility",
            WitnessViolation::Complementarity => "complementary slackness",
            WitnessViolation::MultiplierSign => "multiplier sign condition",
            WitnessViolation::OptimalityRecheck => "LP optimality re-check",
        };
        f.write_str(s)
    }
}

/// The classical LP fixed by a scenario, as a kernel system over `(xf, xn)`.
pub fn scenario_lp(s: &Scenario) -> (LinearSystem, Vec<Rational>) {
    let m = s.af.cols();
    let n = s.an.cols();
    let mut sys = LinearSystem::new(m + n);
    sys.names = (0..m)
        .map(|j| format!("xf{j}"))
        .chain((0..n).map(|j| format!("xn{j}")))
        .collect();
    for j in 0..n {
        sys.lower_bounds[m + j] = Some(Rational::zero());
    }
    for i in 0..s.af.rows() {
        let coeffs = s.af.row(i).iter().chain(s.an.row(i)).cloned().collect();
        sys.push_eq(coeffs, s.a[i].clone());
    }
    for i in 0..s.bf.rows() {
        let coeffs = s.bf.row(i).iter().chain(s.bn.row(i)).cloned().collect();
        sys.push_ge(coeffs, s.b[i].clone());
    }
    let objective = s.cf.iter().chain(&s.cn).cloned().collect();
    (sys, objective)
}

/// Full strong-duality check of a witness, reporting the first violated
/// family. Also re-solves the scenario LP with the kernel as an independent
/// route to the same verdict.
pub fn verify_witness_detailed(
    data: &IlpData,
    x: &Point,
    w: &Witness,
) -> std::result::Result<(), WitnessViolation> {
    use WitnessViolation as V;
    let (k, l, m, n) = (
        data.num_eq(),
        data.num_ineq(),
        data.num_free(),
        data.num_nonneg(),
    );
    let s = &w.scenario;
    let shapes_ok = x.xf.len() == m
        && x.xn.len() == n
        && w.yf.len() == k
        && w.yn.len() == l
        && (w.sigma.is_empty() || w.sigma.len() == k)
        && s.af.rows() == k
        && s.af.cols() == m
        && s.an.cols() == n
        && s.bf.rows() == l
        && s.bn.cols() == n;
    if !shapes_ok {
        return Err(V::ShapeMismatch);
    }
    if !crate::model::scenario_contains(data, s).map_err(|_| V::ShapeMismatch)? {
        return Err(V::ScenarioMembership);
    }

    let zero = Rational::zero();
    if x.xn.iter().any(|v| v < &zero) {
        return Err(V::PrimalFeasibility);
    }
    let eq_lhs: Vec<Rational> = {
        let af_x = s.af.mul_vec(&x.xf).map_err(|_| V::ShapeMismatch)?;
        let an_x = s.an.mul_vec(&x.xn).map_err(|_| V::ShapeMismatch)?;
        af_x.into_iter().zip(an_x).map(|(u, v)| u + v).collect()
    };
    if eq_lhs.iter().zip(&s.a) .any(|(lhs, rhs)| lhs != rhs) {
        return Err(V::PrimalFeasibility);
    }
    let ineq_lhs: Vec<Rational> = {
        let bf_x = s.bf.mul_vec(&x.xf).map_err(|_| V::ShapeMismatch)?;
        let bn_x = s.bn.mul_vec(&x.xn).map_err(|_| V::ShapeMismatch)?;
        bf_x.into_iter().zip(bn_x).map(|(u, v)| u + v).collect()
    };
    if ineq_lhs.iter().zip(&s.b).any(|(lhs, rhs)| lhs < rhs) {
        return Err(V::PrimalFeasibility);
    }

    if w.yn.iter().any(|y| y.is_negative()) {
        return Err(V::MultiplierSign);
    }
    if !w.sigma.is_empty()
        && w.sigma
            .iter()
            .zip(&w.yf)
            .any(|(sig, y)| match sig {
                Sign::Pos => y.is_negative(),
                Sign::Neg => y.is_positive(),
            })
    {
        return Err(V::MultiplierSign);
    }

    // Dual feasibility: (Af)^T yf + (Bf)^T yn = cf, (An)^T yf + (Bn)^T yn <= cn.
    let dual_free: Vec<Rational> = (0..m)
        .map(|j| {
            (0..k).map(|i| s.af.get(i, j) * &w.yf[i]).sum::<Rational>()
                + (0..l).map(|i| s.bf.get(i, j) * &w.yn[i]).sum::<Rational>()
        })
        .collect();
    if dual_free.iter().zip(&s.cf).any(|(lhs, rhs)| lhs != rhs) {
        return Err(V::DualFeasibility);
    }
    let dual_nonneg: Vec<Rational> = (0..n)
        .map(|j| {
            (0..k).map(|i| s.an.get(i, j) * &w.yf[i]).sum::<Rational>()
                + (0..l).map(|i| s.bn.get(i, j) * &w.yn[i]).sum::<Rational>()
        })
        .collect();
    if dual_nonneg.iter().zip(&s.cn).any(|(lhs, rhs)| lhs > rhs) {
        return Err(V::DualFeasibility);
    }

    // Complementary slackness, both families.
    for i in 0..l {
        if !(&w.yn[i] * (&s.b[i] - &ineq_lhs[i])).is_zero() {
            return Err(V::Complementarity);
        }
    }
    for j in 0..n {
        if !(&x.xn[j] * (&s.cn[j] - &dual_nonneg[j])).is_zero() {
            return Err(V::Complementarity);
        }
    }

    // Independent route: the kernel re-solves LP(scenario) and confirms x
    // attains the optimum.
    let (sys, objective) = scenario_lp(s);
    let point: Vec<Rational> = x.xf.iter().chain(&x.xn).cloned().collect();
    match verify_optimal(&sys, &objective, &point) {
        Ok(true) => Ok(()),
        _ => Err(V::OptimalityRecheck),
    }
}

/// True iff the witness certifies weak optimality of `x`. Any violation,
/// including shape mismatch, yields `false`.
pub fn verify_witness(data: &IlpData, x: &Point, w: &Witness) -> bool {
    verify_witness_detailed(data, x, w).is_ok()
}

/// Knobs for [`decide_weak_optimality`].
#[derive(Debug, Clone, Copy, Default)]
pub struct DecideOptions {
    /// Enumerate every orthant instead of stopping at the first feasible one.
    /// The witness still comes from the lexicographically smallest feasible
    /// orthant.
    pub exhaustive: bool,
    /// Solve orthant systems on the rayon pool. The verdict and witness are
    /// identical to sequential execution.
    pub parallel: bool,
}

/// Instrumentation of one decision run. Counts refer to the sequential
/// lexicographic schedule regardless of parallelism, so reports are
/// reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideStats {
    /// Orthant testing systems examined (at most `2^k`; exactly 1 when k = 0
    /// and the point is weakly feasible).
    pub orthants_tried: usize,
    /// Kernel feasibility solves on testing systems. Witness-completion
    /// solves for zero-multiplier rows are not testing systems and are not
    /// counted here.
    pub lp_solves: usize,
    /// All feasible orthants, populated in exhaustive mode only.
    pub feasible_orthants: Vec<Vec<Sign>>,
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub verdict: Verdict,
    pub stats: DecideStats,
}

fn sigma_at(idx: usize, k: usize) -> Vec<Sign> {
    // Lexicographic with +1 before -1: the most significant bit is the first
    // coordinate, bit 0 means +1.
    (0..k)
        .map(|i| {
            if idx >> (k - 1 - i) & 1 == 0 {
                Sign::Pos
            } else {
                Sign::Neg
            }
        })
        .collect()
}

/// Decides whether `x` is a weakly optimal solution of the program with the
/// given interval data, producing a verified witness on yes.
pub fn decide_weak_optimality(
    data: &IlpData,
    x: &Point,
    opts: &DecideOptions,
) -> Result<Decision> {
    if !check_point_weak_feasibility(data, x)? {
        return Ok(Decision {
            verdict: Verdict::NotWeaklyFeasible,
            stats: DecideStats {
                orthants_tried: 0,
                lp_solves: 0,
                feasible_orthants: Vec::new(),
            },
        });
    }
    let k = data.num_eq();
    let count = 1usize << k;

    let solve_orthant = |idx: usize| -> Result<Option<(TestingSystem, Vec<Rational>)>> {
        let sigma = sigma_at(idx, k);
        let ts = build_testing_system_orthant(data, x, &sigma)?;
        match solve_feasibility(&ts.sys)? {
            r if r.is_feasible() => {
                let assignment = r.assignment().expect("feasible").to_vec();
                Ok(Some((ts, assignment)))
            }
            _ => Ok(None),
        }
    };

    let mut feasible_orthants = Vec::new();
    let mut winner: Option<(usize, TestingSystem, Vec<Rational>)> = None;

    if opts.exhaustive {
        for idx in 0..count {
            if let Some((ts, asg)) = solve_orthant(idx)? {
                feasible_orthants.push(ts.sigma.clone());
                if winner.is_none() {
                    winner = Some((idx, ts, asg));
                }
            }
        }
    } else if opts.parallel && k > 0 {
        let found = (0..count)
            .into_par_iter()
            .map(|idx| solve_orthant(idx).map(|o| o.map(|hit| (idx, hit))))
            .find_map_first(|r| match r {
                Ok(Some(hit)) => Some(Ok(hit)),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?;
        winner = found.map(|(idx, (ts, asg))| (idx, ts, asg));
    } else {
        for idx in 0..count {
            if let Some((ts, asg)) = solve_orthant(idx)? {
                winner = Some((idx, ts, asg));
                break;
            }
        }
    }

    let solves = if opts.exhaustive {
        count
    } else {
        winner.as_ref().map_or(count, |(idx, _, _)| idx + 1)
    };
    let stats = |feasible: Vec<Vec<Sign>>| DecideStats {
        orthants_tried: solves,
        lp_solves: solves,
        feasible_orthants: feasible,
    };

    match winner {
        Some((_, ts, assignment)) => {
            let witness = extract_witness(&ts, &assignment, data, x)?;
            if let Err(v) = verify_witness_detailed(data, x, &witness) {
                return Err(Error::InternalWitnessInvalid(v.to_string()));
            }
            Ok(Decision {
                verdict: Verdict::WeaklyOptimal(witness),
                stats: stats(feasible_orthants),
            })
        }
        None => Ok(Decision {
            verdict: Verdict::NotWeaklyOptimal,
            stats: stats(feasible_orthants),
        }),
    }
}
