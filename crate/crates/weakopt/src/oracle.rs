//! Brute-force cross-validation oracles.
//!
//! Nothing here is on the decision path. The scenario-grid search is
//! one-sided: a certificate it finds proves weak optimality, silence proves
//! nothing (witnesses can require interior scenario values no finite grid
//! hits). The orthant decomposition of point space decides weak feasibility
//! of an interval inequality system exactly, at exponential cost in the
//! variable count.

use num_traits::Zero;

use crate::interval::{Interval, IntervalMatrix};
use crate::linsolve::{solve_feasibility, verify_optimal, LinearSystem};
use crate::model::{IlpData, Point, RatMatrix, Scenario};
use crate::rational::{rat, Rational};
use crate::weak_optimality::scenario_lp;
use crate::{Error, Result};

/// Hard cap on the number of grid scenarios one call may enumerate.
pub const SCENARIO_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// A concrete scenario for which the point is optimal. Proof of weak
    /// optimality.
    Certified(Scenario),
    /// The grid contained no certifying scenario. Proves nothing.
    Inconclusive,
}

/// Grid values of one interval: both endpoints plus `depth` equally spaced
/// interior points; a single value for a degenerate interval.
fn grid_values(iv: &Interval, depth: usize) -> Vec<Rational> {
    if iv.is_degenerate() {
        return vec![iv.lo().clone()];
    }
    let steps = depth + 1;
    let width = iv.hi() - iv.lo();
    (0..=steps)
        .map(|t| iv.lo() + &width * Rational::new(t.into(), steps.into()))
        .collect()
}

/// Searches the scenario grid for one where `x` is an exact optimum of the
/// fixed LP. Enumeration order is the odometer over blocks in the order
/// `Af, An, Bf, Bn, a, b, cf, cn`, entries row-major, values low to high,
/// so the first certificate found is canonical.
pub fn corner_grid_oracle(data: &IlpData, x: &Point, depth: usize) -> Result<OracleOutcome> {
    corner_grid_oracle_with_budget(data, x, depth, SCENARIO_BUDGET)
}

pub fn corner_grid_oracle_with_budget(
    data: &IlpData,
    x: &Point,
    depth: usize,
    budget: u64,
) -> Result<OracleOutcome> {
    let entries: Vec<&Interval> = data
        .af
        .entries()
        .iter()
        .chain(data.an.entries())
        .chain(data.bf.entries())
        .chain(data.bn.entries())
        .chain(&data.a)
        .chain(&data.b)
        .chain(&data.cf)
        .chain(&data.cn)
        .collect();
    let grids: Vec<Vec<Rational>> = entries.iter().map(|iv| grid_values(iv, depth)).collect();
    let mut total: u64 = 1;
    for g in &grids {
        total = total.saturating_mul(g.len() as u64);
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total,
                limit: budget,
            });
        }
    }

    let (k, l, m, n) = (
        data.num_eq(),
        data.num_ineq(),
        data.num_free(),
        data.num_nonneg(),
    );
    let point: Vec<Rational> = x.xf.iter().chain(&x.xn).cloned().collect();

    let mut odometer = vec![0usize; grids.len()];
    loop {
        let mut flat: Vec<Rational> = Vec::with_capacity(grids.len());
        for (g, &i) in grids.iter().zip(&odometer) {
            flat.push(g[i].clone());
        }
        let mut cursor = 0usize;
        let mut take = |count: usize| -> Vec<Rational> {
            let slice = flat[cursor..cursor + count].to_vec();
            cursor += count;
            slice
        };
        let scenario = Scenario {
            af: RatMatrix::new(k, m, take(k * m))?,
            an: RatMatrix::new(k, n, take(k * n))?,
            bf: RatMatrix::new(l, m, take(l * m))?,
            bn: RatMatrix::new(l, n, take(l * n))?,
            a: take(k),
            b: take(l),
            cf: take(m),
            cn: take(n),
        };
        let (sys, objective) = scenario_lp(&scenario);
        if sys.satisfies(&point) && verify_optimal(&sys, &objective, &point)? {
            return Ok(OracleOutcome::Certified(scenario));
        }

        // Advance the odometer, last entry fastest.
        let mut pos = grids.len();
        loop {
            if pos == 0 {
                return Ok(OracleOutcome::Inconclusive);
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < grids[pos].len() {
                break;
            }
            odometer[pos] = 0;
        }
    }
}

/// Decides whether some scenario of `Bf x <= b` (free `x`) admits a
/// solution, by enumerating the `2^m` sign orthants of `x`.
///
/// Inside one orthant the scenario-wise minimum of `(B x)_i` over
/// `B_i in Bf_i` is linear, because each coefficient independently attains
/// the endpoint that helps. Per-entry selection for row value `B_ij x_j`:
///
/// ```text
/// x_j >= 0  ->  lo(Bf_ij) * x_j   is the minimum
/// x_j <= 0  ->  hi(Bf_ij) * x_j   is the minimum
/// ```
///
/// The row is then satisfiable iff that minimum can reach `hi(b_i)`.
pub fn weak_feasibility_system_bruteforce(
    bf: &IntervalMatrix,
    b: &[Interval],
    var_cap: usize,
) -> Result<bool> {
    let l = bf.rows();
    let m = bf.cols();
    if b.len() != l {
        return Err(Error::DimensionMismatch(format!(
            "system has {} rows but {} right-hand sides",
            l,
            b.len()
        )));
    }
    if m > var_cap {
        return Err(Error::VariableCapExceeded { vars: m, cap: var_cap });
    }
    for mask in 0u64..(1u64 << m) {
        // bit 0 of the most significant position first, +1 orthant first.
        let nonneg: Vec<bool> = (0..m).map(|j| mask >> (m - 1 - j) & 1 == 0).collect();
        let mut sys = LinearSystem::new(m);
        for (j, &pos) in nonneg.iter().enumerate() {
            if pos {
                sys.lower_bounds[j] = Some(Rational::zero());
            } else {
                let mut row = vec![Rational::zero(); m];
                row[j] = rat(1);
                sys.push_le(row, Rational::zero());
            }
        }
        for i in 0..l {
            let coeffs = (0..m)
                .map(|j| {
                    let iv = bf.get(i, j);
                    if nonneg[j] { iv.lo().clone() } else { iv.hi().clone() }
                })
                .collect();
            sys.push_le(coeffs, b[i].hi().clone());
        }
        if solve_feasibility(&sys)?.is_feasible() {
            return Ok(true);
        }
    }
    Ok(false)
}
