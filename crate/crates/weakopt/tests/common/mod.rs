//! Shared helpers for the integration suites: an independent LP reference
//! built on vertex enumeration, and seeded random generators for systems and
//! instances. Everything here is deterministic under a fixed seed.

#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weakopt::interval::{Interval, IntervalMatrix};
use weakopt::linsolve::LinearSystem;
use weakopt::model::{IlpData, Point};
use weakopt::rational::{ratio, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random rational in `[-5, 5]` with denominator 1, 2, or 4.
pub fn rand_rational(r: &mut ChaCha8Rng) -> Rational {
    let denom = *[1i64, 2, 4].get(r.gen_range(0..3)).unwrap();
    let numer = r.gen_range(-5 * denom..=5 * denom);
    ratio(numer, denom)
}

pub fn rand_nonneg_rational(r: &mut ChaCha8Rng) -> Rational {
    let denom = *[1i64, 2, 4].get(r.gen_range(0..3)).unwrap();
    let numer = r.gen_range(0..=5 * denom);
    ratio(numer, denom)
}

/// A random interval with bounds in `[-5, 5]`; degenerate with the given
/// probability (percentage).
pub fn rand_interval(r: &mut ChaCha8Rng, degenerate_pct: u32) -> Interval {
    let a = rand_rational(r);
    if r.gen_range(0..100) < degenerate_pct {
        return Interval::point(a);
    }
    let b = rand_rational(r);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Interval::new(lo, hi).unwrap()
}

fn rand_interval_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, deg: u32) -> IntervalMatrix {
    IntervalMatrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| rand_interval(r, deg)).collect(),
    )
    .unwrap()
}

fn rand_interval_vec(r: &mut ChaCha8Rng, len: usize, deg: u32) -> Vec<Interval> {
    (0..len).map(|_| rand_interval(r, deg)).collect()
}

/// A random interval program with `k <= 3, l <= 3, m <= 3, n <= 3` and a
/// random candidate point (`xn` nonnegative).
pub fn rand_instance(r: &mut ChaCha8Rng) -> (IlpData, Point) {
    rand_instance_dims(r, 3, 3, 3, 3, 30)
}

/// Like [`rand_instance`] but small enough for the scenario-grid oracle:
/// at most 12 interval entries, most of them degenerate.
pub fn rand_small_instance(r: &mut ChaCha8Rng) -> (IlpData, Point) {
    loop {
        let (data, x) = rand_instance_dims(r, 1, 2, 2, 2, 70);
        let entries = interval_entry_count(&data);
        if entries <= 12 && nondegenerate_count(&data) <= 6 {
            return (data, x);
        }
    }
}

pub fn rand_instance_dims(
    r: &mut ChaCha8Rng,
    max_k: usize,
    max_l: usize,
    max_m: usize,
    max_n: usize,
    degenerate_pct: u32,
) -> (IlpData, Point) {
    loop {
        let k = r.gen_range(0..=max_k);
        let l = r.gen_range(0..=max_l);
        let m = r.gen_range(0..=max_m);
        let n = r.gen_range(0..=max_n);
        if m + n == 0 || k + l == 0 {
            continue;
        }
        let data = IlpData::new(
            rand_interval_matrix(r, k, m, degenerate_pct),
            rand_interval_matrix(r, k, n, degenerate_pct),
            rand_interval_matrix(r, l, m, degenerate_pct),
            rand_interval_matrix(r, l, n, degenerate_pct),
            rand_interval_vec(r, k, degenerate_pct),
            rand_interval_vec(r, l, degenerate_pct),
            rand_interval_vec(r, m, degenerate_pct),
            rand_interval_vec(r, n, degenerate_pct),
        )
        .unwrap();
        let x = Point::new(
            (0..m).map(|_| rand_rational(r)).collect(),
            (0..n).map(|_| rand_nonneg_rational(r)).collect(),
        );
        return (data, x);
    }
}

pub fn interval_entry_count(d: &IlpData) -> usize {
    let (k, l, m, n) = (d.num_eq(), d.num_ineq(), d.num_free(), d.num_nonneg());
    (k + l) * (m + n + 1) + m + n
}

pub fn nondegenerate_count(d: &IlpData) -> usize {
    d.af
        .entries()
        .iter()
        .chain(d.an.entries())
        .chain(d.bf.entries())
        .chain(d.bn.entries())
        .chain(&d.a)
        .chain(&d.b)
        .chain(&d.cf)
        .chain(&d.cn)
        .filter(|iv| !iv.is_degenerate())
        .count()
}

/// A small instance re-pointed to an exact optimum of its all-lower-bounds
/// corner scenario, when that LP has one. Such points are certifiable by the
/// grid oracle, which always includes the corner scenario.
pub fn rand_small_instance_with_optimal_point(r: &mut ChaCha8Rng) -> Option<(IlpData, Point)> {
    use weakopt::linsolve::{solve_lp, Sense, SolveResult};
    use weakopt::model::{RatMatrix, Scenario};
    use weakopt::weak_optimality::scenario_lp;

    let (data, _) = rand_small_instance(r);
    let lo_mat = |m: &IntervalMatrix| {
        RatMatrix::new(
            m.rows(),
            m.cols(),
            m.entries().iter().map(|iv| iv.lo().clone()).collect(),
        )
        .unwrap()
    };
    let lo_vec = |v: &[Interval]| v.iter().map(|iv| iv.lo().clone()).collect::<Vec<_>>();
    let corner = Scenario {
        af: lo_mat(&data.af),
        an: lo_mat(&data.an),
        bf: lo_mat(&data.bf),
        bn: lo_mat(&data.bn),
        a: lo_vec(&data.a),
        b: lo_vec(&data.b),
        cf: lo_vec(&data.cf),
        cn: lo_vec(&data.cn),
    };
    let (sys, objective) = scenario_lp(&corner);
    match solve_lp(&sys, &objective, Sense::Min) {
        Ok(SolveResult::Feasible { assignment, .. }) => {
            let m = data.num_free();
            let x = Point::new(assignment[..m].to_vec(), assignment[m..].to_vec());
            Some((data, x))
        }
        _ => None,
    }
}

/// A random interval inequality system `Bf x <= b` with `l, m <= 3`.
pub fn rand_system(r: &mut ChaCha8Rng) -> (IntervalMatrix, Vec<Interval>) {
    let l = r.gen_range(1..=3);
    let m = r.gen_range(1..=3);
    (
        rand_interval_matrix(r, l, m, 30),
        rand_interval_vec(r, l, 30),
    )
}

/// A crisp system with coefficients in `{-1, 0, 1}` and nonpositive right
/// sides. Conflicting rows are common, so infeasible cases show up.
pub fn rand_tight_system(r: &mut ChaCha8Rng) -> (IntervalMatrix, Vec<Interval>) {
    let l = r.gen_range(1..=3);
    let m = r.gen_range(1..=3);
    let bf = IntervalMatrix::new(
        l,
        m,
        (0..l * m)
            .map(|_| Interval::point(ratio(r.gen_range(-1..=1), 1)))
            .collect(),
    )
    .unwrap();
    let b = (0..l)
        .map(|_| Interval::point(ratio(r.gen_range(-3..=0), 1)))
        .collect();
    (bf, b)
}

/// A random linear system with every variable bounded below, so the feasible
/// set is pointed and vertex enumeration is a complete feasibility check.
pub fn rand_pointed_system(r: &mut ChaCha8Rng, max_vars: usize) -> LinearSystem {
    let n = r.gen_range(1..=max_vars);
    let mut sys = LinearSystem::new(n);
    for j in 0..n {
        sys.lower_bounds[j] = Some(rand_rational(r));
    }
    let eqs = r.gen_range(0..=n.min(2));
    for _ in 0..eqs {
        let coeffs = (0..n).map(|_| rand_rational(r)).collect();
        sys.push_eq(coeffs, rand_rational(r));
    }
    let les = r.gen_range(0..=4);
    for _ in 0..les {
        let coeffs = (0..n).map(|_| rand_rational(r)).collect();
        sys.push_le(coeffs, rand_rational(r));
    }
    sys
}

/// Duplicates random rows of the system, producing the degenerate inputs the
/// kernel must survive without cycling.
pub fn duplicate_rows(r: &mut ChaCha8Rng, sys: &mut LinearSystem) {
    for _ in 0..r.gen_range(1..=3) {
        if !sys.eq_rows.is_empty() {
            let i = r.gen_range(0..sys.eq_rows.len());
            let row = sys.eq_rows[i].clone();
            sys.eq_rows.push(row);
        }
        if !sys.le_rows.is_empty() {
            let i = r.gen_range(0..sys.le_rows.len());
            let row = sys.le_rows[i].clone();
            sys.le_rows.push(row);
        }
    }
}

/// Solves the square system `rows . x = rhs` by Gaussian elimination.
/// `None` when singular.
fn gauss_solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for c in col..=n {
            aug[col][c] = &aug[col][c] / &p;
        }
        for i in 0..n {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for c in col..=n {
                    aug[i][c] = &aug[i][c] - &f * &aug[col][c];
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Every vertex of the feasible set, by enumerating which constraints are
/// tight. Equality rows are always tight; the remaining tight set ranges
/// over inequality rows and lower bounds. Complete only for pointed systems
/// with at most `num_vars` equality rows.
pub fn feasible_vertices(sys: &LinearSystem) -> Vec<Vec<Rational>> {
    let n = sys.num_vars;
    let mut pool: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (coeffs, rhs) in &sys.le_rows {
        pool.push((coeffs.clone(), rhs.clone()));
    }
    for (j, lb) in sys.lower_bounds.iter().enumerate() {
        if let Some(lb) = lb {
            let mut e = vec![Rational::zero(); n];
            e[j] = -Rational::from_integer(1.into());
            pool.push((e, -lb.clone()));
        }
    }
    let fixed = sys.eq_rows.len().min(n);
    let need = n - fixed;
    if need > pool.len() {
        return Vec::new();
    }
    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    let mut choice: Vec<usize> = (0..need).collect();
    loop {
        {
            let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
            let mut rhs: Vec<Rational> = Vec::with_capacity(n);
            for (coeffs, r) in sys.eq_rows.iter().take(fixed) {
                rows.push(coeffs.clone());
                rhs.push(r.clone());
            }
            for &i in &choice {
                rows.push(pool[i].0.clone());
                rhs.push(pool[i].1.clone());
            }
            if let Some(candidate) = gauss_solve(&rows, &rhs) {
                if sys.satisfies(&candidate) && !vertices.contains(&candidate) {
                    vertices.push(candidate);
                }
            }
        }
        // Advance the combination of tight inequality indices.
        if need == 0 || pool.is_empty() {
            break;
        }
        let mut pos = need;
        loop {
            if pos == 0 {
                return vertices;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] <= pool.len() - (need - pos) {
                for p in pos + 1..need {
                    choice[p] = choice[p - 1] + 1;
                }
                break;
            }
        }
    }
    vertices
}

/// Reference minimum of `objective . x`, by scanning feasible vertices.
/// Valid for pointed systems with a bounded objective.
pub fn reference_min(sys: &LinearSystem, objective: &[Rational]) -> Option<Rational> {
    feasible_vertices(sys)
        .iter()
        .map(|v| objective.iter().zip(v).map(|(c, x)| c * x).sum())
        .min()
}
