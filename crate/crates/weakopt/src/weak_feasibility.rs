//! Weak feasibility of a fixed point, row by row.
//!
//! Distinct rows of an interval linear program carry independent interval
//! entries, so feasibility of a fixed point decouples: an equality row can be
//! satisfied by some scenario iff the exact range of the row at the point
//! meets the right-hand-side interval, and an inequality row iff the top of
//! that range reaches the lowest admissible right-hand side. This gives the
//! O(rows) check below, plus per-row scenario completions used when a
//! certificate leaves a row's multiplier at zero.

use num_traits::Zero;

use crate::interval::{interval_dot, Interval};
use crate::linsolve::{solve_feasibility, LinearSystem};
use crate::model::{IlpData, Point};
use crate::rational::Rational;
use crate::{Error, Result};

/// Addresses one constraint row of an [`IlpData`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Equality(usize),
    Inequality(usize),
}

/// Exact range of row `row` evaluated at `x`.
fn row_range(data: &IlpData, x: &Point, row: RowKind) -> Result<Interval> {
    let (free, nonneg) = match row {
        RowKind::Equality(i) => (data.af.row(i), data.an.row(i)),
        RowKind::Inequality(i) => (data.bf.row(i), data.bn.row(i)),
    };
    Ok(interval_dot(&x.xf, free)?.add(&interval_dot(&x.xn, nonneg)?))
}

fn row_admits_x(data: &IlpData, x: &Point, row: RowKind) -> Result<bool> {
    let range = row_range(data, x, row)?;
    Ok(match row {
        RowKind::Equality(i) => range.intersect(&data.a[i]).is_some(),
        RowKind::Inequality(i) => range.hi() >= data.b[i].lo(),
    })
}

/// True iff `x` is feasible for at least one scenario of the system part of
/// `data`. A point with a negative nonnegative-block entry is simply not
/// weakly feasible, not an error.
pub fn check_point_weak_feasibility(data: &IlpData, x: &Point) -> Result<bool> {
    if x.xf.len() != data.num_free() || x.xn.len() != data.num_nonneg() {
        return Err(Error::DimensionMismatch(format!(
            "point is ({}, {}), program has ({}, {}) variables",
            x.xf.len(),
            x.xn.len(),
            data.num_free(),
            data.num_nonneg()
        )));
    }
    if x.xn.iter().any(|v| v < &Rational::zero()) {
        return Ok(false);
    }
    for i in 0..data.num_eq() {
        if !row_admits_x(data, x, RowKind::Equality(i))? {
            return Ok(false);
        }
    }
    for i in 0..data.num_ineq() {
        if !row_admits_x(data, x, RowKind::Inequality(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Picks concrete row coefficients and a right-hand side inside their
/// intervals so the row holds at `x` (with equality for equality rows).
///
/// For equality rows the target is the midpoint of the intersection of the
/// row range with the rhs interval; any point would do, the midpoint keeps
/// the choice deterministic and away from endpoint degeneracy. The
/// coefficients themselves come from one small feasibility solve.
pub fn complete_row_scenario(
    data: &IlpData,
    x: &Point,
    row: RowKind,
) -> Result<(Vec<Rational>, Rational)> {
    if !row_admits_x(data, x, row)? {
        let idx = match row {
            RowKind::Equality(i) | RowKind::Inequality(i) => i,
        };
        return Err(Error::RowInfeasibleAtPoint(idx));
    }
    let (free, nonneg, rhs_iv) = match row {
        RowKind::Equality(i) => (data.af.row(i), data.an.row(i), &data.a[i]),
        RowKind::Inequality(i) => (data.bf.row(i), data.bn.row(i), &data.b[i]),
    };
    let point: Vec<Rational> = x.xf.iter().chain(&x.xn).cloned().collect();
    let entries: Vec<&Interval> = free.iter().chain(nonneg).collect();
    let width = entries.len();

    match row {
        RowKind::Equality(_) => {
            let range = row_range(data, x, row)?;
            let target = range
                .intersect(rhs_iv)
                .expect("row_admits_x checked the intersection")
                .midpoint();
            // Variables: the row coefficients, boxed to their intervals,
            // meeting coeff . x = target.
            let mut sys = LinearSystem::new(width);
            sys.names = (0..width).map(|j| format!("w{j}")).collect();
            for (j, iv) in entries.iter().enumerate() {
                sys.lower_bounds[j] = Some(iv.lo().clone());
                let mut coeffs = vec![Rational::zero(); width];
                coeffs[j] = Rational::from_integer(1.into());
                sys.push_le(coeffs, iv.hi().clone());
            }
            sys.push_eq(point, target.clone());
            let sol = solve_feasibility(&sys)?;
            let assignment = sol
                .assignment()
                .expect("intersection nonempty implies a realizable row")
                .to_vec();
            Ok((assignment, target))
        }
        RowKind::Inequality(_) => {
            // Variables: row coefficients plus the rhs, meeting coeff . x >= rhs.
            let mut sys = LinearSystem::new(width + 1);
            sys.names = (0..width).map(|j| format!("w{j}")).chain(["rhs".into()]).collect();
            for (j, iv) in entries.iter().enumerate() {
                sys.lower_bounds[j] = Some(iv.lo().clone());
                let mut coeffs = vec![Rational::zero(); width + 1];
                coeffs[j] = Rational::from_integer(1.into());
                sys.push_le(coeffs, iv.hi().clone());
            }
            sys.lower_bounds[width] = Some(rhs_iv.lo().clone());
            let mut up = vec![Rational::zero(); width + 1];
            up[width] = Rational::from_integer(1.into());
            sys.push_le(up, rhs_iv.hi().clone());
            let mut ge = point.clone();
            ge.push(Rational::from_integer((-1).into()));
            sys.push_ge(ge, Rational::zero());
            let sol = solve_feasibility(&sys)?;
            let mut assignment = sol
                .assignment()
                .expect("row_admits_x guarantees a realization")
                .to_vec();
            let rhs = assignment.pop().expect("rhs variable present");
            Ok((assignment, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{ival, IntervalMatrix};
    use crate::rational::rat;
    use crate::testdata::{counterexample_data, triangle_data};

    #[test]
    fn counterexample_point_is_weakly_feasible() {
        let data = counterexample_data();
        let x = Point::new(vec![], vec![rat(1), rat(1)]);
        assert!(check_point_weak_feasibility(&data, &x).unwrap());
    }

    #[test]
    fn fourth_constraint_kills_feasibility() {
        let x = Point::new(vec![rat(2), rat(1)], vec![]);
        assert!(check_point_weak_feasibility(&triangle_data(false), &x).unwrap());
        assert!(!check_point_weak_feasibility(&triangle_data(true), &x).unwrap());
    }

    #[test]
    fn all_zero_data_accepts_origin() {
        let data = IlpData::new(
            IntervalMatrix::zeros(1, 1),
            IntervalMatrix::zeros(1, 1),
            IntervalMatrix::zeros(1, 1),
            IntervalMatrix::zeros(1, 1),
            vec![ival(0, 0)],
            vec![ival(0, 0)],
            vec![ival(0, 0)],
            vec![ival(0, 0)],
        )
        .unwrap();
        let x = Point::new(vec![rat(0)], vec![rat(0)]);
        assert!(check_point_weak_feasibility(&data, &x).unwrap());
    }

    #[test]
    fn negative_xn_is_not_weakly_feasible() {
        let data = counterexample_data();
        let x = Point::new(vec![], vec![rat(-1), rat(3)]);
        assert!(!check_point_weak_feasibility(&data, &x).unwrap());
    }

    #[test]
    fn completes_counterexample_row() {
        let data = counterexample_data();
        let x = Point::new(vec![], vec![rat(1), rat(1)]);
        let (coeffs, rhs) = complete_row_scenario(&data, &x, RowKind::Equality(0)).unwrap();
        assert_eq!(rhs, rat(2));
        assert_eq!(&coeffs[0] + &coeffs[1], rat(2));
        for c in &coeffs {
            assert!((&rat(0)..=&rat(2)).contains(&c));
        }
    }

    #[test]
    fn completes_triangle_row3() {
        let data = triangle_data(false);
        let x = Point::new(vec![rat(2), rat(1)], vec![]);
        let (coeffs, rhs) = complete_row_scenario(&data, &x, RowKind::Inequality(2)).unwrap();
        let value = &coeffs[0] * &rat(2) + &coeffs[1] * &rat(1);
        assert!(value >= rhs);
        assert!(data.bf.get(2, 0).contains(&coeffs[0]));
        assert!(data.bf.get(2, 1).contains(&coeffs[1]));
        assert!(data.b[2].contains(&rhs));
    }

    #[test]
    fn degenerate_row_completes_to_unique_realization() {
        let data = IlpData::new(
            IntervalMatrix::zeros(0, 1),
            IntervalMatrix::zeros(0, 0),
            IntervalMatrix::from_rows(vec![vec![ival(3, 3)]]).unwrap(),
            IntervalMatrix::zeros(1, 0),
            vec![],
            vec![ival(-1, -1)],
            vec![ival(0, 0)],
            vec![],
        )
        .unwrap();
        let x = Point::new(vec![rat(1)], vec![]);
        let (coeffs, rhs) = complete_row_scenario(&data, &x, RowKind::Inequality(0)).unwrap();
        assert_eq!(coeffs, vec![rat(3)]);
        assert_eq!(rhs, rat(-1));
    }

    #[test]
    fn infeasible_row_is_reported() {
        let data = triangle_data(true);
        let x = Point::new(vec![rat(2), rat(1)], vec![]);
        assert!(matches!(
            complete_row_scenario(&data, &x, RowKind::Inequality(3)),
            Err(Error::RowInfeasibleAtPoint(3))
        ));
    }
}
