//! Hardness reduction: weak feasibility of an interval inequality system as
//! weak optimality of a point.
//!
//! Given an interval system `Bf x <= b` with free variables, the transformer
//! emits the interval program
//!
//! ```text
//! min cn.xn  s.t.  An xn = 0, xn >= 0
//! ```
//!
//! with `An = (Bf)^T` (entrywise interval transpose), `cn = b`, and the
//! candidate point `x = 0`. The point is weakly optimal for the output
//! exactly when the input system is weakly feasible, which is what makes the
//! weak-optimality question NP-hard. The transformer doubles as a generator
//! of hard test instances.

use crate::interval::{Interval, IntervalMatrix};
use crate::model::{IlpData, Point};
use crate::rational::Rational;
use crate::Result;
use num_traits::Zero;

/// Builds the decision-equivalent weak-optimality instance `(data, x = 0)`
/// from inequality-system data `(Bf, b)`.
pub fn reduce_weak_feasibility_to_weak_optimality(
    bf: &IntervalMatrix,
    b: &[Interval],
) -> Result<(IlpData, Point)> {
    let l = bf.rows();
    let m = bf.cols();
    if b.len() != l {
        return Err(crate::Error::DimensionMismatch(format!(
            "system has {} rows but {} right-hand sides",
            l,
            b.len()
        )));
    }
    // Output shape: k = m equality rows, n = l nonnegative variables,
    // everything else empty.
    let data = IlpData::new(
        IntervalMatrix::zeros(m, 0),
        bf.transpose(),
        IntervalMatrix::zeros(0, 0),
        IntervalMatrix::zeros(0, l),
        vec![Interval::zero(); m],
        vec![],
        vec![],
        b.to_vec(),
    )?;
    let x = Point::new(vec![], vec![Rational::zero(); l]);
    Ok((data, x))
}
