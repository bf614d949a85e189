//! Closed rational intervals and interval matrices.
//!
//! These carry every uncertain coefficient of an interval linear program.
//! A degenerate interval (`lo == hi`) models a crisp coefficient. Only the
//! operations the decision procedure needs are provided: scaling by a fixed
//! rational, addition, and the exact range of a row under a fixed point.

use num_traits::Zero;

use crate::rational::{format_rational, rat, ratio, Rational};
use crate::{Error, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Invalid bounds are a construction error, never a silent swap.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: format_rational(&lo),
                hi: format_rational(&hi),
            });
        }
        Ok(Self { lo, hi })
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * ratio(1, 2)
    }

    /// `alpha * [lo, hi]`: endpoints swap when `alpha < 0`.
    pub fn scale(&self, alpha: &Rational) -> Interval {
        if alpha < &Rational::zero() {
            Interval {
                lo: alpha * &self.hi,
                hi: alpha * &self.lo,
            }
        } else {
            Interval {
                lo: alpha * &self.lo,
                hi: alpha * &self.hi,
            }
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }
}

/// Exact range `{w . x : w in v}` of a fixed point against an interval row.
pub fn interval_dot(x: &[Rational], v: &[Interval]) -> Result<Interval> {
    if x.len() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "interval_dot: point has {} entries, row has {}",
            x.len(),
            v.len()
        )));
    }
    let mut acc = Interval::zero();
    for (xj, vj) in x.iter().zip(v) {
        acc = acc.add(&vj.scale(xj));
    }
    Ok(acc)
}

/// A dense matrix of intervals, row-major, dimensions fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Interval>,
}

impl IntervalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Interval>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "interval matrix {}x{} needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Interval>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    ncols
                )));
            }
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// All-zero degenerate entries.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Interval::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Interval {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Interval] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Interval] {
        &self.entries
    }

    /// Entrywise interval transpose.
    pub fn transpose(&self) -> IntervalMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        IntervalMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }
}

/// Convenience constructor used by tests and examples: `[lo, hi]` from i64.
pub fn ival(lo: i64, hi: i64) -> Interval {
    Interval::new(rat(lo), rat(hi)).unwrap()
}
