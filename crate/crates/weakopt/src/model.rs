//! Data model of an interval linear program.
//!
//! An instance is the 8-tuple of interval blocks
//! `(Af, An, Bf, Bn, a, b, cf, cn)` describing the family
//!
//! ```text
//! min  cf.xf + cn.xn
//! s.t. Af xf + An xn  = a        (k equality rows)
//!      Bf xf + Bn xn >= b        (l inequality rows)
//!              xn    >= 0
//! ```
//!
//! with `m` free and `n` nonnegative variables. A [`Scenario`] is one
//! real-valued selection from every interval; it fixes a classical LP.
//! All types are immutable after construction and safe to share across
//! threads.

use num_traits::Zero;

use crate::interval::{Interval, IntervalMatrix};
use crate::rational::Rational;
use crate::{Error, Result};

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
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

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `A x` for a dense vector of matching length.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "mul_vec: matrix has {} cols, vector has {}",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Column sum `e^T A` restricted to column `j`.
    pub fn col_sum(&self, j: usize) -> Rational {
        (0..self.rows).map(|i| self.get(i, j).clone()).sum()
    }
}

/// Interval blocks of an interval linear program.
///
/// Any of the four dimensions may be zero; empty blocks are first-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpData {
    pub af: IntervalMatrix,
    pub an: IntervalMatrix,
    pub bf: IntervalMatrix,
    pub bn: IntervalMatrix,
    pub a: Vec<Interval>,
    pub b: Vec<Interval>,
    pub cf: Vec<Interval>,
    pub cn: Vec<Interval>,
}

impl IlpData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        af: IntervalMatrix,
        an: IntervalMatrix,
        bf: IntervalMatrix,
        bn: IntervalMatrix,
        a: Vec<Interval>,
        b: Vec<Interval>,
        cf: Vec<Interval>,
        cn: Vec<Interval>,
    ) -> Result<Self> {
        let (k, l, m, n) = (af.rows(), bf.rows(), af.cols(), an.cols());
        let check = |cond: bool, what: &str| {
            if cond {
                Ok(())
            } else {
                Err(Error::DimensionMismatch(format!("ILP data: {what}")))
            }
        };
        check(an.rows() == k, "An row count must equal Af row count (k)")?;
        check(bn.rows() == l, "Bn row count must equal Bf row count (l)")?;
        check(bf.cols() == m, "Bf column count must equal Af column count (m)")?;
        check(bn.cols() == n, "Bn column count must equal An column count (n)")?;
        check(a.len() == k, "a must have k entries")?;
        check(b.len() == l, "b must have l entries")?;
        check(cf.len() == m, "cf must have m entries")?;
        check(cn.len() == n, "cn must have n entries")?;
        Ok(Self { af, an, bf, bn, a, b, cf, cn })
    }

    /// Number of equality rows.
    pub fn num_eq(&self) -> usize {
        self.af.rows()
    }

    /// Number of inequality rows.
    pub fn num_ineq(&self) -> usize {
        self.bf.rows()
    }

    /// Number of free variables.
    pub fn num_free(&self) -> usize {
        self.af.cols()
    }

    /// Number of nonnegative variables.
    pub fn num_nonneg(&self) -> usize {
        self.an.cols()
    }

    /// The scenario picking every interval's midpoint.
    pub fn midpoint_scenario(&self) -> Scenario {
        let mid_mat = |m: &IntervalMatrix| {
            RatMatrix::new(
                m.rows(),
                m.cols(),
                m.entries().iter().map(Interval::midpoint).collect(),
            )
            .expect("shape preserved")
        };
        let mid_vec = |v: &[Interval]| v.iter().map(Interval::midpoint).collect();
        Scenario {
            af: mid_mat(&self.af),
            an: mid_mat(&self.an),
            bf: mid_mat(&self.bf),
            bn: mid_mat(&self.bn),
            a: mid_vec(&self.a),
            b: mid_vec(&self.b),
            cf: mid_vec(&self.cf),
            cn: mid_vec(&self.cn),
        }
    }
}

/// One real-valued realization of every block of an [`IlpData`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub af: RatMatrix,
    pub an: RatMatrix,
    pub bf: RatMatrix,
    pub bn: RatMatrix,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub cf: Vec<Rational>,
    pub cn: Vec<Rational>,
}

/// Candidate solution `x = (xf, xn)`.
///
/// `xn >= 0` is checked by the feasibility operations, not at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub xf: Vec<Rational>,
    pub xn: Vec<Rational>,
}

impl Point {
    pub fn new(xf: Vec<Rational>, xn: Vec<Rational>) -> Self {
        Self { xf, xn }
    }
}

/// Orthant sign of a free dual variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A scenario plus dual multipliers certifying weak optimality of a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub scenario: Scenario,
    /// Multipliers of the equality rows (free, sign fixed per `sigma`).
    pub yf: Vec<Rational>,
    /// Multipliers of the inequality rows (nonnegative).
    pub yn: Vec<Rational>,
    /// Orthant in which the certificate was found; empty when there are no
    /// equality rows.
    pub sigma: Vec<Sign>,
}

/// Decision outcome. A witness is present exactly in the `WeaklyOptimal` case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    WeaklyOptimal(Witness),
    NotWeaklyOptimal,
    /// The point is feasible for no scenario at all, which already rules out
    /// weak optimality.
    NotWeaklyFeasible,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::WeaklyOptimal(_) => "weakly_optimal",
            Verdict::NotWeaklyOptimal => "not_weakly_optimal",
            Verdict::NotWeaklyFeasible => "not_weakly_feasible",
        }
    }

    pub fn is_weakly_optimal(&self) -> bool {
        matches!(self, Verdict::WeaklyOptimal(_))
    }
}

/// True iff every entry of every block of `s` lies in its interval
/// (closed bounds, exact comparison).
pub fn scenario_contains(data: &IlpData, s: &Scenario) -> Result<bool> {
    let mat_ok = |iv: &IntervalMatrix, re: &RatMatrix, name: &str| -> Result<bool> {
        if iv.rows() != re.rows() || iv.cols() != re.cols() {
            return Err(Error::DimensionMismatch(format!(
                "scenario block {name}: {}x{} vs {}x{}",
                iv.rows(),
                iv.cols(),
                re.rows(),
                re.cols()
            )));
        }
        Ok(iv.entries().iter().zip(re.entries()).all(|(i, x)| i.contains(x)))
    };
    let vec_ok = |iv: &[Interval], re: &[Rational], name: &str| -> Result<bool> {
        if iv.len() != re.len() {
            return Err(Error::DimensionMismatch(format!(
                "scenario vector {name}: {} vs {}",
                iv.len(),
                re.len()
            )));
        }
        Ok(iv.iter().zip(re).all(|(i, x)| i.contains(x)))
    };
    Ok(mat_ok(&data.af, &s.af, "Af")?
        && mat_ok(&data.an, &s.an, "An")?
        && mat_ok(&data.bf, &s.bf, "Bf")?
        && mat_ok(&data.bn, &s.bn, "Bn")?
        && vec_ok(&data.a, &s.a, "a")?
        && vec_ok(&data.b, &s.b, "b")?
        && vec_ok(&data.cf, &s.cf, "cf")?
        && vec_ok(&data.cn, &s.cn, "cn")?)
}
