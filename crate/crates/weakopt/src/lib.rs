//! Weak-optimality testing for interval linear programs.
//!
//! An interval linear program is a family of linear programs whose
//! coefficients range independently over closed intervals. A point is a
//! *weakly optimal solution* if it is optimal for at least one member of the
//! family (a *scenario*). This crate decides that question for a given point
//! with exact rational arithmetic, and when the answer is yes it produces a
//! concrete witness scenario together with dual multipliers that satisfy the
//! strong-duality system, so the verdict can be re-checked independently.
//!
//! The decision procedure enumerates sign orthants of the dual variables
//! attached to equality constraints and solves one linear feasibility system
//! per orthant (`2^k` systems for `k` equality rows, a single system when
//! the program has inequality constraints only). The crate also ships the
//! reduction that makes the problem NP-hard, and brute-force oracles used to
//! cross-validate the decision procedure on small instances.
//!
//! See the `examples/` directory for a runnable tour of each capability,
//! and the `weakopt` binary for a JSON command-line front end.

pub mod instance;
pub mod interval;
pub mod linsolve;
pub mod model;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod weak_feasibility;
pub mod weak_optimality;

#[cfg(test)]
pub(crate) mod testdata;

pub use interval::{interval_dot, Interval, IntervalMatrix};
pub use model::{scenario_contains, IlpData, Point, RatMatrix, Scenario, Sign, Verdict, Witness};
pub use rational::{parse_rational, rat, ratio, Rational};
pub use weak_optimality::{decide_weak_optimality, verify_witness, DecideOptions, Decision};

use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("interval lower bound exceeds upper: [{lo}, {hi}]")]
    InvalidInterval { lo: String, hi: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("zero denominator in rational `{0}`")]
    ZeroDenominator(String),
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("row {0} cannot be satisfied at the given point for any scenario")]
    RowInfeasibleAtPoint(usize),
    #[error("enumeration budget exceeded: {needed} scenarios, limit {limit}")]
    BudgetExceeded { needed: u64, limit: u64 },
    #[error("brute-force variable cap exceeded: {vars} variables, cap {cap}")]
    VariableCapExceeded { vars: usize, cap: usize },
    #[error("extracted witness failed verification ({0}); this is a bug in the solver")]
    InternalWitnessInvalid(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
