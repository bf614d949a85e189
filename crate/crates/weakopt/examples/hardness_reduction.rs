//! The reduction that makes weak optimality testing NP-hard.
//!
//! Weak feasibility of an interval inequality system `Bf x <= b` (free `x`)
//! is NP-complete. The transformation below turns any such system into a
//! weak-optimality query: build the program `min 0 . y` subject to
//! `Bf^T y = 0, y >= 0` with interval data, and ask whether `y = 0` is
//! weakly optimal. The dual multipliers of the equality rows are exactly the
//! `x` of the original system, so the answer is yes iff the system is weakly
//! feasible.

use weakopt::instance::parse_system;
use weakopt::oracle::weak_feasibility_system_bruteforce;
use weakopt::reduction::reduce_weak_feasibility_to_weak_optimality;
use weakopt::{decide_weak_optimality, DecideOptions, Verdict};

fn main() {
    let sys = parse_system(include_str!("../instances/system_small.json")).unwrap();
    println!(
        "input system: {} interval rows in {} free variables",
        sys.bf.rows(),
        sys.bf.cols()
    );

    let (data, point) = reduce_weak_feasibility_to_weak_optimality(&sys.bf, &sys.b).unwrap();
    println!(
        "reduced instance: k = {} equality rows, n = {} nonnegative variables, point = 0",
        data.num_eq(),
        data.num_nonneg()
    );

    let decision = decide_weak_optimality(&data, &point, &DecideOptions::default()).unwrap();
    let weakly_optimal = matches!(decision.verdict, Verdict::WeaklyOptimal(_));
    println!("zero point weakly optimal: {weakly_optimal}");

    // Cross-check against the direct orthant brute force on the original
    // system. The two answers must always agree.
    let direct = weak_feasibility_system_bruteforce(&sys.bf, &sys.b, 12).unwrap();
    println!("system weakly feasible (brute force): {direct}");
    assert_eq!(weakly_optimal, direct);
}
