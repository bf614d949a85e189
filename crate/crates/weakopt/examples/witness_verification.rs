//! Certificates are machine-checkable, and the checker is independent.
//!
//! A witness bundles a concrete scenario with dual multipliers. Verification
//! re-checks interval membership, primal feasibility, dual feasibility,
//! complementary slackness, and multiplier signs, then re-solves the fixed
//! scenario LP from scratch to confirm the point is optimal. Tampering with
//! any part of the witness is caught and named.

use weakopt::instance::parse_instance;
use weakopt::rational::rat;
use weakopt::weak_optimality::verify_witness_detailed;
use weakopt::{decide_weak_optimality, DecideOptions, Verdict};

fn main() {
    let inst = parse_instance(include_str!("../instances/counterexample.json")).unwrap();
    let x = inst.point.clone().unwrap();

    let decision = decide_weak_optimality(&inst.data, &x, &DecideOptions::default()).unwrap();
    let Verdict::WeaklyOptimal(witness) = decision.verdict else {
        panic!("expected weakly optimal");
    };
    verify_witness_detailed(&inst.data, &x, &witness).unwrap();
    println!("original witness verifies");

    // Zero out the equality multiplier: complementary slackness breaks.
    let mut tampered = witness.clone();
    tampered.yf[0] = rat(0);
    match verify_witness_detailed(&inst.data, &x, &tampered) {
        Err(v) => println!("zeroed multiplier rejected: {v}"),
        Ok(()) => panic!("tampered witness must fail"),
    }

    // Swap in a different scenario while keeping the duals: dual feasibility
    // no longer holds.
    let mut swapped = witness.clone();
    swapped.scenario = inst.data.midpoint_scenario();
    match verify_witness_detailed(&inst.data, &x, &swapped) {
        Err(v) => println!("foreign scenario rejected: {v}"),
        Ok(()) => panic!("tampered witness must fail"),
    }
}
