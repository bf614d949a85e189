//! Why checking a single fixed scenario is not enough.
//!
//! The program is `min x2` subject to `[0,2] x1 + [0,2] x2 = 2`, `x >= 0`.
//! At the midpoint scenario (both coefficients 1) the point `x = (1, 1)` has
//! objective value 1 while `(2, 0)` achieves 0, so the midpoint check says
//! "not optimal". But the scenario with coefficients `(0, 2)` forces
//! `x2 = 1`, making `(1, 1)` optimal there. The point is weakly optimal and
//! the decision procedure finds that certifying scenario.

use weakopt::instance::parse_instance;
use weakopt::weak_optimality::verify_witness_detailed;
use weakopt::{decide_weak_optimality, DecideOptions, Verdict, Witness};

fn main() {
    let inst = parse_instance(include_str!("../instances/counterexample.json")).unwrap();
    let x = inst.point.clone().unwrap();

    let decision = decide_weak_optimality(&inst.data, &x, &DecideOptions::default()).unwrap();
    let Verdict::WeaklyOptimal(witness) = &decision.verdict else {
        panic!("expected a weakly optimal verdict");
    };
    let row: Vec<String> = witness.scenario.an.row(0).iter().map(|r| r.to_string()).collect();
    println!("verdict: weakly optimal");
    println!("certifying equality row: [{}]", row.join(", "));
    println!("right-hand side:         {}", witness.scenario.a[0]);
    println!("dual multiplier yf:      {}", witness.yf[0]);

    // The same duals do not certify the midpoint scenario.
    let midpoint = Witness {
        scenario: inst.data.midpoint_scenario(),
        ..witness.clone()
    };
    match verify_witness_detailed(&inst.data, &x, &midpoint) {
        Ok(()) => panic!("midpoint scenario must not verify"),
        Err(violation) => println!("midpoint scenario rejected: {violation}"),
    }
}
