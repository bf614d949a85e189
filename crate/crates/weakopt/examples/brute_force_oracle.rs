//! The scenario-grid oracle: slow, simple, and good for cross-validation.
//!
//! The oracle enumerates scenarios on a finite grid (interval endpoints plus
//! evenly spaced interior points) and checks each fixed LP for optimality of
//! the point by re-solving it. A hit is a standalone proof of weak
//! optimality; a miss proves nothing, since a witness may need scenario
//! values the grid does not contain.

use weakopt::instance::parse_instance;
use weakopt::oracle::{corner_grid_oracle, OracleOutcome};
use weakopt::{decide_weak_optimality, DecideOptions, Verdict};

fn main() {
    let inst = parse_instance(include_str!("../instances/counterexample.json")).unwrap();
    let x = inst.point.clone().unwrap();

    // Depth 0 means endpoints only: 2 values per nondegenerate interval.
    match corner_grid_oracle(&inst.data, &x, 0).unwrap() {
        OracleOutcome::Certified(s) => {
            let row: Vec<String> = s.an.row(0).iter().map(|r| r.to_string()).collect();
            println!("oracle certified scenario An = [{}], a = {}", row.join(", "), s.a[0]);
        }
        OracleOutcome::Inconclusive => panic!("a corner certificate exists here"),
    }

    // The decision procedure must agree whenever the oracle certifies.
    let d = decide_weak_optimality(&inst.data, &x, &DecideOptions::default()).unwrap();
    assert!(matches!(d.verdict, Verdict::WeaklyOptimal(_)));
    println!("decision procedure agrees: weakly optimal");

    // On a point that is not even weakly feasible the oracle finds nothing.
    let worse = parse_instance(include_str!("../instances/triangle_infeasible.json")).unwrap();
    let y = worse.point.clone().unwrap();
    assert_eq!(
        corner_grid_oracle(&worse.data, &y, 1).unwrap(),
        OracleOutcome::Inconclusive
    );
    println!("infeasible point: oracle inconclusive, as expected");
}
