//! Inequality-only programs need one feasibility solve, not an enumeration.
//!
//! With no equality constraints the dual multipliers of the inequality rows
//! are sign-constrained a priori, so the disjunctive testing system collapses
//! to a single linear feasibility problem regardless of problem size. The
//! instance here has three interval inequality rows in two free variables.

use weakopt::instance::parse_instance;
use weakopt::{decide_weak_optimality, DecideOptions, Rational, Verdict};

fn fmt(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() {
    let inst = parse_instance(include_str!("../instances/triangle.json")).unwrap();
    let x = inst.point.clone().unwrap();

    let decision = decide_weak_optimality(&inst.data, &x, &DecideOptions::default()).unwrap();
    match &decision.verdict {
        Verdict::WeaklyOptimal(w) => {
            println!("weakly optimal at xf = {}", fmt(&x.xf));
            println!("inequality duals yn = {}", fmt(&w.yn));
            for i in 0..w.scenario.bf.rows() {
                println!("scenario row {i}: {} >= {}", fmt(w.scenario.bf.row(i)), w.scenario.b[i]);
            }
        }
        other => panic!("unexpected verdict {:?}", other),
    }
    println!(
        "testing systems solved: {} (k = 0, so exactly one)",
        decision.stats.lp_solves
    );

    // Adding a fourth row that no scenario satisfies at this point flips the
    // verdict before any testing system is built.
    let worse = parse_instance(include_str!("../instances/triangle_infeasible.json")).unwrap();
    let d = decide_weak_optimality(&worse.data, &x, &DecideOptions::default()).unwrap();
    assert!(matches!(d.verdict, Verdict::NotWeaklyFeasible));
    println!("with the extra row: not weakly feasible, {} solves", d.stats.lp_solves);
}
