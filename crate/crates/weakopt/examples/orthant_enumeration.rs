//! Equality constraints force an enumeration of dual sign orthants.
//!
//! Each equality row carries an unrestricted dual multiplier, and the
//! linearization of the testing system only works once its sign is fixed.
//! The solver therefore tries up to `2^k` orthants in lexicographic order
//! (`+1` before `-1`), stopping at the first feasible one. Exhaustive mode
//! keeps going and records every feasible orthant.

use weakopt::instance::parse_instance;
use weakopt::{decide_weak_optimality, DecideOptions, Verdict};

fn main() {
    let inst = parse_instance(include_str!("../instances/triangle_eq.json")).unwrap();
    let x = inst.point.clone().unwrap();

    let opts = DecideOptions {
        exhaustive: true,
        parallel: false,
    };
    let decision = decide_weak_optimality(&inst.data, &x, &opts).unwrap();
    let Verdict::WeaklyOptimal(w) = &decision.verdict else {
        panic!("expected weakly optimal");
    };
    println!("k = {} equality rows, {} orthants tried", inst.data.num_eq(), decision.stats.orthants_tried);
    for sigma in &decision.stats.feasible_orthants {
        let signs: Vec<i8> = sigma.iter().map(|s| s.as_i8()).collect();
        println!("feasible orthant: {signs:?}");
    }
    let signs: Vec<i8> = w.sigma.iter().map(|s| s.as_i8()).collect();
    let yf: Vec<String> = w.yf.iter().map(|r| r.to_string()).collect();
    println!("witness comes from the first feasible orthant {signs:?}, yf = [{}]", yf.join(", "));

    // The parallel schedule returns the identical witness.
    let par = DecideOptions {
        exhaustive: false,
        parallel: true,
    };
    let d2 = decide_weak_optimality(&inst.data, &x, &par).unwrap();
    let Verdict::WeaklyOptimal(w2) = &d2.verdict else { panic!() };
    assert_eq!(w, w2);
    println!("parallel run agrees");
}
