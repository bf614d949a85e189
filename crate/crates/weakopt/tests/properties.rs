//! Randomized invariants of the decision procedure, cross-checked against
//! independent constructions. All generators are seeded, so failures are
//! reproducible.

mod common;

use common::{rand_instance, rng};
use weakopt::interval::{Interval, IntervalMatrix};
use weakopt::model::{scenario_contains, IlpData, Verdict};
use weakopt::rational::ratio;
use weakopt::weak_feasibility::check_point_weak_feasibility;
use weakopt::weak_optimality::{decide_weak_optimality, verify_witness, DecideOptions};

fn widen_matrix(m: &IntervalMatrix, delta: &weakopt::Rational) -> IntervalMatrix {
    IntervalMatrix::new(
        m.rows(),
        m.cols(),
        m.entries()
            .iter()
            .map(|iv| Interval::new(iv.lo() - delta, iv.hi() + delta).unwrap())
            .collect(),
    )
    .unwrap()
}

fn widen_vec(v: &[Interval], delta: &weakopt::Rational) -> Vec<Interval> {
    v.iter()
        .map(|iv| Interval::new(iv.lo() - delta, iv.hi() + delta).unwrap())
        .collect()
}

fn widen(d: &IlpData, delta: &weakopt::Rational) -> IlpData {
    IlpData::new(
        widen_matrix(&d.af, delta),
        widen_matrix(&d.an, delta),
        widen_matrix(&d.bf, delta),
        widen_matrix(&d.bn, delta),
        widen_vec(&d.a, delta),
        widen_vec(&d.b, delta),
        widen_vec(&d.cf, delta),
        widen_vec(&d.cn, delta),
    )
    .unwrap()
}

#[test]
fn widening_intervals_preserves_weak_optimality() {
    let mut r = rng(11);
    let delta = ratio(1, 2);
    let mut hits = 0;
    for _ in 0..200 {
        let (data, x) = rand_instance(&mut r);
        let d = decide_weak_optimality(&data, &x, &DecideOptions::default()).unwrap();
        if matches!(d.verdict, Verdict::WeaklyOptimal(_)) {
            hits += 1;
            let wide = widen(&data, &delta);
            let d2 = decide_weak_optimality(&wide, &x, &DecideOptions::default()).unwrap();
            assert!(
                matches!(d2.verdict, Verdict::WeaklyOptimal(_)),
                "widening the intervals removed a witness"
            );
        }
    }
    assert!(hits >= 10, "population too easy: only {hits} weakly optimal points");
}

#[test]
fn negating_an_equality_row_preserves_the_verdict() {
    let mut r = rng(12);
    let mut checked = 0;
    for _ in 0..200 {
        let (data, x) = rand_instance(&mut r);
        if data.num_eq() == 0 {
            continue;
        }
        checked += 1;
        let neg = |m: &IntervalMatrix| {
            IntervalMatrix::new(
                m.rows(),
                m.cols(),
                m.entries()
                    .iter()
                    .enumerate()
                    .map(|(idx, iv)| {
                        if idx / m.cols() == 0 {
                            Interval::new(-iv.hi(), -iv.lo()).unwrap()
                        } else {
                            iv.clone()
                        }
                    })
                    .collect(),
            )
            .unwrap()
        };
        let mut a = data.a.clone();
        a[0] = Interval::new(-data.a[0].hi(), -data.a[0].lo()).unwrap();
        let flipped = IlpData::new(
            neg(&data.af),
            neg(&data.an),
            data.bf.clone(),
            data.bn.clone(),
            a,
            data.b.clone(),
            data.cf.clone(),
            data.cn.clone(),
        )
        .unwrap();
        let d1 = decide_weak_optimality(&data, &x, &DecideOptions::default()).unwrap();
        let d2 = decide_weak_optimality(&flipped, &x, &DecideOptions::default()).unwrap();
        assert_eq!(d1.verdict.tag(), d2.verdict.tag());
    }
    assert!(checked >= 50);
}

#[test]
fn witness_scenario_lies_inside_the_intervals() {
    let mut r = rng(13);
    for _ in 0..200 {
        let (data, x) = rand_instance(&mut r);
        let d = decide_weak_optimality(&data, &x, &DecideOptions::default()).unwrap();
        if let Verdict::WeaklyOptimal(w) = &d.verdict {
            assert!(scenario_contains(&data, &w.scenario).unwrap());
            assert!(verify_witness(&data, &x, w));
        }
    }
}

#[test]
fn verdict_consistent_with_weak_feasibility_precheck() {
    let mut r = rng(14);
    for _ in 0..200 {
        let (data, x) = rand_instance(&mut r);
        let feasible = check_point_weak_feasibility(&data, &x).unwrap();
        let d = decide_weak_optimality(&data, &x, &DecideOptions::default()).unwrap();
        match d.verdict {
            Verdict::NotWeaklyFeasible => assert!(!feasible),
            _ => assert!(feasible),
        }
    }
}

#[test]
fn parallel_and_exhaustive_schedules_agree_with_sequential() {
    let mut r = rng(15);
    for _ in 0..100 {
        let (data, x) = rand_instance(&mut r);
        let seq = decide_weak_optimality(&data, &x, &DecideOptions::default()).unwrap();
        let par = decide_weak_optimality(
            &data,
            &x,
            &DecideOptions {
                parallel: true,
                exhaustive: false,
            },
        )
        .unwrap();
        let exh = decide_weak_optimality(
            &data,
            &x,
            &DecideOptions {
                parallel: false,
                exhaustive: true,
            },
        )
        .unwrap();
        assert_eq!(seq.verdict.tag(), par.verdict.tag());
        assert_eq!(seq.verdict.tag(), exh.verdict.tag());
        if let (Verdict::WeaklyOptimal(a), Verdict::WeaklyOptimal(b), Verdict::WeaklyOptimal(c)) =
            (&seq.verdict, &par.verdict, &exh.verdict)
        {
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }
}
