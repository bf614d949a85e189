//! Golden fixtures shared by unit tests.

use crate::interval::{ival, Interval, IntervalMatrix};
use crate::model::{IlpData, Point};
use crate::rational::{rat, ratio};

/// min (0,1).xn s.t. ([0,2],[0,2]) xn = 2, xn >= 0 — the instance on which
/// the fixed-scenario shortcut gives the wrong answer for x = (1,1).
pub(crate) fn counterexample_data() -> IlpData {
    IlpData::new(
        IntervalMatrix::zeros(1, 0),
        IntervalMatrix::from_rows(vec![vec![ival(0, 2), ival(0, 2)]]).unwrap(),
        IntervalMatrix::zeros(0, 0),
        IntervalMatrix::zeros(0, 2),
        vec![ival(2, 2)],
        vec![],
        vec![],
        vec![ival(0, 0), ival(1, 1)],
    )
    .unwrap()
}

pub(crate) fn counterexample_point() -> Point {
    Point::new(vec![], vec![rat(1), rat(1)])
}

fn triangle_rows(with_fourth: bool) -> (Vec<Vec<Interval>>, Vec<Interval>) {
    let mut rows = vec![
        vec![
            Interval::new(ratio(3, 2), ratio(7, 2)).unwrap(),
            Interval::new(ratio(1, 2), ratio(3, 2)).unwrap(),
        ],
        vec![
            Interval::new(rat(0), ratio(9, 2)).unwrap(),
            Interval::new(ratio(-5, 4), ratio(-3, 4)).unwrap(),
        ],
        vec![
            Interval::new(rat(-2), ratio(-5, 4)).unwrap(),
            Interval::new(ratio(3, 4), ratio(3, 2)).unwrap(),
        ],
    ];
    let mut b = vec![
        Interval::new(rat(2), ratio(15, 4)).unwrap(),
        ival(-1, -1),
        ival(-1, -1),
    ];
    if with_fourth {
        rows.push(vec![
            ival(-4, -2),
            Interval::new(ratio(-3, 2), rat(0)).unwrap(),
        ]);
        b.push(ival(-1, -1));
    }
    (rows, b)
}

fn crisp_objective() -> Vec<Interval> {
    vec![
        ival(2, 2),
        Interval::new(ratio(-1, 2), ratio(-1, 2)).unwrap(),
    ]
}

/// Inequality-only program with two free variables (three constraints, plus
/// an optional fourth that no scenario satisfies at the tested point).
pub(crate) fn triangle_data(with_fourth: bool) -> IlpData {
    let (rows, b) = triangle_rows(with_fourth);
    let l = rows.len();
    IlpData::new(
        IntervalMatrix::zeros(0, 2),
        IntervalMatrix::zeros(0, 0),
        IntervalMatrix::from_rows(rows).unwrap(),
        IntervalMatrix::zeros(l, 0),
        vec![],
        b,
        crisp_objective(),
        vec![],
    )
    .unwrap()
}

/// Equality variant: the first two constraints of the same program turned
/// into equalities (k = 2).
pub(crate) fn triangle_eq_data() -> IlpData {
    let (mut rows, mut b) = triangle_rows(false);
    rows.truncate(2);
    b.truncate(2);
    IlpData::new(
        IntervalMatrix::from_rows(rows).unwrap(),
        IntervalMatrix::zeros(2, 0),
        IntervalMatrix::zeros(0, 2),
        IntervalMatrix::zeros(0, 0),
        b,
        vec![],
        crisp_objective(),
        vec![],
    )
    .unwrap()
}

pub(crate) fn triangle_point() -> Point {
    Point::new(vec![rat(2), rat(1)], vec![])
}
