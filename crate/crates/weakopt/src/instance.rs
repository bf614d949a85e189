//! JSON instance and report formats used by the command-line front end.
//!
//! Exactness survives serialization: a rational is encoded as an integer or
//! a string `"p/q"` (floats are rejected, they have no exact reading), an
//! interval as a two-element array `[lo, hi]` or a bare scalar for a
//! degenerate interval, and matrices as row-major arrays of arrays.
//!
//! Instance schema (every block optional, shapes must be mutually
//! consistent; a dimension nothing mentions is 0):
//!
//! ```json
//! {
//!   "version": "1",
//!   "Af": [[..]], "An": [[..]], "Bf": [[..]], "Bn": [[..]],
//!   "a": [..], "b": [..], "cf": [..], "cn": [..],
//!   "point": { "xf": [..], "xn": [..] }
//! }
//! ```
//!
//! A report carries the verdict tag, the witness when the verdict is
//! `weakly_optimal`, and instrumentation counters. Reports are rendered
//! with sorted keys, so identical runs produce byte-identical output.

use serde_json::{json, Map, Value};

use crate::interval::{Interval, IntervalMatrix};
use crate::model::{IlpData, Point, RatMatrix, Scenario, Sign, Witness};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::weak_optimality::DecideStats;
use crate::{Error, Result};

/// A parsed instance file: interval data plus the optional candidate point.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub version: String,
    pub data: IlpData,
    pub point: Option<Point>,
}

/// A parsed interval inequality system `Bf x <= b`, input of the reduction.
#[derive(Debug, Clone)]
pub struct SystemFile {
    pub bf: IntervalMatrix,
    pub b: Vec<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportStats {
    pub orthants_tried: usize,
    pub lp_solves: usize,
    /// Excluded from reports unless timings were requested, to keep output
    /// reproducible byte for byte.
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct VerdictReport {
    pub verdict: String,
    pub witness: Option<Witness>,
    pub stats: ReportStats,
}

impl VerdictReport {
    pub fn from_stats(verdict: &str, witness: Option<Witness>, stats: &DecideStats) -> Self {
        Self {
            verdict: verdict.to_string(),
            witness,
            stats: ReportStats {
                orthants_tried: stats.orthants_tried,
                lp_solves: stats.lp_solves,
                wall_time_ms: None,
            },
        }
    }
}

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

fn value_to_rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(err(
                    path,
                    format!("non-integer number {n}; write an exact rational as \"p/q\""),
                ))
            }
        }
        Value::String(s) => parse_rational(s).map_err(|e| err(path, e.to_string())),
        other => Err(err(path, format!("expected rational, got {other}"))),
    }
}

fn value_to_interval(v: &Value, path: &str) -> Result<Interval> {
    match v {
        Value::Array(items) => {
            if items.len() != 2 {
                return Err(err(path, format!("interval needs 2 bounds, got {}", items.len())));
            }
            let lo = value_to_rational(&items[0], &format!("{path}[0]"))?;
            let hi = value_to_rational(&items[1], &format!("{path}[1]"))?;
            Interval::new(lo, hi).map_err(|e| err(path, e.to_string()))
        }
        scalar => Ok(Interval::point(value_to_rational(scalar, path)?)),
    }
}

fn value_to_interval_vec(v: &Value, path: &str) -> Result<Vec<Interval>> {
    let Value::Array(items) = v else {
        return Err(err(path, "expected an array"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| value_to_interval(item, &format!("{path}[{i}]")))
        .collect()
}

fn value_to_interval_matrix(v: &Value, path: &str) -> Result<IntervalMatrix> {
    let Value::Array(rows) = v else {
        return Err(err(path, "expected an array of rows"));
    };
    let parsed: Result<Vec<Vec<Interval>>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| value_to_interval_vec(row, &format!("{path}[{i}]")))
        .collect();
    IntervalMatrix::from_rows(parsed?).map_err(|e| err(path, e.to_string()))
}

fn value_to_rational_vec(v: &Value, path: &str) -> Result<Vec<Rational>> {
    let Value::Array(items) = v else {
        return Err(err(path, "expected an array"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| value_to_rational(item, &format!("{path}[{i}]")))
        .collect()
}

fn value_to_rat_matrix(v: &Value, path: &str) -> Result<RatMatrix> {
    let Value::Array(rows) = v else {
        return Err(err(path, "expected an array of rows"));
    };
    let parsed: Result<Vec<Vec<Rational>>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| value_to_rational_vec(row, &format!("{path}[{i}]")))
        .collect();
    RatMatrix::from_rows(parsed?).map_err(|e| err(path, e.to_string()))
}

/// Merges one dimension candidate, insisting all mentions agree.
fn merge_dim(slot: &mut Option<usize>, candidate: usize, what: &str) -> Result<()> {
    match slot {
        None => {
            *slot = Some(candidate);
            Ok(())
        }
        Some(existing) if *existing == candidate => Ok(()),
        Some(existing) => Err(err(
            what,
            format!("inconsistent dimension: {existing} elsewhere, {candidate} here"),
        )),
    }
}

fn parse_point_value(v: &Value, path: &str) -> Result<Point> {
    let Value::Object(obj) = v else {
        return Err(err(path, "expected an object with xf/xn"));
    };
    for key in obj.keys() {
        if key != "xf" && key != "xn" {
            return Err(err(&format!("{path}.{key}"), "unknown field"));
        }
    }
    let xf = match obj.get("xf") {
        Some(v) => value_to_rational_vec(v, &format!("{path}.xf"))?,
        None => vec![],
    };
    let xn = match obj.get("xn") {
        Some(v) => value_to_rational_vec(v, &format!("{path}.xn"))?,
        None => vec![],
    };
    Ok(Point::new(xf, xn))
}

pub fn parse_point(text: &str) -> Result<Point> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| err("point", format!("invalid JSON: {e}")))?;
    parse_point_value(&v, "point")
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| err("instance", format!("invalid JSON: {e}")))?;
    let Value::Object(obj) = v else {
        return Err(err("instance", "expected a JSON object"));
    };
    const KNOWN: [&str; 10] = ["version", "Af", "An", "Bf", "Bn", "a", "b", "cf", "cn", "point"];
    for key in obj.keys() {
        if !KNOWN.contains(&key.as_str()) {
            return Err(err(key, "unknown field"));
        }
    }
    let version = match obj.get("version") {
        Some(Value::String(s)) => s.clone(),
        Some(other) => return Err(err("version", format!("expected string, got {other}"))),
        None => "1".to_string(),
    };

    let matrix = |key: &str| -> Result<Option<IntervalMatrix>> {
        obj.get(key)
            .map(|v| value_to_interval_matrix(v, key))
            .transpose()
    };
    let vector = |key: &str| -> Result<Option<Vec<Interval>>> {
        obj.get(key)
            .map(|v| value_to_interval_vec(v, key))
            .transpose()
    };
    let af = matrix("Af")?;
    let an = matrix("An")?;
    let bf = matrix("Bf")?;
    let bn = matrix("Bn")?;
    let a = vector("a")?;
    let b = vector("b")?;
    let cf = vector("cf")?;
    let cn = vector("cn")?;
    let point = obj
        .get("point")
        .map(|v| parse_point_value(v, "point"))
        .transpose()?;

    // Infer (k, l, m, n) from every block that mentions each dimension.
    let mut k = None;
    let mut l = None;
    let mut m = None;
    let mut n = None;
    if let Some(mat) = &af {
        merge_dim(&mut k, mat.rows(), "Af")?;
        merge_dim(&mut m, mat.cols(), "Af")?;
    }
    if let Some(mat) = &an {
        merge_dim(&mut k, mat.rows(), "An")?;
        merge_dim(&mut n, mat.cols(), "An")?;
    }
    if let Some(mat) = &bf {
        merge_dim(&mut l, mat.rows(), "Bf")?;
        merge_dim(&mut m, mat.cols(), "Bf")?;
    }
    if let Some(mat) = &bn {
        merge_dim(&mut l, mat.rows(), "Bn")?;
        merge_dim(&mut n, mat.cols(), "Bn")?;
    }
    if let Some(vec) = &a {
        merge_dim(&mut k, vec.len(), "a")?;
    }
    if let Some(vec) = &b {
        merge_dim(&mut l, vec.len(), "b")?;
    }
    if let Some(vec) = &cf {
        merge_dim(&mut m, vec.len(), "cf")?;
    }
    if let Some(vec) = &cn {
        merge_dim(&mut n, vec.len(), "cn")?;
    }
    if let Some(p) = &point {
        merge_dim(&mut m, p.xf.len(), "point.xf")?;
        merge_dim(&mut n, p.xn.len(), "point.xn")?;
    }
    let (k, l, m, n) = (
        k.unwrap_or(0),
        l.unwrap_or(0),
        m.unwrap_or(0),
        n.unwrap_or(0),
    );

    // Absent cross blocks become crisp zeros at the inferred shape; absent
    // objective and rhs vectors likewise.
    let data = IlpData::new(
        af.unwrap_or_else(|| IntervalMatrix::zeros(k, m)),
        an.unwrap_or_else(|| IntervalMatrix::zeros(k, n)),
        bf.unwrap_or_else(|| IntervalMatrix::zeros(l, m)),
        bn.unwrap_or_else(|| IntervalMatrix::zeros(l, n)),
        a.unwrap_or_else(|| vec![Interval::zero(); k]),
        b.unwrap_or_else(|| vec![Interval::zero(); l]),
        cf.unwrap_or_else(|| vec![Interval::zero(); m]),
        cn.unwrap_or_else(|| vec![Interval::zero(); n]),
    )
    .map_err(|e| err("instance", e.to_string()))?;
    Ok(InstanceFile { version, data, point })
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| err("system", format!("invalid JSON: {e}")))?;
    let Value::Object(obj) = v else {
        return Err(err("system", "expected a JSON object"));
    };
    for key in obj.keys() {
        if key != "Bf" && key != "b" && key != "version" {
            return Err(err(key, "unknown field"));
        }
    }
    let bf = match obj.get("Bf") {
        Some(v) => value_to_interval_matrix(v, "Bf")?,
        None => IntervalMatrix::zeros(0, 0),
    };
    let b = match obj.get("b") {
        Some(v) => value_to_interval_vec(v, "b")?,
        None => vec![Interval::zero(); 0],
    };
    if b.len() != bf.rows() {
        return Err(err(
            "b",
            format!("expected {} entries to match Bf, got {}", bf.rows(), b.len()),
        ));
    }
    Ok(SystemFile { bf, b })
}

fn rational_to_value(r: &Rational) -> Value {
    use num_traits::One;
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer().clone()) {
            return json!(i);
        }
    }
    json!(format_rational(r))
}

fn interval_to_value(iv: &Interval) -> Value {
    if iv.is_degenerate() {
        rational_to_value(iv.lo())
    } else {
        json!([rational_to_value(iv.lo()), rational_to_value(iv.hi())])
    }
}

fn interval_matrix_to_value(m: &IntervalMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(interval_to_value).collect()))
            .collect(),
    )
}

fn interval_vec_to_value(v: &[Interval]) -> Value {
    Value::Array(v.iter().map(interval_to_value).collect())
}

fn rational_vec_to_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

fn rat_matrix_to_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| rational_vec_to_value(m.row(i)))
            .collect(),
    )
}

pub fn instance_to_value(instance: &InstanceFile) -> Value {
    let d = &instance.data;
    let mut obj = Map::new();
    obj.insert("version".into(), json!(instance.version));
    if d.num_eq() > 0 {
        if d.num_free() > 0 {
            obj.insert("Af".into(), interval_matrix_to_value(&d.af));
        }
        if d.num_nonneg() > 0 {
            obj.insert("An".into(), interval_matrix_to_value(&d.an));
        }
        obj.insert("a".into(), interval_vec_to_value(&d.a));
    }
    if d.num_ineq() > 0 {
        if d.num_free() > 0 {
            obj.insert("Bf".into(), interval_matrix_to_value(&d.bf));
        }
        if d.num_nonneg() > 0 {
            obj.insert("Bn".into(), interval_matrix_to_value(&d.bn));
        }
        obj.insert("b".into(), interval_vec_to_value(&d.b));
    }
    if d.num_free() > 0 {
        obj.insert("cf".into(), interval_vec_to_value(&d.cf));
    }
    if d.num_nonneg() > 0 {
        obj.insert("cn".into(), interval_vec_to_value(&d.cn));
    }
    if let Some(p) = &instance.point {
        let mut pt = Map::new();
        if !p.xf.is_empty() {
            pt.insert("xf".into(), rational_vec_to_value(&p.xf));
        }
        if !p.xn.is_empty() {
            pt.insert("xn".into(), rational_vec_to_value(&p.xn));
        }
        obj.insert("point".into(), Value::Object(pt));
    }
    Value::Object(obj)
}

pub fn serialize_instance(instance: &InstanceFile) -> String {
    let mut out = serde_json::to_string_pretty(&instance_to_value(instance)).expect("valid JSON");
    out.push('\n');
    out
}

fn witness_to_value(w: &Witness) -> Value {
    let s = &w.scenario;
    let mut scenario = Map::new();
    if s.af.rows() > 0 {
        if s.af.cols() > 0 {
            scenario.insert("Af".into(), rat_matrix_to_value(&s.af));
        }
        if s.an.cols() > 0 {
            scenario.insert("An".into(), rat_matrix_to_value(&s.an));
        }
        scenario.insert("a".into(), rational_vec_to_value(&s.a));
    }
    if s.bf.rows() > 0 {
        if s.bf.cols() > 0 {
            scenario.insert("Bf".into(), rat_matrix_to_value(&s.bf));
        }
        if s.bn.cols() > 0 {
            scenario.insert("Bn".into(), rat_matrix_to_value(&s.bn));
        }
        scenario.insert("b".into(), rational_vec_to_value(&s.b));
    }
    if s.cf.len() > 0 {
        scenario.insert("cf".into(), rational_vec_to_value(&s.cf));
    }
    if s.cn.len() > 0 {
        scenario.insert("cn".into(), rational_vec_to_value(&s.cn));
    }
    json!({
        "scenario": Value::Object(scenario),
        "yf": rational_vec_to_value(&w.yf),
        "yn": rational_vec_to_value(&w.yn),
        "sigma": w.sigma.iter().map(|s| s.as_i8()).collect::<Vec<_>>(),
    })
}

pub fn report_to_value(report: &VerdictReport) -> Value {
    let mut stats = Map::new();
    stats.insert("orthants_tried".into(), json!(report.stats.orthants_tried));
    stats.insert("lp_solves".into(), json!(report.stats.lp_solves));
    if let Some(ms) = report.stats.wall_time_ms {
        stats.insert("wall_time_ms".into(), json!(ms));
    }
    let mut obj = Map::new();
    obj.insert("verdict".into(), json!(report.verdict));
    if let Some(w) = &report.witness {
        obj.insert("witness".into(), witness_to_value(w));
    }
    obj.insert("stats".into(), Value::Object(stats));
    Value::Object(obj)
}

pub fn render_report(report: &VerdictReport) -> String {
    let mut out = serde_json::to_string_pretty(&report_to_value(report)).expect("valid JSON");
    out.push('\n');
    out
}

/// Re-reads a report. The witness scenario is reconciled against the
/// instance shape at verification time, so absent scenario blocks are
/// rebuilt as zeros of the right dimensions.
pub fn parse_report(text: &str, data: &IlpData) -> Result<VerdictReport> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| err("report", format!("invalid JSON: {e}")))?;
    let Value::Object(obj) = v else {
        return Err(err("report", "expected a JSON object"));
    };
    let verdict = match obj.get("verdict") {
        Some(Value::String(s)) => s.clone(),
        _ => return Err(err("verdict", "expected a string verdict tag")),
    };
    let stats = match obj.get("stats") {
        Some(Value::Object(s)) => ReportStats {
            orthants_tried: s
                .get("orthants_tried")
                .and_then(Value::as_u64)
                .ok_or_else(|| err("stats.orthants_tried", "expected an integer"))?
                as usize,
            lp_solves: s
                .get("lp_solves")
                .and_then(Value::as_u64)
                .ok_or_else(|| err("stats.lp_solves", "expected an integer"))?
                as usize,
            wall_time_ms: s.get("wall_time_ms").and_then(Value::as_u64),
        },
        _ => return Err(err("stats", "expected a stats object")),
    };
    let witness = match obj.get("witness") {
        None | Some(Value::Null) => None,
        Some(Value::Object(w)) => Some(parse_witness(w, data)?),
        Some(_) => return Err(err("witness", "expected an object")),
    };
    Ok(VerdictReport { verdict, witness, stats })
}

fn parse_witness(obj: &Map<String, Value>, data: &IlpData) -> Result<Witness> {
    let (k, l, m, n) = (
        data.num_eq(),
        data.num_ineq(),
        data.num_free(),
        data.num_nonneg(),
    );
    let scenario_obj = match obj.get("scenario") {
        Some(Value::Object(s)) => s,
        _ => return Err(err("witness.scenario", "expected an object")),
    };
    let block = |key: &str, rows: usize, cols: usize| -> Result<RatMatrix> {
        match scenario_obj.get(key) {
            Some(v) => {
                let m = value_to_rat_matrix(v, &format!("witness.scenario.{key}"))?;
                if m.rows() != rows || m.cols() != cols {
                    return Err(err(
                        &format!("witness.scenario.{key}"),
                        format!("expected {}x{}, got {}x{}", rows, cols, m.rows(), m.cols()),
                    ));
                }
                Ok(m)
            }
            None => Ok(RatMatrix::zeros(rows, cols)),
        }
    };
    let vector = |key: &str, len: usize| -> Result<Vec<Rational>> {
        match scenario_obj.get(key) {
            Some(v) => {
                let vec = value_to_rational_vec(v, &format!("witness.scenario.{key}"))?;
                if vec.len() != len {
                    return Err(err(
                        &format!("witness.scenario.{key}"),
                        format!("expected {} entries, got {}", len, vec.len()),
                    ));
                }
                Ok(vec)
            }
            None => Ok(vec![Rational::from_integer(0.into()); len]),
        }
    };
    let scenario = Scenario {
        af: block("Af", k, m)?,
        an: block("An", k, n)?,
        bf: block("Bf", l, m)?,
        bn: block("Bn", l, n)?,
        a: vector("a", k)?,
        b: vector("b", l)?,
        cf: vector("cf", m)?,
        cn: vector("cn", n)?,
    };
    let duals = |key: &str, len: usize| -> Result<Vec<Rational>> {
        match obj.get(key) {
            Some(v) => {
                let vec = value_to_rational_vec(v, &format!("witness.{key}"))?;
                if vec.len() != len {
                    return Err(err(
                        &format!("witness.{key}"),
                        format!("expected {} entries, got {}", len, vec.len()),
                    ));
                }
                Ok(vec)
            }
            None => Err(err(&format!("witness.{key}"), "missing multiplier vector")),
        }
    };
    let yf = duals("yf", k)?;
    let yn = duals("yn", l)?;
    let sigma = match obj.get("sigma") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| match v.as_i64() {
                Some(1) => Ok(Sign::Pos),
                Some(-1) => Ok(Sign::Neg),
                _ => Err(err(&format!("witness.sigma[{i}]"), "expected 1 or -1")),
            })
            .collect::<Result<Vec<Sign>>>()?,
        None => vec![],
        Some(_) => return Err(err("witness.sigma", "expected an array")),
    };
    Ok(Witness { scenario, yf, yn, sigma })
}
