//! JSON artifacts. Coordinates are rational strings, labels are 1-based, and
//! every loader re-validates the invariants of its type.

use std::fs;
use std::path::Path;

use itertools::Itertools;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::config::{PointConfiguration, VectorConfiguration};
use crate::construct::kortenkamp::{KortenkampResult, LiftStep};
use crate::construct::lifting::{LiftMode, LiftingCertificate, SignVector};
use crate::construct::pipeline::Provenance;
use crate::construct::polynomial::IntPolynomial;
use crate::delaunay::SubdivisionComplex;
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational, Sign};
use crate::matroid::Chirotope;
use crate::polytope::FaceLattice;
use crate::report::Report;
use crate::sphere::InscribedConfiguration;

/// Any artifact, tagged by its `"type"` field.
#[derive(Clone, Debug)]
pub enum Artifact {
    Points(PointConfiguration),
    Inscribed(InscribedConfiguration),
    Vectors(VectorConfiguration),
    Chirotope(Chirotope),
    FaceLattice(FaceLattice),
    Subdivision(SubdivisionComplex),
    Certificate(LiftingCertificate),
    Polynomial(IntPolynomial),
    Report(Report),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Points(_) | Artifact::Inscribed(_) => "point_configuration",
            Artifact::Vectors(_) => "vector_configuration",
            Artifact::Chirotope(_) => "chirotope",
            Artifact::FaceLattice(_) => "face_lattice",
            Artifact::Subdivision(_) => "subdivision",
            Artifact::Certificate(_) => "lift_certificate",
            Artifact::Polynomial(_) => "int_polynomial",
            Artifact::Report(_) => "report",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Artifact::Points(a) => points_to_json(a),
            Artifact::Inscribed(a) => inscribed_to_json(a),
            Artifact::Vectors(v) => vectors_to_json(v),
            Artifact::Chirotope(c) => chirotope_to_json(c),
            Artifact::FaceLattice(f) => face_lattice_to_json(f),
            Artifact::Subdivision(t) => subdivision_to_json(t),
            Artifact::Certificate(c) => certificate_to_json(c),
            Artifact::Polynomial(p) => polynomial_to_json(p),
            Artifact::Report(r) => report_to_json(r),
        }
    }

    pub fn from_json(v: &Value) -> Result<Artifact> {
        Ok(match type_of(v)? {
            "point_configuration" => {
                if v.get("inscribed").and_then(Value::as_bool) == Some(true) {
                    Artifact::Inscribed(inscribed_from_json(v)?)
                } else {
                    Artifact::Points(points_from_json(v)?)
                }
            }
            "vector_configuration" => Artifact::Vectors(vectors_from_json(v)?),
            "chirotope" => Artifact::Chirotope(chirotope_from_json(v)?),
            "face_lattice" => Artifact::FaceLattice(face_lattice_from_json(v)?),
            "subdivision" => Artifact::Subdivision(subdivision_from_json(v)?),
            "lift_certificate" => Artifact::Certificate(certificate_from_json(v)?),
            "int_polynomial" => Artifact::Polynomial(polynomial_from_json(v)?),
            "report" => Artifact::Report(report_from_json(v)?),
            other => return Err(parse(format!("unknown artifact type {other:?}"))),
        })
    }
}

fn parse(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn type_of(v: &Value) -> Result<&str> {
    v.get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| parse("missing \"type\" field"))
}

fn expect_type(v: &Value, expected: &str) -> Result<()> {
    let t = type_of(v)?;
    if t != expected {
        return Err(parse(format!("expected type {expected:?}, found {t:?}")));
    }
    Ok(())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| parse(format!("field {key:?} must be a non-negative integer")))
}

fn u64_field(v: &Value, key: &str) -> Result<u64> {
    field(v, key)?
        .as_u64()
        .ok_or_else(|| parse(format!("field {key:?} must be a non-negative integer")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?
        .as_str()
        .ok_or_else(|| parse(format!("field {key:?} must be a string")))
}

fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(parse(format!("expected a rational string, found {v}"))),
    }
}

fn rational_row(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| parse("expected an array of rationals"))?
        .iter()
        .map(rational)
        .collect()
}

fn row_json(row: &[Rational]) -> Value {
    Value::Array(row.iter().map(|x| Value::String(format_rational(x))).collect())
}

fn label(i: usize) -> String {
    (i + 1).to_string()
}

fn parse_label(s: &str, n: usize) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(l) if (1..=n).contains(&l) => Ok(l - 1),
        Ok(l) => Err(Error::UnknownLabel { label: l, n }),
        Err(_) => Err(parse(format!("invalid label {s:?}"))),
    }
}

/// Rows of an object keyed by the labels `1..=n`, in label order.
fn labeled_rows(v: &Value) -> Result<Vec<Vec<Rational>>> {
    let map = v
        .as_object()
        .ok_or_else(|| parse("expected an object keyed by labels"))?;
    let n = map.len();
    let mut rows = vec![None; n];
    for (k, row) in map {
        let i = parse_label(k, n)?;
        rows[i] = Some(rational_row(row)?);
    }
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| parse(format!("label {} missing", i + 1))))
        .collect()
}

fn labeled_rows_json(rows: &[Vec<Rational>]) -> Value {
    Value::Object(
        rows.iter()
            .enumerate()
            .map(|(i, r)| (label(i), row_json(r)))
            .collect(),
    )
}

fn label_sets(v: &Value, n: usize) -> Result<Vec<Vec<usize>>> {
    v.as_array()
        .ok_or_else(|| parse("expected an array of label sets"))?
        .iter()
        .map(|s| {
            s.as_array()
                .ok_or_else(|| parse("expected an array of labels"))?
                .iter()
                .map(|l| match l.as_u64() {
                    Some(l) if l >= 1 && (l as usize) <= n => Ok(l as usize - 1),
                    Some(l) => Err(Error::UnknownLabel { label: l as usize, n }),
                    None => Err(parse(format!("invalid label {l}"))),
                })
                .collect()
        })
        .collect()
}

fn label_sets_json(sets: &[Vec<usize>]) -> Value {
    json!(sets
        .iter()
        .map(|s| s.iter().map(|i| i + 1).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn points_to_json(a: &PointConfiguration) -> Value {
    json!({
        "type": "point_configuration",
        "dim": a.dim(),
        "points": labeled_rows_json(a.points()),
    })
}

pub fn points_from_json(v: &Value) -> Result<PointConfiguration> {
    expect_type(v, "point_configuration")?;
    PointConfiguration::new(usize_field(v, "dim")?, labeled_rows(field(v, "points")?)?)
}

pub fn inscribed_to_json(a: &InscribedConfiguration) -> Value {
    let mut v = points_to_json(a.base());
    v["inscribed"] = Value::Bool(true);
    if let Some(p) = a.marked_pole() {
        v["marked_pole"] = json!(p + 1);
    }
    v
}

/// Recomputes `|p|² = 1` for every point.
pub fn inscribed_from_json(v: &Value) -> Result<InscribedConfiguration> {
    let base = points_from_json(v)?;
    let n = base.len();
    let a = InscribedConfiguration::new(base)?;
    match v.get("marked_pole") {
        None | Some(Value::Null) => Ok(a),
        Some(p) => {
            let p = p
                .as_u64()
                .ok_or_else(|| parse("marked_pole must be a label"))?;
            if p == 0 || p as usize > n {
                return Err(Error::UnknownLabel { label: p as usize, n });
            }
            a.with_pole(p as usize - 1)
        }
    }
}

pub fn vectors_to_json(v: &VectorConfiguration) -> Value {
    json!({
        "type": "vector_configuration",
        "rank": v.rank(),
        "vectors": labeled_rows_json(v.vectors()),
    })
}

pub fn vectors_from_json(v: &Value) -> Result<VectorConfiguration> {
    expect_type(v, "vector_configuration")?;
    VectorConfiguration::new(usize_field(v, "rank")?, labeled_rows(field(v, "vectors")?)?)
}

fn tuple_key(t: &[usize]) -> String {
    t.iter().map(|i| i + 1).join(",")
}

pub fn chirotope_to_json(c: &Chirotope) -> Value {
    let signs: Map<String, Value> = c
        .bases()
        .map(|(t, s)| (tuple_key(&t), Value::String(s.as_char().to_string())))
        .collect();
    json!({
        "type": "chirotope",
        "rank": c.rank(),
        "n": c.ground_size(),
        "signs": signs,
    })
}

/// Requires a sign for every sorted tuple, and nothing else.
pub fn chirotope_from_json(v: &Value) -> Result<Chirotope> {
    expect_type(v, "chirotope")?;
    let rank = usize_field(v, "rank")?;
    let n = usize_field(v, "n")?;
    let map = field(v, "signs")?
        .as_object()
        .ok_or_else(|| parse("signs must be an object"))?;
    let mut lex = Vec::new();
    for t in (0..n).combinations(rank) {
        let key = tuple_key(&t);
        let s = map
            .get(&key)
            .and_then(Value::as_str)
            .ok_or_else(|| parse(format!("missing sign for {key}")))?;
        let mut chars = s.chars();
        let sign = match (chars.next(), chars.next()) {
            (Some('\u{2212}'), None) => Sign::Negative,
            (Some(c), None) => Sign::from_char(c).ok_or_else(|| parse(format!("invalid sign {s:?}")))?,
            _ => return Err(parse(format!("invalid sign {s:?}"))),
        };
        lex.push(sign);
    }
    if map.len() != lex.len() {
        return Err(parse("signs must list exactly the sorted tuples"));
    }
    Chirotope::from_lex_signs(rank, n, lex)
}

pub fn face_lattice_to_json(f: &FaceLattice) -> Value {
    json!({
        "type": "face_lattice",
        "n": f.n(),
        "facets": label_sets_json(f.facets()),
    })
}

pub fn face_lattice_from_json(v: &Value) -> Result<FaceLattice> {
    expect_type(v, "face_lattice")?;
    let n = usize_field(v, "n")?;
    FaceLattice::new(n, label_sets(field(v, "facets")?, n)?)
}

pub fn subdivision_to_json(t: &SubdivisionComplex) -> Value {
    let mut v = json!({
        "type": "subdivision",
        "n": t.n(),
        "cells": label_sets_json(t.cells()),
    });
    if let Some(h) = t.hull_facets() {
        v["hull_facets"] = label_sets_json(h);
    }
    v
}

pub fn subdivision_from_json(v: &Value) -> Result<SubdivisionComplex> {
    expect_type(v, "subdivision")?;
    let n = usize_field(v, "n")?;
    let t = SubdivisionComplex::new(n, label_sets(field(v, "cells")?, n)?)?;
    match v.get("hull_facets") {
        None | Some(Value::Null) => Ok(t),
        Some(h) => t.with_hull_facets(label_sets(h, n)?),
    }
}

pub fn certificate_to_json(c: &LiftingCertificate) -> Value {
    let heights: Map<String, Value> = c
        .heights
        .iter()
        .enumerate()
        .map(|(k, h)| (label(c.base_dim + k), Value::String(format_rational(h))))
        .collect();
    json!({
        "type": "lift_certificate",
        "base_dim": c.base_dim,
        "mode": c.mode.as_str(),
        "signs": c.signs.to_string(),
        "heights": heights,
        "apex_h": format_rational(&c.apex_h),
        "doublings": c.doublings,
        "checks_passed": c.checks_passed,
    })
}

/// Heights are keyed by the labels `d+1..=n`; the vacuous label `d+1` may
/// be omitted and then sits at height 0.
pub fn certificate_from_json(v: &Value) -> Result<LiftingCertificate> {
    expect_type(v, "lift_certificate")?;
    let base_dim = usize_field(v, "base_dim")?;
    let signs: SignVector = str_field(v, "signs")?.parse()?;
    let n = base_dim + signs.len();
    let map = field(v, "heights")?
        .as_object()
        .ok_or_else(|| parse("heights must be an object"))?;
    let mut heights = vec![None; signs.len()];
    for (k, h) in map {
        let i = parse_label(k, n)?;
        if i < base_dim {
            return Err(parse(format!("label {k} has no height")));
        }
        heights[i - base_dim] = Some(rational(h)?);
    }
    if heights.first().is_some_and(Option::is_none) {
        heights[0] = Some(Rational::from_integer(0.into()));
    }
    let heights = heights
        .into_iter()
        .enumerate()
        .map(|(k, h)| h.ok_or_else(|| parse(format!("missing height for label {}", base_dim + k + 1))))
        .collect::<Result<Vec<_>>>()?;
    let mode = match v.get("mode") {
        None => LiftMode::Generic,
        Some(m) => m.as_str().ok_or_else(|| parse("mode must be a string"))?.parse()?,
    };
    let checks_passed = match v.get("checks_passed") {
        None => Vec::new(),
        Some(c) => serde_json::from_value(c.clone())?,
    };
    let apex_h = rational(field(v, "apex_h")?)?;
    if apex_h <= Rational::from_integer(0.into()) {
        return Err(Error::Inconsistent("apex height must be positive".into()));
    }
    Ok(LiftingCertificate {
        base_dim,
        signs,
        mode,
        heights,
        apex_h,
        doublings: u32::try_from(u64_field(v, "doublings")?)
            .map_err(|_| parse("doublings out of range"))?,
        checks_passed,
    })
}

pub fn polynomial_to_json(p: &IntPolynomial) -> Value {
    json!({
        "type": "int_polynomial",
        "coefficients": p.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "display": p.to_string(),
    })
}

/// Coefficients in ascending degree, as integer strings.
pub fn polynomial_from_json(v: &Value) -> Result<IntPolynomial> {
    expect_type(v, "int_polynomial")?;
    let coeffs = field(v, "coefficients")?
        .as_array()
        .ok_or_else(|| parse("coefficients must be an array"))?
        .iter()
        .map(|c| match c {
            Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| parse(format!("invalid integer {s:?}"))),
            Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap_or_default())),
            _ => Err(parse(format!("invalid coefficient {c}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

pub fn report_to_json(r: &Report) -> Value {
    let mut v = r.to_json();
    v["type"] = json!("report");
    v
}

/// Rejects a report whose `overall` disagrees with its checks.
pub fn report_from_json(v: &Value) -> Result<Report> {
    expect_type(v, "report")?;
    let mut body = v.clone();
    if let Some(m) = body.as_object_mut() {
        m.remove("type");
    }
    let r: Report = serde_json::from_value(body)?;
    let expected = r.checks.iter().all(|c| c.status == crate::report::Status::Pass);
    if r.passed() != expected {
        return Err(Error::Inconsistent("overall status disagrees with the checks".into()));
    }
    Ok(r)
}

pub fn step_to_json(s: &LiftStep) -> Value {
    json!({
        "order": s.order.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "signs": s.signs.to_string(),
    })
}

pub fn step_from_json(v: &Value) -> Result<LiftStep> {
    let order = field(v, "order")?
        .as_array()
        .ok_or_else(|| parse("order must be an array"))?
        .iter()
        .map(|l| match l.as_u64() {
            Some(l) if l >= 1 => Ok(l as usize - 1),
            _ => Err(parse(format!("invalid label {l}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LiftStep {
        order,
        signs: str_field(v, "signs")?.parse()?,
    })
}

pub fn kortenkamp_to_json(k: &KortenkampResult) -> Value {
    json!({
        "type": "kortenkamp",
        "seed": k.seed,
        "budget": k.budget,
        "evaluations": k.evaluations,
        "phase": k.phase,
        "history": k.history.iter().map(step_to_json).collect::<Vec<_>>(),
        "certificates": k.certificates.iter().map(certificate_to_json).collect::<Vec<_>>(),
    })
}

/// The recorded lifting steps of a search record.
pub fn history_from_json(v: &Value) -> Result<Vec<LiftStep>> {
    field(v, "history")?
        .as_array()
        .ok_or_else(|| parse("history must be an array"))?
        .iter()
        .map(step_from_json)
        .collect()
}

pub fn provenance_to_json(p: &Provenance) -> Value {
    json!({
        "type": "provenance",
        "seed": p.seed,
        "budget": p.budget,
        "kortenkamp": p.kortenkamp.as_ref().map(kortenkamp_to_json),
        "delaunay_lift": certificate_to_json(&p.delaunay_lift),
    })
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty JSON with sorted keys and a trailing newline, so equal values
/// give byte-identical files.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, to_pretty(v))
        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<Artifact> {
    Artifact::from_json(&read_json(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn point_configuration_round_trip() {
        let a = PointConfiguration::new(2, vec![vec![rat(1, 2), rat(-3, 1)], vec![rat(0, 1), rat(7, 3)]]).unwrap();
        let v = points_to_json(&a);
        assert_eq!(v["points"]["1"], json!(["1/2", "-3"]));
        assert_eq!(points_from_json(&v).unwrap(), a);
    }

    #[test]
    fn missing_label_is_rejected() {
        let v = json!({"type": "point_configuration", "dim": 1, "points": {"1": ["0"], "3": ["1"]}});
        assert!(points_from_json(&v).is_err());
        let v = json!({"type": "point_configuration", "dim": 2, "points": {"1": ["0"]}});
        assert!(points_from_json(&v).is_err());
    }

    #[test]
    fn inscribed_flag_revalidates_norms() {
        let v = json!({"type": "point_configuration", "dim": 2, "inscribed": true,
                       "points": {"1": ["3/5", "4/5"], "2": ["0", "1"]}, "marked_pole": 2});
        match Artifact::from_json(&v).unwrap() {
            Artifact::Inscribed(a) => assert_eq!(a.marked_pole(), Some(1)),
            other => panic!("{other:?}"),
        }
        let bad = json!({"type": "point_configuration", "dim": 2, "inscribed": true,
                         "points": {"1": ["1", "1"]}});
        assert!(Artifact::from_json(&bad).is_err());
    }

    #[test]
    fn chirotope_requires_every_basis() {
        let v = json!({"type": "chirotope", "rank": 2, "n": 3, "signs": {"1,2": "+", "1,3": "-", "2,3": "+"}});
        let c = chirotope_from_json(&v).unwrap();
        assert_eq!(chirotope_to_json(&c), v);
        let short = json!({"type": "chirotope", "rank": 2, "n": 3, "signs": {"1,2": "+", "1,3": "-"}});
        assert!(chirotope_from_json(&short).is_err());
    }

    #[test]
    fn lattice_and_subdivision_round_trip() {
        let v = json!({"type": "face_lattice", "n": 3, "facets": [[1, 2], [1, 3], [2, 3]]});
        assert_eq!(face_lattice_to_json(&face_lattice_from_json(&v).unwrap()), v);
        let v = json!({"type": "subdivision", "n": 4, "cells": [[1, 2, 3], [2, 3, 4]],
                       "hull_facets": [[1, 2], [1, 3], [2, 4], [3, 4]]});
        assert_eq!(subdivision_to_json(&subdivision_from_json(&v).unwrap()), v);
        let bad = json!({"type": "subdivision", "n": 2, "cells": [[1, 3]]});
        assert!(subdivision_from_json(&bad).is_err());
    }

    #[test]
    fn certificate_accepts_omitted_vacuous_height() {
        let v = json!({"type": "lift_certificate", "base_dim": 2, "heights": {"4": "16"},
                       "apex_h": "1024", "doublings": 10, "signs": "++"});
        let c = certificate_from_json(&v).unwrap();
        assert_eq!(c.heights, vec![rat(0, 1), rat(16, 1)]);
        let back = certificate_to_json(&c);
        assert_eq!(certificate_from_json(&back).unwrap(), c);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = IntPolynomial::from_i64(&[2, 0, -4, 0, 1]);
        let v = polynomial_to_json(&p);
        assert_eq!(v["display"], json!("x^4 - 4x^2 + 2"));
        assert_eq!(polynomial_from_json(&v).unwrap(), p);
    }

    #[test]
    fn report_overall_must_match() {
        let mut r = Report::new();
        r.check("a", true, "");
        let v = report_to_json(&r);
        assert_eq!(report_from_json(&v).unwrap(), r);
        let mut forged = v.clone();
        forged["checks"][0]["status"] = json!("fail");
        assert!(report_from_json(&forged).is_err());
    }

    #[test]
    fn pretty_output_sorts_keys() {
        let v = json!({"b": 1, "a": 2});
        assert_eq!(to_pretty(&v), "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
    }
}
