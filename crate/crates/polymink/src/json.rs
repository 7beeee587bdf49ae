//! JSON document formats. Integers are emitted as plain JSON numbers when
//! they fit in 64 bits and as decimal strings otherwise; both forms are
//! accepted on input everywhere. Summand counts are always decimal strings.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::lattice::{EdgeSequence, EdgeVector, LatticePoint};
use crate::newton::SparsePoly;
use crate::project::{PointCloud, PolytopeVerdict, TrialOutcome, TrialReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Malformed(String),
    #[error("expected {expected} at {context}")]
    Shape {
        expected: &'static str,
        context: &'static str,
    },
    #[error("invalid geometry: {0}")]
    Geometry(String),
}

fn shape(expected: &'static str, context: &'static str) -> JsonError {
    JsonError::Shape { expected, context }
}

pub fn bigint_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn biguint_to_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value, context: &'static str) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(shape("integer (fractions not allowed)", context))
            }
        }
        Value::String(s) => {
            BigInt::from_str(s.trim()).map_err(|_| shape("decimal integer string", context))
        }
        _ => Err(shape("integer number or decimal string", context)),
    }
}

pub fn biguint_from_json(v: &Value, context: &'static str) -> Result<BigUint, JsonError> {
    let n = bigint_from_json(v, context)?;
    n.to_biguint().ok_or(shape("nonnegative integer", context))
}

pub fn point_to_json(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(bigint_to_json).collect())
}

pub fn point_from_json(v: &Value, context: &'static str) -> Result<LatticePoint, JsonError> {
    let arr = v.as_array().ok_or(shape("coordinate array", context))?;
    let coords = arr
        .iter()
        .map(|c| bigint_from_json(c, context))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticePoint::new(coords))
}

/// `{"dim": n, "points": [[...], ...]}`.
pub fn points_document(points: &[LatticePoint]) -> Value {
    let dim = points.first().map_or(0, |p| p.dim());
    json!({
        "dim": dim,
        "points": points.iter().map(point_to_json).collect::<Vec<_>>(),
    })
}

pub fn points_from_document(v: &Value) -> Result<Vec<LatticePoint>, JsonError> {
    let obj = v.as_object().ok_or(shape("object", "points document"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or(shape("\"dim\" field", "points document"))? as usize;
    let arr = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or(shape("\"points\" array", "points document"))?;
    let points = arr
        .iter()
        .map(|p| point_from_json(p, "points entry"))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(JsonError::Geometry(format!(
            "point of dimension {} in a dim-{} document",
            p.dim(),
            dim
        )));
    }
    Ok(points)
}

pub fn cloud_from_document(v: &Value) -> Result<PointCloud, JsonError> {
    PointCloud::new(points_from_document(v)?).map_err(|e| JsonError::Geometry(e.to_string()))
}

/// `{"anchor": [x, y], "edges": [{"n": n_i, "e": [a, b]}, ...]}`.
pub fn edge_sequence_to_json(es: &EdgeSequence) -> Value {
    json!({
        "anchor": point_to_json(es.anchor()),
        "edges": es
            .edges()
            .iter()
            .map(|e| json!({"n": biguint_to_json(e.multiplicity()), "e": point_to_json(e.direction())}))
            .collect::<Vec<_>>(),
    })
}

pub fn edge_sequence_from_json(v: &Value) -> Result<EdgeSequence, JsonError> {
    let obj = v.as_object().ok_or(shape("object", "edge sequence"))?;
    let anchor = point_from_json(
        obj.get("anchor").ok_or(shape("\"anchor\"", "edge sequence"))?,
        "anchor",
    )?;
    let arr = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or(shape("\"edges\" array", "edge sequence"))?;
    let mut edges = Vec::with_capacity(arr.len());
    for entry in arr {
        let e = entry.as_object().ok_or(shape("edge object", "edges"))?;
        let n = biguint_from_json(e.get("n").ok_or(shape("\"n\"", "edge"))?, "edge n")?;
        let dir = point_from_json(e.get("e").ok_or(shape("\"e\"", "edge"))?, "edge e")?;
        edges.push(EdgeVector::new(n, dir).map_err(|e| JsonError::Geometry(e.to_string()))?);
    }
    EdgeSequence::new(anchor, edges).map_err(|e| JsonError::Geometry(e.to_string()))
}

/// Accepts either an edge-sequence document or a points document (whose
/// 2-dimensional points are hulled by the caller).
pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Malformed(e.to_string()))
}

/// `{"vars": [...], "terms": [{"e": [...], "c": ...}, ...]}`.
pub fn poly_to_json(f: &SparsePoly) -> Value {
    json!({
        "vars": f.vars(),
        "terms": f
            .terms()
            .iter()
            .map(|(e, c)| json!({"e": point_to_json(e), "c": bigint_to_json(c)}))
            .collect::<Vec<_>>(),
    })
}

pub fn poly_from_json(v: &Value) -> Result<SparsePoly, JsonError> {
    let obj = v.as_object().ok_or(shape("object", "polynomial"))?;
    let vars = obj
        .get("vars")
        .and_then(Value::as_array)
        .ok_or(shape("\"vars\" array", "polynomial"))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(String::from)
                .ok_or(shape("variable name string", "vars"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arr = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or(shape("\"terms\" array", "polynomial"))?;
    let mut terms = std::collections::BTreeMap::new();
    for t in arr {
        let t = t.as_object().ok_or(shape("term object", "terms"))?;
        let e = point_from_json(t.get("e").ok_or(shape("\"e\"", "term"))?, "term e")?;
        let c = bigint_from_json(t.get("c").ok_or(shape("\"c\"", "term"))?, "term c")?;
        if e.dim() != vars.len() {
            return Err(JsonError::Geometry(format!(
                "exponent vector of dimension {} with {} variables",
                e.dim(),
                vars.len()
            )));
        }
        if e.coords().iter().any(|x| x.sign() == num_bigint::Sign::Minus) {
            return Err(JsonError::Geometry("negative exponent".into()));
        }
        *terms.entry(e).or_insert_with(num_traits::Zero::zero) += c;
    }
    terms.retain(|_, c: &mut BigInt| !num_traits::Zero::is_zero(c));
    Ok(SparsePoly::new(vars, terms))
}

/// One enumerate output line: the summand vector, its polygon's edges, and
/// its lattice points.
pub fn summand_line(ks: &[BigUint], polygon: &EdgeSequence, points: &[LatticePoint]) -> Value {
    json!({
        "ks": ks.iter().map(biguint_to_json).collect::<Vec<_>>(),
        "edges": polygon
            .edges()
            .iter()
            .map(|e| json!({"n": biguint_to_json(e.multiplicity()), "e": point_to_json(e.direction())}))
            .collect::<Vec<_>>(),
        "points": points.iter().map(point_to_json).collect::<Vec<_>>(),
    })
}

pub fn outcome_str(o: &TrialOutcome) -> &'static str {
    match o {
        TrialOutcome::Indecomposable => "INDECOMPOSABLE",
        TrialOutcome::FailureVertexCollision => "FAILURE_VERTEX_COLLISION",
        TrialOutcome::FailureShadowDecomposable => "FAILURE_SHADOW_DECOMPOSABLE",
        TrialOutcome::FailureShadowTooLarge => "FAILURE_SHADOW_TOO_LARGE",
    }
}

fn trial_to_json(t: &TrialReport) -> Value {
    let mut obj = Map::new();
    obj.insert("u".into(), point_to_json(&t.u));
    obj.insert("v".into(), point_to_json(&t.v));
    obj.insert("outcome".into(), json!(outcome_str(&t.outcome)));
    obj.insert(
        "shadow".into(),
        t.shadow
            .as_ref()
            .map_or(Value::Null, edge_sequence_to_json),
    );
    Value::Object(obj)
}

/// Full projection report; the seed is echoed so runs can be reproduced.
pub fn project_report(verdict: &PolytopeVerdict, seed: u64) -> Value {
    json!({
        "seed": seed,
        "verdict": if verdict.is_indecomposable() { "INDECOMPOSABLE" } else { "FAILURE" },
        "trials": verdict.trials().iter().map(trial_to_json).collect::<Vec<_>>(),
    })
}
