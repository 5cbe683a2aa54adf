//! Canonical JSON file formats.
//!
//! Rationals are strings `"n"` or `"n/d"` (reduced, positive denominator);
//! matrices are row-major nested arrays of such strings; basis pairs are
//! `"i,j"` keys with 1-based indices and `i < j`; omitted pairs are zero.
//! All emitted objects use sorted keys, so serialization is deterministic
//! byte for byte.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::lie::{pairs, LieAlgebra, ReductiveSplit};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::metric::MetricSpace;
use crate::normal_form::NormalFormTag;
use crate::nr::{
    AnalysisReport, CurvatureTensor, Decomposability, NRStructure, TorsionTensor, ValidationReport,
};
use crate::rational::Rational;

#[derive(Debug, Clone, Error)]
pub enum IoError {
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
}

impl IoError {
    fn new(field: impl Into<String>, message: impl Into<String>) -> IoError {
        IoError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

fn rational_to_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn rational_from_value(v: &Value, field: &str) -> Result<Rational, IoError> {
    let s = v
        .as_str()
        .ok_or_else(|| IoError::new(field, "expected a rational string"))?;
    s.parse().map_err(|e| IoError::new(field, format!("{e}")))
}

fn vector_to_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

fn vector_from_value(v: &Value, len: usize, field: &str) -> Result<Vector, IoError> {
    let arr = v
        .as_array()
        .ok_or_else(|| IoError::new(field, "expected an array"))?;
    if arr.len() != len {
        return Err(IoError::new(
            field,
            format!("expected {len} entries, got {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| rational_from_value(x, &format!("{field}[{i}]")))
        .collect()
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_value(&m.row(i))).collect())
}

pub fn matrix_from_value(v: &Value, field: &str) -> Result<Matrix, IoError> {
    let rows = v
        .as_array()
        .ok_or_else(|| IoError::new(field, "expected an array of rows"))?;
    let ncols = rows
        .first()
        .and_then(Value::as_array)
        .map(Vec::len)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        out.push(vector_from_value(row, ncols, &format!("{field}[{i}]"))?);
    }
    Ok(Matrix::from_rows(out))
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{},{}", i + 1, j + 1)
}

fn parse_pair_key(key: &str, dim: usize, field: &str) -> Result<(usize, usize), IoError> {
    let bad = || {
        IoError::new(
            field,
            format!("key {key:?} is not a 1-based pair \"i,j\" with i < j <= {dim}"),
        )
    };
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 || i >= j || j > dim {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

fn parse_index_key(key: &str, dim: usize, field: &str) -> Result<usize, IoError> {
    let k: usize = key
        .trim()
        .parse()
        .map_err(|_| IoError::new(field, format!("key {key:?} is not a 1-based index")))?;
    if k == 0 || k > dim {
        return Err(IoError::new(
            field,
            format!("index {k} out of range 1..={dim}"),
        ));
    }
    Ok(k - 1)
}

pub fn metric_to_value(s: &MetricSpace) -> Value {
    json!({
        "labels": s.labels(),
        "gram": matrix_to_value(s.gram()),
    })
}

pub fn metric_from_value(v: &Value, field: &str) -> Result<MetricSpace, IoError> {
    let obj = v
        .as_object()
        .ok_or_else(|| IoError::new(field, "expected an object"))?;
    let gram = matrix_from_value(
        obj.get("gram")
            .ok_or_else(|| IoError::new(format!("{field}.gram"), "missing"))?,
        &format!("{field}.gram"),
    )?;
    let labels: Vec<String> = match obj.get("labels") {
        Some(l) => serde_json::from_value(l.clone())
            .map_err(|e| IoError::new(format!("{field}.labels"), e.to_string()))?,
        None => (1..=gram.rows()).map(|i| format!("X{i}")).collect(),
    };
    MetricSpace::new(gram, labels).map_err(|e| IoError::new(format!("{field}.gram"), e.to_string()))
}

pub fn structure_to_value(s: &NRStructure) -> Value {
    let n = s.space().dim();
    let mut torsion = Map::new();
    for (i, j) in pairs(n) {
        let val = s.torsion().value_basis(i, j);
        if val.iter().all(Rational::is_zero) {
            continue;
        }
        let mut comp = Map::new();
        for (k, c) in val.iter().enumerate() {
            if !c.is_zero() {
                comp.insert((k + 1).to_string(), rational_to_value(c));
            }
        }
        torsion.insert(pair_key(i, j), Value::Object(comp));
    }
    let mut curvature = Map::new();
    for (i, j) in pairs(n) {
        let op = s.curvature().op_basis(i, j);
        if !op.is_zero() {
            curvature.insert(pair_key(i, j), matrix_to_value(&op));
        }
    }
    json!({
        "metric": metric_to_value(s.space()),
        "torsion": Value::Object(torsion),
        "curvature": Value::Object(curvature),
    })
}

pub fn structure_from_value(v: &Value) -> Result<NRStructure, IoError> {
    let obj = v
        .as_object()
        .ok_or_else(|| IoError::new("<root>", "expected an object"))?;
    let metric = metric_from_value(
        obj.get("metric")
            .ok_or_else(|| IoError::new("metric", "missing"))?,
        "metric",
    )?;
    let n = metric.dim();

    let mut torsion_comps: Vec<((usize, usize), Vector)> = Vec::new();
    if let Some(t) = obj.get("torsion") {
        let t = t
            .as_object()
            .ok_or_else(|| IoError::new("torsion", "expected an object"))?;
        for (key, entry) in t {
            let (i, j) = parse_pair_key(key, n, "torsion")?;
            let comp = entry.as_object().ok_or_else(|| {
                IoError::new(format!("torsion.{key}"), "expected an object of components")
            })?;
            let mut vec = vec![Rational::zero(); n];
            for (kk, val) in comp {
                let k = parse_index_key(kk, n, &format!("torsion.{key}"))?;
                vec[k] = rational_from_value(val, &format!("torsion.{key}.{kk}"))?;
            }
            torsion_comps.push(((i, j), vec));
        }
    }

    let mut curvature_comps: Vec<((usize, usize), Matrix)> = Vec::new();
    if let Some(c) = obj.get("curvature") {
        let c = c
            .as_object()
            .ok_or_else(|| IoError::new("curvature", "expected an object"))?;
        for (key, entry) in c {
            let (i, j) = parse_pair_key(key, n, "curvature")?;
            let m = matrix_from_value(entry, &format!("curvature.{key}"))?;
            if m.rows() != n || m.cols() != n {
                return Err(IoError::new(
                    format!("curvature.{key}"),
                    format!("expected a {n}x{n} matrix"),
                ));
            }
            curvature_comps.push(((i, j), m));
        }
    }

    let torsion = TorsionTensor::from_components(metric.clone(), &torsion_comps);
    let curvature = CurvatureTensor::from_components(metric.clone(), &curvature_comps);
    NRStructure::new(metric, torsion, curvature).map_err(|e| IoError::new("<root>", e.to_string()))
}

pub fn lie_to_value(g: &LieAlgebra) -> Value {
    let mut brackets = Map::new();
    for ((i, j), v) in g.nonzero_brackets() {
        let mut comp = Map::new();
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                comp.insert((k + 1).to_string(), rational_to_value(c));
            }
        }
        brackets.insert(pair_key(i, j), Value::Object(comp));
    }
    json!({
        "labels": g.labels(),
        "brackets": Value::Object(brackets),
    })
}

pub fn lie_from_value(v: &Value) -> Result<LieAlgebra, IoError> {
    let obj = v
        .as_object()
        .ok_or_else(|| IoError::new("<root>", "expected an object"))?;
    let labels: Vec<String> = serde_json::from_value(
        obj.get("labels")
            .ok_or_else(|| IoError::new("labels", "missing"))?
            .clone(),
    )
    .map_err(|e| IoError::new("labels", e.to_string()))?;
    let dim = labels.len();
    let mut brackets: Vec<((usize, usize), Vector)> = Vec::new();
    if let Some(b) = obj.get("brackets") {
        let b = b
            .as_object()
            .ok_or_else(|| IoError::new("brackets", "expected an object"))?;
        for (key, entry) in b {
            let (i, j) = parse_pair_key(key, dim, "brackets")?;
            let comp = entry.as_object().ok_or_else(|| {
                IoError::new(
                    format!("brackets.{key}"),
                    "expected an object of components",
                )
            })?;
            let mut vec = vec![Rational::zero(); dim];
            for (kk, val) in comp {
                let k = parse_index_key(kk, dim, &format!("brackets.{key}"))?;
                vec[k] = rational_from_value(val, &format!("brackets.{key}.{kk}"))?;
            }
            brackets.push(((i, j), vec));
        }
    }
    Ok(LieAlgebra::from_brackets(labels, &brackets))
}

pub fn split_to_value(split: &ReductiveSplit) -> Value {
    json!({
        "algebra": lie_to_value(split.algebra()),
        "h": split.h_indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "m": split.m_indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "metric": metric_to_value(split.metric_on_m()),
    })
}

pub fn split_from_value(v: &Value) -> Result<ReductiveSplit, IoError> {
    let obj = v
        .as_object()
        .ok_or_else(|| IoError::new("<root>", "expected an object"))?;
    let algebra = lie_from_value(
        obj.get("algebra")
            .ok_or_else(|| IoError::new("algebra", "missing"))?,
    )?;
    let indices = |name: &str| -> Result<Vec<usize>, IoError> {
        let raw: Vec<usize> = serde_json::from_value(
            obj.get(name)
                .ok_or_else(|| IoError::new(name, "missing"))?
                .clone(),
        )
        .map_err(|e| IoError::new(name, e.to_string()))?;
        raw.iter()
            .map(|&i| {
                if i == 0 || i > algebra.dim() {
                    Err(IoError::new(name, format!("index {i} out of range")))
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    };
    let h = indices("h")?;
    let m = indices("m")?;
    let metric = metric_from_value(
        obj.get("metric")
            .ok_or_else(|| IoError::new("metric", "missing"))?,
        "metric",
    )?;
    ReductiveSplit::new(algebra, h, m, metric).map_err(|e| IoError::new("<root>", e.to_string()))
}

pub fn subspace_to_value(s: &Subspace) -> Value {
    Value::Array(
        s.basis_vectors()
            .iter()
            .map(|v| vector_to_value(v))
            .collect(),
    )
}

pub fn tag_to_value(tag: &NormalFormTag) -> Value {
    let params: BTreeMap<String, String> = tag
        .parameters
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect();
    let mut obj = Map::new();
    obj.insert("family".into(), json!(tag.family.as_str()));
    obj.insert("parameters".into(), json!(params));
    obj.insert("char_poly".into(), vector_to_value(&tag.char_poly));
    if let Some(k) = tag.nilpotency_index {
        obj.insert("nilpotency_index".into(), json!(k));
    }
    if let Some(note) = &tag.note {
        obj.insert("note".into(), json!(note));
    }
    Value::Object(obj)
}

pub fn validation_to_value(r: &ValidationReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "checks": r.checks.iter().map(|c| {
            let mut o = Map::new();
            o.insert("name".into(), json!(c.name));
            o.insert("passed".into(), json!(c.passed));
            if let Some(d) = &c.detail {
                o.insert("detail".into(), json!(d));
            }
            Value::Object(o)
        }).collect::<Vec<_>>(),
    })
}

pub fn decomposability_to_value(d: &Decomposability) -> Value {
    match d {
        Decomposability::Decomposable { witness } => json!({
            "verdict": "decomposable",
            "witness": subspace_to_value(witness),
        }),
        Decomposability::Indecomposable { detail } => json!({
            "verdict": "indecomposable",
            "detail": detail,
        }),
        Decomposability::Unknown { detail } => json!({
            "verdict": "unknown",
            "detail": detail,
        }),
    }
}

pub fn analysis_to_value(report: &AnalysisReport, dim: usize) -> Value {
    let mut obj = Map::new();
    obj.insert("validation".into(), validation_to_value(&report.validation));
    if let Some(g) = &report.geometry {
        obj.insert(
            "geometry".into(),
            serde_json::to_value(g).expect("geometry serializes"),
        );
    }
    if report.holonomy.is_some() {
        obj.insert(
            "holonomy".into(),
            json!({
                "dim": report.holonomy_dim().unwrap(),
                "basis": report
                    .holonomy_matrices(dim)
                    .iter()
                    .map(matrix_to_value)
                    .collect::<Vec<_>>(),
            }),
        );
    }
    if let Some(d) = &report.decomposability {
        obj.insert("decomposability".into(), decomposability_to_value(d));
    }
    obj.insert(
        "curvature_tags".into(),
        Value::Array(report.curvature_tags.iter().map(tag_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn catalog_entry_to_value(entry: &CatalogEntry, kind: &str) -> Option<Value> {
    match kind {
        "structure" => entry.structure.as_ref().map(structure_to_value),
        "algebra" => entry.split.as_ref().map(|s| lie_to_value(s.algebra())),
        "split" => entry.split.as_ref().map(split_to_value),
        _ => None,
    }
}
