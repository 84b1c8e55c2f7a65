//! Machine-readable serialization.
//!
//! Series travel as JSON objects
//!
//! ```json
//! {"truncation_order": 8, "coeffs": {"1": "1", "2": "1/2"}}
//! ```
//!
//! with degrees as keys in ascending order, canonical rational strings as
//! values, and absent keys meaning zero. `truncation_order` may be omitted,
//! in which case the document describes a polynomial (exact at every
//! degree). All numeric payloads are rational strings; nothing is ever
//! printed in decimal.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::certify::{CertificateReport, MarginRecord, SigmaSuiteReport};
use crate::classify::GermClassification;
use crate::flow::{FlowMap, VectorField};
use crate::rational::{parse_rat, Rat};
use crate::series::{Germ, TruncatedSeries};
use crate::valuation::Valuation;

/// Errors from reading a series document.
#[derive(Debug)]
pub enum ParseError {
    /// Malformed JSON; the message carries line and column.
    Json(serde_json::Error),
    /// Well-formed JSON with the wrong shape; `path` names the offending
    /// field.
    Structure { path: String, message: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Json(e) => write!(f, "malformed JSON: {e}"),
            ParseError::Structure { path, message } => write!(f, "at `{path}`: {message}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Json(e)
    }
}

fn structure(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Structure {
        path: path.into(),
        message: message.into(),
    }
}

/// A parsed series document, before a truncation order is pinned down.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesDocument {
    /// Nonzero coefficients by degree.
    pub coeffs: BTreeMap<usize, Rat>,
    /// The order stated in the document, when present. Absent means the
    /// document is a polynomial and may be extended with exact zeros.
    pub explicit_order: Option<usize>,
}

impl SeriesDocument {
    /// Realize the document as a series at the given order; degrees beyond
    /// it are an error when the document pinned an order lower than them.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries, ParseError> {
        let mut coeffs = vec![Rat::from_integer(0.into()); order + 1];
        for (&degree, value) in &self.coeffs {
            if degree <= order {
                coeffs[degree] = value.clone();
            }
        }
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }

    /// Largest degree carrying a nonzero coefficient.
    pub fn max_degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }
}

/// Parse a series document from JSON text.
pub fn parse_series_document(text: &str) -> Result<SeriesDocument, ParseError> {
    let value: Value = serde_json::from_str(text)?;
    series_document_from_value(&value)
}

/// Parse a series document from a JSON value.
pub fn series_document_from_value(value: &Value) -> Result<SeriesDocument, ParseError> {
    let object = value
        .as_object()
        .ok_or_else(|| structure("", "expected a JSON object"))?;
    for key in object.keys() {
        if key != "truncation_order" && key != "coeffs" {
            return Err(structure(key, "unknown field"));
        }
    }
    let explicit_order = match object.get("truncation_order") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    structure("truncation_order", "expected an integer >= 1")
                })? as usize,
        ),
    };
    let mut coeffs = BTreeMap::new();
    if let Some(raw) = object.get("coeffs") {
        let map = raw
            .as_object()
            .ok_or_else(|| structure("coeffs", "expected an object of degree -> rational"))?;
        for (key, entry) in map {
            let path = format!("coeffs.{key}");
            let degree: usize = key
                .parse()
                .map_err(|_| structure(&path, "degree must be a nonnegative integer"))?;
            if let Some(order) = explicit_order {
                if degree > order {
                    return Err(structure(
                        &path,
                        format!("degree exceeds the stated truncation order {order}"),
                    ));
                }
            }
            let text = entry
                .as_str()
                .ok_or_else(|| structure(&path, "coefficient must be a rational string"))?;
            let value = parse_rat(text).map_err(|e| structure(&path, e.to_string()))?;
            if !num_traits::Zero::is_zero(&value) {
                coeffs.insert(degree, value);
            }
        }
    }
    Ok(SeriesDocument {
        coeffs,
        explicit_order,
    })
}

/// Parse a series whose document pins its own truncation order (or, for a
/// polynomial document, uses the highest degree present).
pub fn series_from_value(value: &Value) -> Result<TruncatedSeries, ParseError> {
    let document = series_document_from_value(value)?;
    let order = document
        .explicit_order
        .unwrap_or_else(|| document.max_degree().max(1));
    document.to_series(order)
}

/// Serialize a series with ascending-degree keys, omitting zeros.
pub fn series_to_value(series: &TruncatedSeries) -> Value {
    let mut coeffs = Map::new();
    for (degree, c) in series.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            coeffs.insert(degree.to_string(), Value::String(c.to_string()));
        }
    }
    json!({
        "truncation_order": series.truncation_order(),
        "coeffs": Value::Object(coeffs),
    })
}

pub fn germ_to_value(germ: &Germ) -> Value {
    series_to_value(germ.series())
}

pub fn field_to_value(field: &VectorField) -> Value {
    series_to_value(field.series())
}

/// Flow maps serialize each `a_n(t)` as the array of its `t`-coefficients.
pub fn flow_to_value(flow: &FlowMap) -> Value {
    let mut entries = Map::new();
    for n in 1..=flow.truncation_order() {
        let poly = flow.coefficient(n);
        let arr: Vec<Value> = poly
            .coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect();
        entries.insert(n.to_string(), Value::Array(arr));
    }
    json!({
        "truncation_order": flow.truncation_order(),
        "a": Value::Object(entries),
    })
}

pub fn classification_to_value(classification: &GermClassification) -> Value {
    let mut steps = Map::new();
    for (n, c) in classification.step_coeffs.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            steps.insert(n.to_string(), Value::String(c.to_string()));
        }
    }
    json!({
        "m": classification.m,
        "mu": classification.mu.to_string(),
        "scale": classification.scale.to_string(),
        "c": Value::Object(steps),
        "H": series_to_value(&classification.conjugator),
    })
}

pub fn valuation_to_value(v: Valuation) -> Value {
    match v {
        Valuation::Finite(n) => json!(n),
        Valuation::Infinite => json!("inf"),
    }
}

fn margin_to_value(record: &MarginRecord) -> Value {
    let mut object = Map::new();
    object.insert("n".into(), json!(record.degree));
    object.insert("kind".into(), json!(record.kind.label()));
    if let Some(power) = record.t_power {
        object.insert("t_power".into(), json!(power));
    }
    object.insert("ord".into(), valuation_to_value(record.ord));
    object.insert("required".into(), json!(record.required));
    object.insert("margin".into(), valuation_to_value(record.margin));
    Value::Object(object)
}

pub fn report_to_value(report: &CertificateReport) -> Value {
    json!({
        "prime": report.prime,
        "q_exponent": report.q_exponent,
        "verdict": report.verdict.to_string(),
        "records": report.records.iter().map(margin_to_value).collect::<Vec<_>>(),
    })
}

pub fn sigma_suite_to_value(report: &SigmaSuiteReport) -> Value {
    json!({
        "m": report.m,
        "n_max": report.n_max,
        "tuple_weight_max": report.tuple_weight_max,
        "verdict": report.verdict().to_string(),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({"part": v.part, "witness": v.witness}))
            .collect::<Vec<_>>(),
    })
}
