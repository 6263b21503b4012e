//! Text and JSON interchange formats.
//!
//! Forms are comma-separated coefficient lists in the monomial order
//! `X0^d, X0^(d-1) X1, X0^(d-1) X2, ...` (lexicographic in the exponent of
//! `X0`, then `X1`). For cubics this is
//! `[X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2, X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3]`.
//! Rationals are written `n` or `n/d` and never as floating point.

use std::str::FromStr;

use lindet::algebra::{LinearMatrixRep, ProjPoint, Rational, TernaryForm};
use lindet::elliptic::ECPoint;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("field {field} (column {column}): {message}")]
    Field { field: usize, column: usize, message: String },
    #[error("expected {expected} fields, found {found}")]
    Arity { expected: String, found: usize },
    #[error("invalid representation JSON: {0}")]
    Json(String),
}

fn field_error(field: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Field { field, column, message: message.into() }
}

/// Splits on commas, keeping the 1-based column where each field starts.
fn fields(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        out.push((start + lead + 1, part.trim()));
        start += part.len() + 1;
    }
    out
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(n).map_err(|_| format!("`{s}` is not a rational"))?;
    let d = match d {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("`{s}` is not a rational"))?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(format!("`{s}` has zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn parse_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    fields(text)
        .into_iter()
        .enumerate()
        .map(|(i, (col, f))| parse_rational(f).map_err(|m| field_error(i + 1, col, m)))
        .collect()
}

fn degree_for_arity(n: usize) -> Option<usize> {
    match n {
        3 => Some(1),
        6 => Some(2),
        10 => Some(3),
        _ => None,
    }
}

/// A line, conic or cubic, with the degree read off the number of fields.
pub fn parse_form(text: &str) -> Result<TernaryForm, ParseError> {
    let c = parse_list(text)?;
    let d = degree_for_arity(c.len()).ok_or(ParseError::Arity { expected: "3, 6 or 10".into(), found: c.len() })?;
    Ok(TernaryForm::new(d, c).expect("arity matches degree"))
}

pub fn parse_form_of_degree(text: &str, degree: usize) -> Result<TernaryForm, ParseError> {
    let c = parse_list(text)?;
    let expected = (degree + 1) * (degree + 2) / 2;
    if c.len() != expected {
        return Err(ParseError::Arity { expected: expected.to_string(), found: c.len() });
    }
    Ok(TernaryForm::new(degree, c).expect("arity matches degree"))
}

pub fn print_form(f: &TernaryForm) -> String {
    f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_proj_point(text: &str) -> Result<ProjPoint, ParseError> {
    let c = parse_list(text)?;
    if c.len() != 3 {
        return Err(ParseError::Arity { expected: "3".into(), found: c.len() });
    }
    ProjPoint::from_rationals(&[c[0].clone(), c[1].clone(), c[2].clone()])
        .map_err(|_| field_error(1, 1, "all coordinates are zero"))
}

pub fn print_proj_point(p: &ProjPoint) -> String {
    p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// `x,y` for an affine point, `O` for the origin.
pub fn parse_ec_point(text: &str) -> Result<ECPoint, ParseError> {
    if text.trim() == "O" {
        return Ok(ECPoint::Infinity);
    }
    let c = parse_list(text)?;
    if c.len() != 2 {
        return Err(ParseError::Arity { expected: "2".into(), found: c.len() });
    }
    Ok(ECPoint::affine(c[0].clone(), c[1].clone()))
}

pub fn print_ec_point(p: &ECPoint) -> String {
    match p {
        ECPoint::Infinity => "O".into(),
        ECPoint::Affine { x, y } => format!("{x},{y}"),
    }
}

pub fn ec_point_json(p: &ECPoint) -> Value {
    match p {
        ECPoint::Infinity => Value::Null,
        ECPoint::Affine { x, y } => json!([x.to_string(), y.to_string()]),
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn form_json(f: &TernaryForm) -> Value {
    Value::Array(f.coeffs().iter().map(rational_json).collect())
}

pub fn proj_point_json(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn rep_to_json(m: &LinearMatrixRep) -> Value {
    let d = m.size();
    let rows: Vec<Value> = (0..d)
        .map(|i| Value::Array((0..d).map(|j| Value::Array(m.entry(i, j).iter().map(rational_json).collect())).collect()))
        .collect();
    json!({ "size": d, "entries": rows })
}

fn json_rational(v: &Value) -> Result<Rational, ParseError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(ParseError::Json),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).map_err(ParseError::Json),
        other => Err(ParseError::Json(format!("{other} is not a rational"))),
    }
}

/// Accepts `{"size", "entries"}` or any object carrying one under `"representation"`.
pub fn rep_from_json(v: &Value) -> Result<LinearMatrixRep, ParseError> {
    let v = v.get("representation").unwrap_or(v);
    let bad = |m: &str| ParseError::Json(m.to_string());
    let size = v.get("size").and_then(Value::as_u64).ok_or_else(|| bad("missing integer \"size\""))? as usize;
    let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing array \"entries\""))?;
    if rows.len() != size {
        return Err(bad("number of rows differs from size"));
    }
    let mut entries = Vec::with_capacity(size * size);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == size).ok_or_else(|| bad("row length differs from size"))?;
        for e in row {
            let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| bad("entry is not a list of 3 coefficients"))?;
            entries.push([json_rational(&e[0])?, json_rational(&e[1])?, json_rational(&e[2])?]);
        }
    }
    LinearMatrixRep::new(size, entries).map_err(|e| ParseError::Json(e.to_string()))
}

pub fn parse_rep(text: &str) -> Result<LinearMatrixRep, ParseError> {
    let v: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    rep_from_json(&v)
}
