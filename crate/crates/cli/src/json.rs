//! JSON encoding of values.
//!
//! A set is `{"set": [...]}` with elements in canonical order; a matrix is
//! `{"matrix": {"rows": m, "cols": n, "entries": [...]}}` with entries row-major.

use serde_json::{json, Map, Value as Json};
use smt_core::{Value, ValueRef};

use crate::CliError;

pub fn encode(v: &Value) -> Json {
    match v.view() {
        ValueRef::Set(els) => json!({ "set": els.iter().map(encode).collect::<Vec<_>>() }),
        ValueRef::Matrix {
            rows,
            cols,
            entries,
        } => json!({
            "matrix": {
                "rows": rows,
                "cols": cols,
                "entries": entries.iter().map(encode).collect::<Vec<_>>(),
            }
        }),
    }
}

/// Compact single-line text.
pub fn to_string(v: &Value) -> String {
    encode(v).to_string()
}

pub fn decode(j: &Json) -> Result<Value, CliError> {
    let obj = j
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| bad("expected an object with a single \"set\" or \"matrix\" key"))?;
    if let Some(items) = obj.get("set") {
        let items = items
            .as_array()
            .ok_or_else(|| bad("\"set\" must be an array"))?;
        return Ok(Value::set(
            items.iter().map(decode).collect::<Result<Vec<_>, _>>()?,
        ));
    }
    let m = obj
        .get("matrix")
        .and_then(Json::as_object)
        .ok_or_else(|| bad("expected \"set\" or \"matrix\""))?;
    let rows = dim(m, "rows")?;
    let cols = dim(m, "cols")?;
    let entries = m
        .get("entries")
        .and_then(Json::as_array)
        .ok_or_else(|| bad("\"entries\" must be an array"))?
        .iter()
        .map(decode)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Value::matrix(rows, cols, entries)?)
}

pub fn from_str(text: &str) -> Result<Value, CliError> {
    let j: Json = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    decode(&j)
}

fn dim(m: &Map<String, Json>, key: &str) -> Result<usize, CliError> {
    m.get(key)
        .and_then(Json::as_u64)
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(&format!("\"{key}\" must be a non-negative integer")))
}

fn bad(message: &str) -> CliError {
    CliError::Json(message.to_string())
}
