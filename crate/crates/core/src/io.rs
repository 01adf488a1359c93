//! JSON matrix files.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"rank": 2, "gram": [[2, 1], [1, -2]]}
//! {"rows": 4, "cols": 4, "entries": [[1, 0, 0, 0], ...]}
//! ```
//!
//! Entries must be JSON integers of any size; `2.0` or `"2"` are rejected.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixFileError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid matrix file: {0}")]
    Format(String),
    #[error("entry {0} is not an integer")]
    NotInteger(String),
}

fn format_err(msg: impl Into<String>) -> MatrixFileError {
    MatrixFileError::Format(msg.into())
}

fn dimension(obj: &Map<String, Value>, key: &str) -> Result<usize, MatrixFileError> {
    let v = obj
        .get(key)
        .ok_or_else(|| format_err(format!("missing `{key}`")))?;
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| format_err(format!("`{key}` must be a non-negative integer, got {v}")))
}

fn integer(v: &Value) -> Result<BigInt, MatrixFileError> {
    match v {
        // arbitrary_precision keeps the literal, so 2.0 and 1e3 stay visible
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| MatrixFileError::NotInteger(n.to_string())),
        other => Err(MatrixFileError::NotInteger(other.to_string())),
    }
}

fn nested(v: &Value, rows: usize, cols: usize, key: &str) -> Result<IntMatrix, MatrixFileError> {
    let outer = v
        .as_array()
        .ok_or_else(|| format_err(format!("`{key}` must be an array of rows")))?;
    if outer.len() != rows {
        return Err(format_err(format!(
            "`{key}` has {} rows, expected {rows}",
            outer.len()
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in outer.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| format_err(format!("row {i} of `{key}` is not an array")))?;
        if row.len() != cols {
            return Err(format_err(format!(
                "row {i} of `{key}` has {} entries, expected {cols}",
                row.len()
            )));
        }
        for x in row {
            entries.push(integer(x)?);
        }
    }
    IntMatrix::new(rows, cols, entries).map_err(|e| format_err(e.to_string()))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), MatrixFileError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(format_err(format!("unexpected key `{k}`"))),
        None => Ok(()),
    }
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, MatrixFileError> {
    let value: Value = serde_json::from_str(text).map_err(|e| MatrixFileError::Json(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| format_err("top level must be an object"))?;
    if obj.contains_key("gram") {
        reject_unknown(obj, &["rank", "gram"])?;
        let n = dimension(obj, "rank")?;
        nested(&obj["gram"], n, n, "gram")
    } else if obj.contains_key("entries") {
        reject_unknown(obj, &["rows", "cols", "entries"])?;
        let rows = dimension(obj, "rows")?;
        let cols = dimension(obj, "cols")?;
        nested(&obj["entries"], rows, cols, "entries")
    } else {
        Err(format_err("expected either `gram` or `entries`"))
    }
}

pub fn read_matrix(path: &Path) -> Result<IntMatrix, MatrixFileError> {
    let text = std::fs::read_to_string(path).map_err(|e| MatrixFileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_matrix(&text)
}

fn nested_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|x| Value::Number(x.to_string().parse().expect("integer literal")))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// `{"rows", "cols", "entries"}` form.
pub fn matrix_to_json(m: &IntMatrix) -> String {
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "entries": nested_json(m) }).to_string()
}

/// `{"rank", "gram"}` form.
pub fn gram_to_json(m: &IntMatrix) -> String {
    serde_json::json!({ "rank": m.rows(), "gram": nested_json(m) }).to_string()
}
