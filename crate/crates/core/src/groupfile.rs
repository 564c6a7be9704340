//! JSON description of a point group:
//!
//! ```json
//! { "name": "p4m", "rank": 2, "generators": [[[0, -1], [1, 0]], [[0, 1], [1, 0]]] }
//! ```
//!
//! Entries are integers of any size; floats are rejected. Unknown keys are
//! ignored, so an `analyze --json` report parses back as the group it
//! describes.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Number, Value};
use thiserror::Error;

use crate::intmat::IntMatrix;

#[derive(Debug, Error)]
pub enum GroupFileError {
    #[error("malformed group file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("generator {generator}: expected {expected} rows, found {found}")]
    RowCount { generator: usize, expected: usize, found: usize },
    #[error("generator {generator}, row {row}: expected {expected} entries, found {found}")]
    Ragged { generator: usize, row: usize, expected: usize, found: usize },
    #[error("generator {generator}, row {row}: '{value}' is not an integer")]
    NotInteger { generator: usize, row: usize, value: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: Option<String>,
    pub rank: usize,
    pub generators: Vec<IntMatrix>,
}

#[derive(Deserialize)]
struct Raw {
    #[serde(default)]
    name: Option<String>,
    rank: usize,
    generators: Vec<Vec<Vec<Number>>>,
}

fn parse_integer(n: &Number) -> Option<BigInt> {
    let text = n.to_string();
    if text.contains(['.', 'e', 'E']) {
        return None;
    }
    BigInt::from_str(&text).ok()
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, GroupFileError> {
        let raw: Raw = serde_json::from_str(text)?;
        if raw.rank == 0 {
            return Err(GroupFileError::ZeroRank);
        }
        let mut generators = Vec::with_capacity(raw.generators.len());
        for (generator, rows) in raw.generators.iter().enumerate() {
            if rows.len() != raw.rank {
                return Err(GroupFileError::RowCount { generator, expected: raw.rank, found: rows.len() });
            }
            let mut parsed = Vec::with_capacity(raw.rank);
            for (row, entries) in rows.iter().enumerate() {
                if entries.len() != raw.rank {
                    return Err(GroupFileError::Ragged { generator, row, expected: raw.rank, found: entries.len() });
                }
                let ints = entries
                    .iter()
                    .map(|n| {
                        parse_integer(n).ok_or_else(|| GroupFileError::NotInteger {
                            generator,
                            row,
                            value: n.to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                parsed.push(ints);
            }
            generators.push(IntMatrix::from_rows(parsed).expect("shape checked above"));
        }
        Ok(GroupFile { name: raw.name, rank: raw.rank, generators })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "rank": self.rank,
            "generators": self.generators.iter().map(matrix_json).collect::<Vec<_>>(),
        });
        if let Some(name) = &self.name {
            v["name"] = json!(name);
        }
        v
    }

    /// Pretty form with one generator per line.
    pub fn to_json_string(&self) -> String {
        let mut out = String::from("{\n");
        if let Some(name) = &self.name {
            out += &format!("  \"name\": {},\n", Value::String(name.clone()));
        }
        out += &format!("  \"rank\": {},\n  \"generators\": [", self.rank);
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|m| {
                let rows: Vec<String> = m
                    .rows()
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
                    .collect();
                format!("\n    [{}]", rows.join(", "))
            })
            .collect();
        out += &gens.join(",");
        out += if gens.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" };
        out
    }
}

/// Exact JSON number for an integer of any size.
pub fn integer_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(integer_json).collect())).collect())
}
