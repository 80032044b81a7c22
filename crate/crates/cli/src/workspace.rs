//! The JSON workspace format.
//!
//! ```json
//! {
//!   "backend": "mod",
//!   "params": { "p": 2, "k": 2 },
//!   "objects": { "A": { "exponents": [2] } },
//!   "morphisms": { "two": { "src": "A", "dst": "A", "matrix": [[2]] } },
//!   "complexes": { "X": { "lo": 0, "objects": ["A", "A"], "differentials": ["two"] } },
//!   "maps": {}
//! }
//! ```
//!
//! Vector-space objects are `{ "dim": n }`. Matrices are row-major with one
//! row per summand of the target. All tables are keyed by name and kept
//! sorted, so serializing a parsed file is deterministic. Exponent lists
//! must be ascending; they are never reordered.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Vect,
    Mod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    Vect { dim: usize },
    Mod { exponents: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub src: String,
    pub dst: String,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub lo: i64,
    pub objects: Vec<String>,
    pub differentials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub src: String,
    pub dst: String,
    pub lo: i64,
    pub components: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub backend: BackendKind,
    pub params: Params,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default)]
    pub complexes: BTreeMap<String, ComplexSpec>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapSpec>,
}

impl WorkspaceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("parse error at line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("workspace serializes")
    }
}
