//! JSON schema for graph files.
//!
//! ```json
//! {"rank": 1, "vertices": ["v"], "backend": "one-graph",
//!  "edges": [{"name": "1", "src": "v", "dst": "v"},
//!            {"family": "e", "src": "v", "dst": "v", "start": 1}]}
//! ```
//!
//! `src` is the vertex an edge leaves (its range in the categorical
//! convention), `dst` the vertex it enters (its source). Paths are written
//! left to right from their range.

use serde::{Deserialize, Serialize};

use crate::degree::Degree;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub vertices: Vec<String>,
    #[serde(flatten)]
    pub backend: BackendSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend")]
pub enum BackendSpec {
    #[serde(rename = "one-graph")]
    OneGraph { edges: Vec<EdgeSpec> },
    /// Two-colored graph with commuting squares `[e, f, f′, e′]` meaning
    /// `ef = f′e′`, `e, e′` blue and `f, f′` red.
    #[serde(rename = "squares")]
    Squares {
        blue: Vec<NamedEdgeSpec>,
        red: Vec<NamedEdgeSpec>,
        squares: Vec<[String; 4]>,
    },
    /// All non-vertex morphisms of degree at most `bound`, with compositions
    /// `[a, b, c]` meaning `ab = c`.
    #[serde(rename = "table")]
    Table {
        bound: Degree,
        morphisms: Vec<TableMorphismSpec>,
        compositions: Vec<[String; 3]>,
        /// Pairs declared to have infinitely many common extensions.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        unbounded_extensions: Vec<[String; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeSpec {
    Named(NamedEdgeSpec),
    Family(FamilyEdgeSpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedEdgeSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// An ℕ-indexed family `family[start], family[start+1], …` of parallel edges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEdgeSpec {
    pub family: String,
    pub src: String,
    pub dst: String,
    #[serde(default)]
    pub start: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableMorphismSpec {
    pub id: String,
    pub degree: Degree,
    pub src: String,
    pub dst: String,
}
