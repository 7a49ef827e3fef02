use thiserror::Error;

use crate::degree::{Degree, DegreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Degree(#[from] DegreeError),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge or morphism `{0}`")]
    UnknownEdge(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("morphisms are not composable: source {source_vertex} differs from range {range_vertex}")]
    NotComposable { source_vertex: String, range_vertex: String },
    #[error("ranges differ: {0} vs {1}")]
    RangeMismatch(String, String),
    #[error("split degree {split} is not below {degree}")]
    NotBelow { split: Degree, degree: Degree },
    #[error("no commuting square for the pair {0}")]
    MissingSquare(String),
    #[error("composition of {0} is missing from the table")]
    TableIncomplete(String),
    #[error("degree {0} lies beyond the table bound {1}")]
    BeyondTableBound(Degree, Degree),
    #[error("{morphism} has {count} factorizations at degree {split}")]
    Factorization { morphism: String, split: Degree, count: usize },

    #[error("enumeration of infinite edge families requires a limit")]
    LimitRequired,
    #[error("not enumerable: {0}")]
    NotEnumerable(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("the encoding does not satisfy the membership conditions: {0}")]
    NotAPath(String),

    #[error("groupoid elements are not composable: {0}")]
    NotComposableElements(String),
    #[error("invalid groupoid data: {0}")]
    InvalidElement(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
