use thiserror::Error;

use crate::graph::{Edge, GraphKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("invalid edge ({i}, {j}): {reason}")]
    InvalidEdge { i: usize, j: usize, reason: String },

    #[error("edge {edge} is not allowed in a type {kind} graph: {reason}")]
    KindViolation {
        edge: Edge,
        kind: GraphKind,
        reason: &'static str,
    },

    #[error("edge {0} has multiplicity 0")]
    MissingEdge(Edge),

    #[error("{what} has length {got}, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("more than {limit} flows exist")]
    LimitExceeded { limit: usize },

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    #[error("extension puts flow {value} on edge {edge}")]
    NegativeExtension { edge: Edge, value: i64 },

    #[error("extension index {k} is outside 0..={max}")]
    IndexOutOfRange { k: u64, max: i64 },

    #[error("not a valid flow: {0}")]
    InvalidFlow(String),

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
