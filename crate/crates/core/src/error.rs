use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::VertexId;
use crate::scalar::Scalar;

/// Which half of a bipolar membership a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Positive,
    Negative,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Positive => "positive",
            Component::Negative => "negative",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{component} membership {value} is out of range")]
    Range { component: Component, value: Scalar },
    #[error("decimal {0:?} has more than 4 fractional digits")]
    Precision(String),
    #[error("invalid decimal {0:?}")]
    InvalidDecimal(String),
    #[error("invalid vertex id {0:?}")]
    InvalidVertexId(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0} {1} references unknown vertex {2}")]
    UnknownEndpoint(VertexId, VertexId, VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error(
        "edge {u} {v} violates {component} domination: {edge_value} exceeds bound {bound}"
    )]
    DominationViolation {
        u: VertexId,
        v: VertexId,
        component: Component,
        edge_value: Scalar,
        bound: Scalar,
    },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("infeasible grid: {0}")]
    InfeasibleGrid(String),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("invalid value grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
