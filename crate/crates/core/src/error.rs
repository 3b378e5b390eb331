use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::solver::Side;

/// Machine-readable error codes for hypergraph file parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormatCode {
    MalformedJson,
    DuplicateVertex,
    UnknownVertex,
    DuplicateEdge,
    EmptyEdge,
    EmptyVertexSet,
}

impl fmt::Display for FormatCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormatCode::MalformedJson => "MALFORMED_JSON",
            FormatCode::DuplicateVertex => "DUPLICATE_VERTEX",
            FormatCode::UnknownVertex => "UNKNOWN_VERTEX",
            FormatCode::DuplicateEdge => "DUPLICATE_EDGE",
            FormatCode::EmptyEdge => "EMPTY_EDGE",
            FormatCode::EmptyVertexSet => "EMPTY_VERTEX_SET",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("hypergraph has no vertices")]
    EmptyHypergraph,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("edges must contain at least one vertex")]
    EmptyEdge,
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("operation needs at least {needed} vertices, found {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid host tree: {0}")]
    InvalidHostTree(String),
    #[error("edge {{{0}}} does not induce a subtree of the host tree")]
    NotSubtree(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("{side} strategy made an illegal move in round {round}: {detail}")]
    IllegalMove {
        side: Side,
        round: usize,
        detail: String,
    },
    #[error("{side} strategy failed in round {round}: {message}")]
    Strategy {
        side: Side,
        round: usize,
        message: String,
    },
    #[error("strategy precondition violated: {0}")]
    Precondition(String),
    #[error("{code} at {location}: {message}")]
    Format {
        code: FormatCode,
        location: String,
        message: String,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// Parse error code, if this is a file-format error.
    pub fn format_code(&self) -> Option<FormatCode> {
        match self {
            Error::Format { code, .. } => Some(*code),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
