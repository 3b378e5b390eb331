//! JSON hypergraph files.
//!
//! ```json
//! {"name": "triangle", "vertices": ["1", "2", "3"], "edges": [["1", "2", "3"]]}
//! ```
//!
//! Vertex order in the file is the hypergraph's vertex order. Serialisation is
//! canonical: members of each edge are sorted by label and edges are sorted
//! lexicographically, so parse then serialise is a fixed point.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, FormatCode, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

fn format_error(
    code: FormatCode,
    location: impl Into<String>,
    message: impl Into<String>,
) -> Error {
    Error::Format {
        code,
        location: location.into(),
        message: message.into(),
    }
}

impl HypergraphFile {
    pub fn parse(bytes: &[u8]) -> Result<Self> {
        serde_json::from_slice(bytes).map_err(|e| {
            format_error(
                FormatCode::MalformedJson,
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    /// Canonical file for `h`.
    pub fn from_hypergraph(h: &Hypergraph, name: Option<String>) -> Self {
        let mut edges: Vec<Vec<String>> = h
            .labelled_edges()
            .into_iter()
            .map(|e| {
                let mut e: Vec<String> = e.into_iter().map(String::from).collect();
                e.sort();
                e
            })
            .collect();
        edges.sort();
        Self {
            name,
            vertices: h.labels().to_vec(),
            edges,
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        if self.vertices.is_empty() {
            return Err(format_error(
                FormatCode::EmptyVertexSet,
                "vertices",
                "vertex list is empty",
            ));
        }
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(format_error(
                    FormatCode::DuplicateVertex,
                    format!("vertices[{i}]"),
                    format!("vertex `{v}` listed twice"),
                ));
            }
        }
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_empty() {
                return Err(format_error(
                    FormatCode::EmptyEdge,
                    format!("edges[{i}]"),
                    "edge has no members",
                ));
            }
            let mut members = HashSet::new();
            let mut edge = Vec::with_capacity(e.len());
            for (j, v) in e.iter().enumerate() {
                let &x = index.get(v.as_str()).ok_or_else(|| {
                    format_error(
                        FormatCode::UnknownVertex,
                        format!("edges[{i}][{j}]"),
                        format!("edge names unknown vertex `{v}`"),
                    )
                })?;
                if !members.insert(x) {
                    return Err(format_error(
                        FormatCode::DuplicateVertex,
                        format!("edges[{i}][{j}]"),
                        format!("vertex `{v}` repeated within an edge"),
                    ));
                }
                edge.push(x);
            }
            edge.sort_unstable();
            if let Some(first) = seen.insert(edge.clone(), i) {
                return Err(format_error(
                    FormatCode::DuplicateEdge,
                    format!("edges[{i}]"),
                    format!("same vertex set as edges[{first}]"),
                ));
            }
            edges.push(edge);
        }
        Hypergraph::new(self.vertices.clone(), edges)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("file serialises");
        s.push('\n');
        s
    }
}

pub fn parse_hypergraph(bytes: &[u8]) -> Result<Hypergraph> {
    HypergraphFile::parse(bytes)?.to_hypergraph()
}

pub fn serialize_hypergraph(h: &Hypergraph, name: Option<&str>) -> String {
    HypergraphFile::from_hypergraph(h, name.map(String::from)).to_json()
}
