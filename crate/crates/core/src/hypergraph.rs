//! Hypergraph representation and the vertex-level operations the game is
//! built on: closed neighbourhoods, the 2-section, connectivity, and the two
//! vertex-deletion operators.
//!
//! Vertices are addressed by their index into the label list. That order is
//! the fixed total order used for every tie-break in the crate.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a vertex in [`Hypergraph::labels`].
pub type Vertex = usize;

/// A finite hypergraph without repeated edges.
///
/// Edges are stored as sorted index lists, and the edge list itself is kept
/// sorted, so two hypergraphs with the same labels and edge sets compare
/// equal regardless of construction order. Size-1 edges are allowed; they
/// contribute nothing to any neighbourhood.
#[derive(Clone)]
pub struct Hypergraph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<Vec<Vertex>>,
    closed: Vec<Vec<Vertex>>,
    adjacency: Vec<Vec<bool>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<Vec<&str>> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| self.labels[v].as_str()).collect())
            .collect();
        f.debug_struct("Hypergraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Closed neighbourhood `N[x]` of a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSet {
    pub vertex: Vertex,
    /// Sorted; always contains `vertex`.
    pub closed_neighborhood: Vec<Vertex>,
}

impl Hypergraph {
    /// Builds a hypergraph from labels and index-based edges.
    ///
    /// Members of each edge are sorted and deduplicated, and repeated edges
    /// are merged.
    pub fn new(labels: Vec<String>, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyHypergraph);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        let n = labels.len();
        let mut set = BTreeSet::new();
        for mut e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange(bad));
            }
            e.sort_unstable();
            e.dedup();
            set.insert(e);
        }
        let edges: Vec<Vec<Vertex>> = set.into_iter().collect();

        let mut adjacency = vec![vec![false; n]; n];
        for (v, row) in adjacency.iter_mut().enumerate() {
            row[v] = true;
        }
        for e in &edges {
            for &a in e {
                for &b in e {
                    adjacency[a][b] = true;
                }
            }
        }
        let closed = adjacency
            .iter()
            .map(|row| (0..n).filter(|&u| row[u]).collect())
            .collect();

        Ok(Self {
            labels,
            index,
            edges,
            closed,
            adjacency,
        })
    }

    /// Builds a hypergraph from string labels; edges name their members by label.
    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut idx_edges = Vec::with_capacity(edges.len());
        for e in edges {
            let mut members = Vec::with_capacity(e.len());
            for v in e {
                let v = v.as_ref();
                members.push(
                    *index
                        .get(v)
                        .ok_or_else(|| Error::UnknownVertex(v.to_string()))?,
                );
            }
            idx_edges.push(members);
        }
        Self::new(labels, idx_edges)
    }

    /// Hypergraph on vertices labelled `1..=n` with index-based edges.
    pub fn with_numbered_vertices(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    fn check(&self, x: Vertex) -> Result<()> {
        if x < self.labels.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(x))
        }
    }

    /// `N[x]` as a sorted slice. Panics if `x` is out of range.
    pub fn closed(&self, x: Vertex) -> &[Vertex] {
        &self.closed[x]
    }

    /// Open neighbourhood `N(x)`. Panics if `x` is out of range.
    pub fn open(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.closed[x].iter().copied().filter(move |&y| y != x)
    }

    /// True when `x == y` or some edge contains both.
    pub fn adjacent_or_equal(&self, x: Vertex, y: Vertex) -> bool {
        self.adjacency[x][y]
    }

    pub fn closed_neighborhood(&self, x: Vertex) -> Result<NeighborSet> {
        self.check(x)?;
        Ok(NeighborSet {
            vertex: x,
            closed_neighborhood: self.closed[x].clone(),
        })
    }

    /// The graph joining every pair of distinct vertices that share an edge.
    pub fn two_section(&self) -> Graph {
        let n = self.vertex_count();
        let mut pairs = Vec::new();
        for a in 0..n {
            for &b in &self.closed[a] {
                if b > a {
                    pairs.push(vec![a, b]);
                }
            }
        }
        Graph(Self::new(self.labels.clone(), pairs).expect("2-section of a valid hypergraph"))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components of the 2-section, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.closed[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Breadth-first distances in the 2-section; `usize::MAX` when unreachable.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.closed[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// (rank, anti-rank): the largest and smallest edge sizes.
    pub fn rank_antirank(&self) -> Result<(usize, usize)> {
        let rank = self
            .edges
            .iter()
            .map(Vec::len)
            .max()
            .ok_or(Error::NoEdges)?;
        let antirank = self
            .edges
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(Error::NoEdges)?;
        Ok((rank, antirank))
    }

    /// True when every edge has exactly two members.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Deletes `x`, keeping the remnant `f - x` only of edges `f` with `|f| >= 3`.
    pub fn dot_delete(&self, x: Vertex) -> Result<Self> {
        self.delete_with(x, 3)
    }

    /// Deletes `x`, keeping every non-empty remnant `f - x` (size-1 remnants included).
    pub fn weak_delete(&self, x: Vertex) -> Result<Self> {
        self.delete_with(x, 2)
    }

    fn delete_with(&self, x: Vertex, min_kept: usize) -> Result<Self> {
        self.check(x)?;
        if self.vertex_count() == 1 {
            return Err(Error::EmptyHypergraph);
        }
        let shift = |v: Vertex| if v > x { v - 1 } else { v };
        let mut labels = self.labels.clone();
        labels.remove(x);
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&x) || e.len() >= min_kept)
            .map(|e| e.iter().filter(|&&v| v != x).map(|&v| shift(v)).collect())
            .collect();
        Self::new(labels, edges)
    }

    /// Least `u != x` (in vertex order) with `N[x] ⊆ N[u]`, if any.
    pub fn is_corner(&self, x: Vertex) -> Result<Option<Vertex>> {
        self.check(x)?;
        Ok(self.cover_of(x))
    }

    pub(crate) fn cover_of(&self, x: Vertex) -> Option<Vertex> {
        // A cover must itself lie in N[x].
        self.closed[x]
            .iter()
            .copied()
            .filter(|&u| u != x)
            .find(|&u| self.closed[x].iter().all(|&w| self.adjacency[u][w]))
    }

    /// Induced relabelling: a copy of this hypergraph with labels replaced.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::param("relabel: label count mismatch"));
        }
        Self::new(labels, self.edges.clone())
    }

    /// Edge members rendered as labels, in canonical edge order.
    pub fn labelled_edges(&self) -> Vec<Vec<&str>> {
        self.edges
            .iter()
            .map(|e| e.iter().map(|&v| self.labels[v].as_str()).collect())
            .collect()
    }
}

/// A hypergraph whose edges all have size exactly two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(h: Hypergraph) -> Result<Self> {
        if h.is_graph() {
            Ok(Graph(h))
        } else {
            Err(Error::param("graph edges must have exactly two vertices"))
        }
    }

    pub fn into_inner(self) -> Hypergraph {
        self.0
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }
}

impl Deref for Graph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}
