//! Generators for the hypergraph families the game is analysed on.

mod hypertree;
mod random;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub use hypertree::{
    hypertree_from_host, random_hypertree, random_tree, tree_from_prufer, HostTree,
};
pub use random::{
    connected_graphs, nonisomorphic_trees, random_connected_graph, random_connected_hypergraph,
    tree_canonical_form,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Hypercube,
}

/// Standard graphs as 2-uniform hypergraphs on vertices `1..=n`.
///
/// `Hypercube` takes a dimension and is built as an iterated product of `K2`.
pub fn basic(kind: BasicKind, n: usize) -> Result<Hypergraph> {
    match kind {
        BasicKind::Path => {
            if n == 0 {
                return Err(Error::param("path needs at least one vertex"));
            }
            Hypergraph::with_numbered_vertices(n, (1..n).map(|i| vec![i - 1, i]).collect())
        }
        BasicKind::Cycle => {
            if n < 3 {
                return Err(Error::param("cycle needs at least three vertices"));
            }
            Hypergraph::with_numbered_vertices(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
        }
        BasicKind::Complete => {
            if n == 0 {
                return Err(Error::param("complete graph needs at least one vertex"));
            }
            Hypergraph::with_numbered_vertices(
                n,
                (0..n)
                    .tuple_combinations()
                    .map(|(a, b)| vec![a, b])
                    .collect(),
            )
        }
        BasicKind::Hypercube => {
            let k2 = basic(BasicKind::Complete, 2)?;
            product_of(&vec![k2; n])
        }
    }
}

/// The Petersen graph on vertices `1..=10`: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(vec![i, (i + 1) % 5]);
        edges.push(vec![i, i + 5]);
        edges.push(vec![5 + i, 5 + (i + 2) % 5]);
    }
    Hypergraph::with_numbered_vertices(10, edges).expect("valid")
}

/// A single edge on vertices `1..=n`.
pub fn single_edge(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::param("edge needs at least one vertex"));
    }
    Hypergraph::with_numbered_vertices(n, vec![(0..n).collect()])
}

/// Parameters of the complete multipartite families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    /// Edge size.
    pub r: usize,
    /// Minimum number of classes an edge must meet (L family only).
    pub s: Option<usize>,
    /// Non-decreasing class sizes.
    pub parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn k_family(r: usize, parts: &[usize]) -> Self {
        Self {
            r,
            s: None,
            parts: parts.to_vec(),
        }
    }

    pub fn l_family(r: usize, s: usize, parts: &[usize]) -> Self {
        Self {
            r,
            s: Some(s),
            parts: parts.to_vec(),
        }
    }

    fn check_parts(&self) -> Result<()> {
        if self.parts.len() < 2 {
            return Err(Error::param("need at least two classes"));
        }
        if self.parts[0] == 0 || self.parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::param(
                "class sizes must be positive and non-decreasing",
            ));
        }
        Ok(())
    }

    pub fn validate_k(&self) -> Result<()> {
        self.check_parts()?;
        let t = self.parts.len();
        if self.s.is_some() {
            return Err(Error::param("K family takes no class threshold"));
        }
        if !(2 <= self.r && self.r <= t) {
            return Err(Error::param(format!(
                "K family needs 2 <= r <= t, got r={} t={t}",
                self.r
            )));
        }
        Ok(())
    }

    pub fn validate_l(&self) -> Result<()> {
        self.check_parts()?;
        let t = self.parts.len();
        let s = self
            .s
            .ok_or_else(|| Error::param("L family needs a class threshold s"))?;
        if !(2 <= s && s <= t && t < self.r) {
            return Err(Error::param(format!(
                "L family needs 2 <= s <= t < r, got s={s} t={t} r={}",
                self.r
            )));
        }
        let total: usize = self.parts.iter().sum();
        if total < self.r {
            return Err(Error::param(format!(
                "L family needs at least r={} vertices, got {total}",
                self.r
            )));
        }
        Ok(())
    }

    /// Vertex labels `i.j` (class `i`, member `j`, both from 1) and each vertex's class.
    fn layout(&self) -> (Vec<String>, Vec<usize>) {
        let mut labels = Vec::new();
        let mut class = Vec::new();
        for (i, &size) in self.parts.iter().enumerate() {
            for j in 0..size {
                labels.push(format!("{}.{}", i + 1, j + 1));
                class.push(i);
            }
        }
        (labels, class)
    }

    /// Class index (from 0) of every vertex in generated order.
    pub fn classes(&self) -> Vec<usize> {
        self.layout().1
    }
}

/// r-uniform complete t-partite hypergraph: every r-set meeting each class at most once.
pub fn complete_multipartite(spec: &PartitionSpec) -> Result<Hypergraph> {
    spec.validate_k()?;
    let (labels, class) = spec.layout();
    let edges = (0..labels.len())
        .combinations(spec.r)
        .filter(|e| e.iter().map(|&v| class[v]).all_unique())
        .collect();
    Hypergraph::new(labels, edges)
}

/// r-uniform hypergraph whose edges are the r-sets meeting at least s classes.
pub fn l_multipartite(spec: &PartitionSpec) -> Result<Hypergraph> {
    spec.validate_l()?;
    let s = spec.s.expect("validated");
    let (labels, class) = spec.layout();
    let edges = (0..labels.len())
        .combinations(spec.r)
        .filter(|e| e.iter().map(|&v| class[v]).unique().count() >= s)
        .collect();
    Hypergraph::new(labels, edges)
}

/// A multipartite family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Multipartite {
    K(PartitionSpec),
    L(PartitionSpec),
}

impl Multipartite {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            Multipartite::K(spec) => complete_multipartite(spec),
            Multipartite::L(spec) => l_multipartite(spec),
        }
    }

    pub fn spec(&self) -> &PartitionSpec {
        match self {
            Multipartite::K(spec) | Multipartite::L(spec) => spec,
        }
    }

    /// Parses `k:R:N1,N2,...` or `l:R:S:N1,N2,...`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::param(format!("bad family descriptor `{text}`"));
        let fields: Vec<&str> = text.split(':').collect();
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        let parts = |s: &str| s.split(',').map(num).collect::<Result<Vec<_>>>();
        match fields.as_slice() {
            [kind, r, p] if kind.eq_ignore_ascii_case("k") => Ok(Multipartite::K(
                PartitionSpec::k_family(num(r)?, &parts(p)?),
            )),
            [kind, r, s, p] if kind.eq_ignore_ascii_case("l") => Ok(Multipartite::L(
                PartitionSpec::l_family(num(r)?, num(s)?, &parts(p)?),
            )),
            _ => Err(bad()),
        }
    }
}

/// Row-major coordinates of a product's vertex grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductLayout {
    dims: Vec<usize>,
}

impl ProductLayout {
    pub fn new(dims: Vec<usize>) -> Self {
        Self { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, coords: &[Vertex]) -> Vertex {
        coords
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&c, &d)| acc * d + c)
    }

    pub fn decode(&self, mut v: Vertex) -> Vec<Vertex> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = v % d;
            v /= d;
        }
        out
    }
}

/// Splices a parenthesised tuple label into its components, so products of
/// products flatten to one tuple.
fn label_components(label: &str) -> Vec<&str> {
    match label.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some("") => Vec::new(),
        Some(inner) => inner.split(',').collect(),
        None => vec![label],
    }
}

fn product_of(factors: &[Hypergraph]) -> Result<Hypergraph> {
    let layout = ProductLayout::new(factors.iter().map(Hypergraph::vertex_count).collect());
    let labels: Vec<String> = (0..layout.len())
        .map(|v| {
            let parts: Vec<&str> = layout
                .decode(v)
                .iter()
                .zip(factors)
                .flat_map(|(&c, f)| label_components(f.label(c)))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut edges = Vec::new();
    for (i, factor) in factors.iter().enumerate() {
        for base in 0..layout.len() {
            let mut coords = layout.decode(base);
            if coords[i] != 0 {
                continue;
            }
            for f in factor.edges() {
                edges.push(
                    f.iter()
                        .map(|&a| {
                            coords[i] = a;
                            layout.encode(&coords)
                        })
                        .collect(),
                );
            }
        }
    }
    Hypergraph::new(labels, edges)
}

/// Cartesian product of two or more hypergraphs.
///
/// Vertices are the row-major grid of factor vertices, labelled `(a,b,...)`;
/// a factor label that is itself a tuple is spliced in, so iterated binary
/// products and the n-ary product produce identical hypergraphs. For each
/// factor `i` and factor edge `f`, every line of the grid in direction `i`
/// carries a copy of `f`.
pub fn cartesian_product(factors: &[Hypergraph]) -> Result<Hypergraph> {
    if factors.len() < 2 {
        return Err(Error::param("a product needs at least two factors"));
    }
    product_of(factors)
}

/// Parameters of a prism hypergraph.
#[derive(Debug, Clone)]
pub struct PrismSpec {
    pub base: Hypergraph,
    /// Number of copies.
    pub n: usize,
    /// Transitional edge size.
    pub r: usize,
}

impl PrismSpec {
    pub fn new(base: Hypergraph, n: usize, r: usize) -> Self {
        Self { base, n, r }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::param("prism needs at least two copies"));
        }
        if self.r < 2 {
            return Err(Error::param("transitional edges need size at least 2"));
        }
        let (rank, _) = self.base.rank_antirank()?;
        if 2 * rank < self.r {
            return Err(Error::param(format!(
                "base rank {rank} is below r/2 = {}/2",
                self.r
            )));
        }
        Ok(())
    }

    /// Index of the clone of base vertex `v` in copy `copy` (from 1).
    pub fn clone_of(&self, v: Vertex, copy: usize) -> Vertex {
        (copy - 1) * self.base.vertex_count() + v
    }

    /// (base vertex, copy from 1) of a prism vertex.
    pub fn origin(&self, v: Vertex) -> (Vertex, usize) {
        let nb = self.base.vertex_count();
        (v % nb, v / nb + 1)
    }
}

/// Prism hypergraph: `n` labelled copies of the base (`v@i`), with every
/// i-transitional edge of size `r` pivoted at each clone pair `v@i, v@(i+1)`.
pub fn prism(spec: &PrismSpec) -> Result<Hypergraph> {
    spec.validate()?;
    let base = &spec.base;
    let nb = base.vertex_count();
    let mut labels = Vec::with_capacity(nb * spec.n);
    for copy in 1..=spec.n {
        labels.extend(base.labels().iter().map(|l| format!("{l}@{copy}")));
    }
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for copy in 1..=spec.n {
        edges.extend(
            base.edges()
                .iter()
                .map(|e| e.iter().map(|&v| spec.clone_of(v, copy)).collect()),
        );
    }
    for i in 1..spec.n {
        let before = edges.len();
        for v in base.vertices() {
            let pivots = [spec.clone_of(v, i), spec.clone_of(v, i + 1)];
            for e in base
                .edges()
                .iter()
                .filter(|e| e.contains(&v) && 2 * e.len() >= spec.r)
            {
                let pool: Vec<Vertex> = e
                    .iter()
                    .flat_map(|&u| [spec.clone_of(u, i), spec.clone_of(u, i + 1)])
                    .filter(|u| !pivots.contains(u))
                    .collect();
                for fill in pool.into_iter().combinations(spec.r - 2) {
                    let mut edge = pivots.to_vec();
                    edge.extend(fill);
                    edges.push(edge);
                }
            }
        }
        if edges.len() == before {
            return Err(Error::param(format!("no {i}-transitional edge exists")));
        }
    }
    Hypergraph::new(labels, edges)
}
