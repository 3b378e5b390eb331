use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, Vertex};

/// A tree on a hypertree's vertex set whose subtrees are the hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostTree {
    tree: Graph,
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
}

impl HostTree {
    pub fn new(tree: Graph) -> Result<Self> {
        let n = tree.vertex_count();
        if tree.edge_count() + 1 != n {
            return Err(Error::InvalidHostTree(format!(
                "{} edges on {n} vertices",
                tree.edge_count()
            )));
        }
        if !tree.is_connected() {
            return Err(Error::InvalidHostTree("not connected".into()));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for y in tree.open(x) {
                if !std::mem::replace(&mut seen[y], true) {
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(Self {
            tree,
            parent,
            depth,
        })
    }

    /// Tree on labels `1..=n` from an edge list of indices.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let h = Hypergraph::with_numbered_vertices(
            n,
            edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )?;
        Self::new(Graph::new(h)?)
    }

    /// Same tree with the given vertex labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(Graph::new(self.tree.relabel(labels)?)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }

    pub fn neighbors(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.tree.open(x)
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.tree.open(x).count()
    }

    /// Vertices of the unique path from `u` to `v`, both ends included.
    pub fn path(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (mut a, mut b) = (u, v);
        let mut front = Vec::new();
        let mut back = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                front.push(a);
                a = self.parent[a].expect("non-root");
            } else {
                back.push(b);
                b = self.parent[b].expect("non-root");
            }
        }
        front.push(a);
        front.extend(back.into_iter().rev());
        front
    }

    /// Whether `set` induces a connected subgraph of the tree.
    pub fn induces_subtree(&self, set: &[Vertex]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let inside: BTreeSet<Vertex> = set.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in self.tree.open(x) {
                if inside.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == inside.len()
    }

    /// Checks that every edge of `h` induces a subtree and that `h` is connected
    /// on the same labelled vertex set.
    pub fn certifies(&self, h: &Hypergraph) -> Result<()> {
        if h.labels() != self.tree.labels() {
            return Err(Error::InvalidHostTree(
                "vertex labels differ from the hypergraph's".into(),
            ));
        }
        for e in h.edges() {
            if !self.induces_subtree(e) {
                let names: Vec<&str> = e.iter().map(|&v| h.label(v)).collect();
                return Err(Error::NotSubtree(names.join(",")));
            }
        }
        h.require_connected()
    }
}

/// Builds the hypertree on the host's vertex set with the given edges.
pub fn hypertree_from_host(host: &HostTree, edges: Vec<Vec<Vertex>>) -> Result<Hypergraph> {
    let h = Hypergraph::new(host.graph().labels().to_vec(), edges)?;
    host.certifies(&h)?;
    Ok(h)
}

/// Edges of the labelled tree encoded by a Prüfer sequence over `0..n`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Vec<(Vertex, Vertex)> {
    assert!(n >= 2 && seq.len() == n - 2 && seq.iter().all(|&x| x < n));
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Uniform random labelled tree on `1..=n`.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<HostTree> {
    if n == 0 {
        return Err(Error::param("a tree needs at least one vertex"));
    }
    let edges = if n == 1 {
        Vec::new()
    } else {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        tree_from_prufer(n, &seq)
    };
    HostTree::from_edges(n, &edges)
}

/// Random hypertree on `1..=n` with its host tree.
///
/// Draws `edge_count` subtrees of size `2..=max_edge` by growing from a random
/// vertex through random frontier vertices, then adds every host edge that no
/// drawn edge covers as a 2-edge, which makes the result connected.
pub fn random_hypertree(
    n: usize,
    max_edge: usize,
    edge_count: usize,
    seed: u64,
) -> Result<(Hypergraph, HostTree)> {
    if max_edge < 2 {
        return Err(Error::param("max_edge must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let host = random_tree(n, &mut rng)?;
    if n == 1 {
        let h = hypertree_from_host(&host, Vec::new())?;
        return Ok((h, host));
    }
    let mut edges: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    for _ in 0..edge_count {
        let size = rng.gen_range(2..=max_edge.min(n));
        let mut grown = BTreeSet::from([rng.gen_range(0..n)]);
        while grown.len() < size {
            let frontier: Vec<Vertex> = grown
                .iter()
                .flat_map(|&x| host.neighbors(x))
                .filter(|y| !grown.contains(y))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            grown.insert(*frontier.choose(&mut rng).expect("tree is connected"));
        }
        edges.insert(grown.into_iter().collect());
    }
    for e in host.graph().edges() {
        if !edges.iter().any(|f| e.iter().all(|v| f.contains(v))) {
            edges.insert(e.clone());
        }
    }
    let h = hypertree_from_host(&host, edges.into_iter().collect())?;
    Ok((h, host))
}
