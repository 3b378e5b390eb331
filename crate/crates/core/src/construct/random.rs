use std::collections::BTreeMap;

use itertools::Itertools;
use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hypertree::{tree_from_prufer, HostTree};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Random connected hypergraph on `1..=n`.
///
/// Draws `edge_count` edges with sizes uniform in `2..=max_rank` (capped at
/// `n`), then joins any remaining components with 2-edges between random
/// members of consecutive components.
pub fn random_connected_hypergraph(
    n: usize,
    max_rank: usize,
    edge_count: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::param("need at least one vertex"));
    }
    if max_rank < 2 {
        return Err(Error::param("max_rank must be at least 2"));
    }
    if n == 1 {
        return Hypergraph::with_numbered_vertices(1, Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for _ in 0..edge_count {
        let size = rng.gen_range(2..=max_rank.min(n));
        edges.push((0..n).choose_multiple(&mut rng, size));
    }
    let h = Hypergraph::with_numbered_vertices(n, edges.clone())?;
    for pair in h.components().windows(2) {
        let a = *pair[0].choose(&mut rng).expect("non-empty component");
        let b = *pair[1].choose(&mut rng).expect("non-empty component");
        edges.push(vec![a, b]);
    }
    Hypergraph::with_numbered_vertices(n, edges)
}

/// Random connected graph on `1..=n`, uniform over labelled connected graphs
/// (each pair present with probability 1/2, disconnected draws rejected).
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::param("need at least one vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
    loop {
        let edges = pairs
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .map(|&(a, b)| vec![a, b])
            .collect();
        let h = Hypergraph::with_numbered_vertices(n, edges)?;
        if h.is_connected() {
            return Ok(h);
        }
    }
}

/// Every connected labelled graph on `1..=n`.
pub fn connected_graphs(n: usize) -> Result<Vec<Hypergraph>> {
    if n == 0 {
        return Err(Error::param("need at least one vertex"));
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
    if pairs.len() >= 32 {
        return Err(Error::param(format!(
            "too many graphs on {n} vertices to enumerate"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(a, b))| vec![a, b])
            .collect();
        let h = Hypergraph::with_numbered_vertices(n, edges)?;
        if h.is_connected() {
            out.push(h);
        }
    }
    Ok(out)
}

fn rooted_form(tree: &HostTree, root: Vertex, parent: Option<Vertex>) -> String {
    let mut children: Vec<String> = tree
        .neighbors(root)
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_form(tree, c, Some(root)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Isomorphism-invariant string for a tree: the least rooted encoding over
/// its centre vertices.
pub fn tree_canonical_form(tree: &HostTree) -> String {
    let n = tree.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut remaining = n;
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for u in tree.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_form(tree, c, None))
        .min()
        .expect("a centre exists")
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// found by decoding all Prüfer sequences.
pub fn nonisomorphic_trees(n: usize) -> Result<Vec<HostTree>> {
    if n == 0 {
        return Err(Error::param("a tree needs at least one vertex"));
    }
    if n > 9 {
        return Err(Error::param("tree enumeration is limited to 9 vertices"));
    }
    if n <= 2 {
        let edges: Vec<(Vertex, Vertex)> = if n == 2 { vec![(0, 1)] } else { Vec::new() };
        return Ok(vec![HostTree::from_edges(n, &edges)?]);
    }
    let mut classes: BTreeMap<String, HostTree> = BTreeMap::new();
    for seq in (0..n - 2).map(|_| 0..n).multi_cartesian_product() {
        let tree = HostTree::from_edges(n, &tree_from_prufer(n, &seq))?;
        classes.entry(tree_canonical_form(&tree)).or_insert(tree);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // Labelled connected graphs on n vertices: 1, 1, 4, 38, 728.
        let counts: Vec<usize> = (1..=5)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn tree_class_counts() {
        // Unlabelled trees on n vertices: 1, 1, 1, 2, 3, 6, 11.
        let counts: Vec<usize> = (1..=7)
            .map(|n| nonisomorphic_trees(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = HostTree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = HostTree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = HostTree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&star));
    }

    #[test]
    fn random_hypergraphs_are_connected_and_seeded() {
        for seed in 0..100 {
            let n = 1 + seed as usize % 8;
            let h = random_connected_hypergraph(n, 4, 3, seed).unwrap();
            assert!(h.is_connected());
            assert!(h.edges().iter().all(|e| e.len() <= 4));
            assert_eq!(random_connected_hypergraph(n, 4, 3, seed).unwrap(), h);
        }
        for seed in 0..20 {
            let g = random_connected_graph(7, seed).unwrap();
            assert!(g.is_connected() && g.is_graph());
        }
    }
}
