#![allow(dead_code)]

use std::collections::BTreeSet;

use hypercops::construct::random_connected_hypergraph;
use hypercops::Hypergraph;
use proptest::prelude::*;

/// Connected hypergraphs on up to `max_n` vertices with rank at most 4.
pub fn connected(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n, 2..=4usize, 1..=8usize, any::<u64>())
        .prop_map(|(n, r, e, seed)| random_connected_hypergraph(n, r, e, seed).unwrap())
}

/// Arbitrary hypergraphs, possibly disconnected, with edges of size 1 to 4.
pub fn any_hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=4.min(n)), 0..8).prop_map(
            move |edges| {
                Hypergraph::with_numbered_vertices(
                    n,
                    edges.into_iter().map(|e| e.into_iter().collect()).collect(),
                )
                .unwrap()
            },
        )
    })
}

/// Closed neighbourhoods computed straight from the edge list.
pub fn closed_sets(h: &Hypergraph) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = h.vertices().map(|v| BTreeSet::from([v])).collect();
    for e in h.edges() {
        for &a in e {
            out[a].extend(e.iter().copied());
        }
    }
    out
}
