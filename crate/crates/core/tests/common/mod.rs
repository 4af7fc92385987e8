#![allow(dead_code)]

use hyperlag::Hypergraph;
use itertools::Itertools;
use proptest::prelude::*;

/// Random `r`-graphs on `lo..=hi` vertices, each edge present independently.
pub fn graph(r: usize, lo: usize, hi: usize) -> impl Strategy<Value = Hypergraph> {
    (lo..=hi).prop_flat_map(move |n| {
        let all: Vec<Vec<u32>> = (1..=n as u32).combinations(r).collect();
        proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |mask| {
            let edges = all
                .iter()
                .zip(&mask)
                .filter(|(_, &m)| m)
                .map(|(e, _)| e.clone());
            Hypergraph::new(r, n, edges).unwrap()
        })
    })
}

/// A point of the open simplex of dimension `n`.
pub fn simplex(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.001f64..1.0, n).prop_map(|v| {
        let s: f64 = v.iter().sum();
        v.into_iter().map(|x| x / s).collect()
    })
}

/// A graph together with a simplex point of matching dimension.
pub fn graph_and_point(
    r: usize,
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = (Hypergraph, Vec<f64>)> {
    graph(r, lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), simplex(n))
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle()
}
