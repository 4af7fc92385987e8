mod common;

use hyperlag::freeness::{
    contains, contains_linear_path, is_free, left_compress_loop, symmetrize_clean, EmbeddingMap,
};
use hyperlag::hypergraph::{
    complete, compress, covers_pairs, is_left_compressed, linear_path, link_classes, matching,
    named, NamedGraph,
};
use hyperlag::lagrangian::{is_dense, maximize, MaximizeOptions};
use hyperlag::search::{random_covering_free, ForbiddenSet};
use hyperlag::Hypergraph;
use itertools::Itertools;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn patterns() -> Vec<Hypergraph> {
    vec![
        linear_path(2).unwrap(),
        named(NamedGraph::T2),
        named(NamedGraph::F5),
        complete(4, 3).unwrap(),
        matching(2, 3).unwrap(),
    ]
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32) -> Hypergraph {
    let p: f64 = rng.gen_range(0.05..0.6);
    let edges: Vec<Vec<u32>> = (1..=n)
        .combinations(3)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Hypergraph::new(3, n as usize, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn containment_ignores_labels(g in common::graph(3, 4, 7), k in 0usize..5, seed in any::<u64>()) {
        let f = &patterns()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<u32> = (1..=g.n() as u32).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm, g.n()).unwrap();
        let mut fperm: Vec<u32> = (1..=f.n() as u32).collect();
        fperm.reverse();
        let f2 = f.relabel(&fperm, f.n()).unwrap();
        let base = contains(&g, f).unwrap();
        prop_assert_eq!(base.is_some(), contains(&h, f).unwrap().is_some());
        prop_assert_eq!(base.is_some(), contains(&g, &f2).unwrap().is_some());
        if let Some(w) = base {
            prop_assert!(w.verify(&g, f));
        }
    }

    #[test]
    fn compression_loop_output(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p3 = ForbiddenSet::new(vec![linear_path(3).unwrap()]).unwrap();
        let n = rng.gen_range(6..=8);
        let g = if rng.gen_bool(0.5) {
            random_covering_free(n, &p3, &mut rng).unwrap()
        } else {
            let g = random_graph(&mut rng, n as u32);
            prop_assume!(p3.is_free(&g).unwrap());
            g
        };
        let opts = MaximizeOptions::default();
        let out = left_compress_loop(&g, 3, None, &opts).unwrap();
        prop_assert!(is_left_compressed(&out.graph));
        if g.has_no_edges() {
            prop_assert!(out.graph.has_no_edges());
        } else {
            prop_assert!(is_dense(&out.graph), "{} -> {}", g, out.graph);
        }
        prop_assert!(contains_linear_path(&out.graph, 3).unwrap().is_none());
        prop_assert!(out.lambda_after >= out.lambda_before - 1e-9);
    }

    #[test]
    fn symmetrize_clean_terminal_state(g in common::graph(3, 4, 8), alpha in 0.05f64..0.9) {
        let out = symmetrize_clean(&g, alpha).unwrap();
        let h = &out.graph;
        let need = alpha * ((h.n().saturating_sub(1)) * (h.n().saturating_sub(2)) / 2) as f64;
        let dense = h.n() >= 3 && h.degrees().into_iter().all(|d| d as f64 >= need);
        if !out.steps.is_empty() {
            prop_assert!(dense || h.has_no_edges());
        } else {
            prop_assert_eq!(h, &g);
        }
        let classes = link_classes(h);
        for (u, v) in (1..=h.n() as u32).tuple_combinations() {
            let adjacent = h.edges().iter().any(|e| e.contains(u) && e.contains(v));
            prop_assert!(adjacent || classes.class_of(u) == classes.class_of(v));
        }
        prop_assert_eq!(out.vertices.len(), h.n());
    }
}

#[test]
fn linear_path_search_agrees_with_general_embedder() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let paths: Vec<Hypergraph> = (1..=4).map(|t| linear_path(t).unwrap()).collect();
    let mut hits = [0usize; 4];
    for _ in 0..10_000 {
        let n = rng.gen_range(5..=9);
        let g = random_graph(&mut rng, n);
        let t = rng.gen_range(1..=4);
        let fast = contains_linear_path(&g, t).unwrap();
        let slow = contains(&g, &paths[t - 1]).unwrap();
        assert_eq!(fast.is_some(), slow.is_some(), "t={t} g={g}");
        if let Some(w) = fast {
            assert!(w.verify(&g, &paths[t - 1]));
            hits[t - 1] += 1;
        }
    }
    assert!(hits.iter().all(|&h| h > 0));
}

fn compressions_keep_free(g: &Hypergraph, f: &Hypergraph, clique: &Hypergraph) -> bool {
    let clique_free = is_free(g, clique).unwrap();
    (1..=g.n() as u32).permutations(2).all(|ij| {
        let c = compress(g, ij[0], ij[1]).unwrap();
        is_free(&c, f).unwrap() && (!clique_free || is_free(&c, clique).unwrap())
    })
}

#[test]
fn p3_freeness_survives_compression_in_covering_graphs() {
    let p3 = linear_path(3).unwrap();
    let k6 = complete(6, 3).unwrap();
    let set = ForbiddenSet::new(vec![p3.clone()]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for k in 0..400 {
        let g = random_covering_free(6 + k % 3, &set, &mut rng).unwrap();
        assert!(covers_pairs(&g));
        assert!(compressions_keep_free(&g, &p3, &k6), "{g}");
    }
}

#[test]
fn p4_freeness_survives_compression_above_the_floor() {
    let p4 = linear_path(4).unwrap();
    let k8 = complete(8, 3).unwrap();
    let set = ForbiddenSet::new(vec![p4.clone()]).unwrap();
    let opts = MaximizeOptions::fast();
    let floor = maximize(&k8, &MaximizeOptions::default()).value - 0.005;
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for k in 0..200 {
        let g = random_covering_free(9 + k % 2, &set, &mut rng).unwrap();
        if maximize(&g, &opts).value >= floor {
            assert!(compressions_keep_free(&g, &p4, &k8), "{g}");
        }
    }
}

#[test]
fn witnesses_are_embeddings() {
    let g = complete(7, 3).unwrap();
    let w: EmbeddingMap = contains(&g, &linear_path(3).unwrap()).unwrap().unwrap();
    assert!(w.verify(&g, &linear_path(3).unwrap()));
    assert!(!w.verify(
        &complete(6, 3).unwrap().with_order(7).unwrap(),
        &linear_path(3).unwrap()
    ));
}
