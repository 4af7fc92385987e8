use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{delete_vertex, link_classes, symmetrize, Hypergraph};

/// Iteration cap of [`symmetrize_clean`].
pub const MAX_STEPS: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizationOutcome {
    pub graph: Hypergraph,
    /// `vertices[k - 1]` is the original id of vertex `k`.
    pub vertices: Vec<u32>,
    /// `(u, v)` pairs symmetrized, in original ids.
    pub steps: Vec<(u32, u32)>,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn adjacency(g: &Hypergraph) -> Vec<bool> {
    let n = g.n();
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        for &a in e.vertices() {
            for &b in e.vertices() {
                adj[(a as usize - 1) * n + b as usize - 1] = true;
            }
        }
    }
    adj
}

fn is_alpha_dense(g: &Hypergraph, alpha: f64) -> bool {
    let n = g.n();
    if n < g.r() {
        return false;
    }
    let need = alpha * binomial(n - 1, g.r() - 1);
    g.degrees().into_iter().all(|d| d as f64 >= need)
}

/// Symmetrization with cleaning. Each round picks the lexicographically
/// smallest nonadjacent pair `(u, v)` with different links and
/// `d(u) >= d(v)`, gives every vertex of `v`'s equal-link class the link of
/// `u`, then deletes minimum-degree vertices (smallest id first) until the
/// graph is `alpha`-dense or empty. If the vertex to delete shares `u`'s
/// class, `v` (or the smallest survivor of its class) is deleted instead.
pub fn symmetrize_clean(g: &Hypergraph, alpha: f64) -> Result<SymmetrizationOutcome> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    let mut h = g.clone();
    let mut ids: Vec<u32> = g.vertices().collect();
    let mut steps = Vec::new();
    for _ in 0..MAX_STEPS {
        let classes = link_classes(&h);
        let adj = adjacency(&h);
        let deg = h.degrees();
        let n = h.n();
        let class_of = |v: u32| classes.class_of(v).expect("vertex in partition");
        let pick = (1..=n as u32).find_map(|u| {
            (1..=n as u32)
                .find(|&v| {
                    v != u
                        && !adj[(u as usize - 1) * n + v as usize - 1]
                        && class_of(u) != class_of(v)
                        && deg[u as usize - 1] >= deg[v as usize - 1]
                })
                .map(|v| (u, v))
        });
        let Some((u, v)) = pick else {
            return Ok(SymmetrizationOutcome {
                graph: h,
                vertices: ids,
                steps,
            });
        };
        steps.push((ids[u as usize - 1], ids[v as usize - 1]));
        let u_class: Vec<u32> = classes.classes()[class_of(u)]
            .iter()
            .map(|&w| ids[w as usize - 1])
            .collect();
        let v_class: Vec<u32> = classes.classes()[class_of(v)]
            .iter()
            .map(|&w| ids[w as usize - 1])
            .collect();
        for &w in &classes.classes()[class_of(v)] {
            h = symmetrize(&h, w, u)?;
        }
        while h.n() > 0 && !is_alpha_dense(&h, alpha) {
            let deg = h.degrees();
            let min = *deg.iter().min().expect("nonempty");
            let z = deg.iter().position(|&d| d == min).expect("present");
            let mut victim = z;
            if u_class.contains(&ids[z]) {
                if let Some(p) = v_class
                    .iter()
                    .filter_map(|o| ids.iter().position(|x| x == o))
                    .min()
                {
                    victim = p;
                }
            }
            h = delete_vertex(&h, victim as u32 + 1)?;
            ids.remove(victim);
        }
    }
    Err(Error::NoProgress(MAX_STEPS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::complete;

    #[test]
    fn complete_is_fixed() {
        let k5 = complete(5, 3).unwrap();
        let out = symmetrize_clean(&k5, 0.5).unwrap();
        assert_eq!(out.graph, k5);
        assert!(out.steps.is_empty());
    }

    #[test]
    fn two_disjoint_edges() {
        let g = Hypergraph::new(3, 6, [[1, 2, 3], [4, 5, 6]]).unwrap();
        let out = symmetrize_clean(&g, 0.01).unwrap();
        assert_eq!(out.steps, vec![(1, 4)]);
        assert_eq!(
            out.graph,
            Hypergraph::new(3, 4, [[1, 2, 3], [2, 3, 4]]).unwrap()
        );
        assert_eq!(out.vertices, vec![1, 2, 3, 4]);
    }

    #[test]
    fn empty_and_bad_alpha() {
        let out = symmetrize_clean(&Hypergraph::empty(3, 4), 0.5).unwrap();
        assert!(out.graph.has_no_edges());
        assert!(symmetrize_clean(&Hypergraph::empty(3, 4), 0.0).is_err());
        assert!(symmetrize_clean(&Hypergraph::empty(3, 4), 1.5).is_err());
    }
}
