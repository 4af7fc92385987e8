use serde::Serialize;

use super::{maximize, MaximizeOptions, OptimumResult};
use crate::hypergraph::{delete_vertex, induced, Hypergraph};

/// Strictness margin for vertex deletions.
pub const STRICTNESS_TOL: f64 = 1e-9;

/// True iff deleting any single vertex strictly lowers the Lagrangian. A graph
/// without edges is never dense.
pub fn is_dense(g: &Hypergraph) -> bool {
    is_dense_with(g, &MaximizeOptions::default())
}

pub fn is_dense_with(g: &Hypergraph, options: &MaximizeOptions) -> bool {
    if g.has_no_edges() {
        return false;
    }
    let lambda = maximize(g, options).value;
    g.vertices().all(|v| {
        let h = delete_vertex(g, v).expect("vertex in range");
        maximize(&h, options).value < lambda - STRICTNESS_TOL
    })
}

/// A dense induced subgraph with the same Lagrangian.
#[derive(Clone, Debug, Serialize)]
pub struct Densified {
    pub graph: Hypergraph,
    /// `vertices[k - 1]` is the original id of vertex `k`.
    pub vertices: Vec<u32>,
    pub optimum: OptimumResult,
}

pub fn densify(g: &Hypergraph) -> Densified {
    densify_with(g, &MaximizeOptions::default())
}

/// Alternates maximizing, shrinking the support until it covers pairs,
/// restricting to the support, and deleting vertices whose removal keeps the
/// Lagrangian.
pub fn densify_with(g: &Hypergraph, options: &MaximizeOptions) -> Densified {
    let mut cur = g.clone();
    let mut ids: Vec<u32> = g.vertices().collect();
    loop {
        let opt = maximize(&cur, options);
        if cur.has_no_edges() {
            return Densified {
                graph: Hypergraph::empty(cur.r(), 0),
                vertices: vec![],
                optimum: maximize(&Hypergraph::empty(cur.r(), 0), options),
            };
        }
        let support = covering_support(&cur, &opt);
        if support.len() < cur.n() {
            cur = induced(&cur, &support).expect("support in range");
            ids = support.iter().map(|&v| ids[v as usize - 1]).collect();
            continue;
        }
        let slack = cur.vertices().find(|&v| {
            let h = delete_vertex(&cur, v).expect("vertex in range");
            maximize(&h, options).value >= opt.value - STRICTNESS_TOL
        });
        match slack {
            Some(v) => {
                cur = delete_vertex(&cur, v).expect("vertex in range");
                ids.remove(v as usize - 1);
            }
            None => {
                return Densified {
                    graph: cur,
                    vertices: ids,
                    optimum: opt,
                }
            }
        }
    }
}

/// Support of the optimum after merging weight across uncovered pairs, along
/// which the Lagrangian is linear.
fn covering_support(g: &Hypergraph, opt: &OptimumResult) -> Vec<u32> {
    let mut x = opt.weights.to_f64();
    let n = g.n();
    let mut covered = vec![false; n * n];
    for e in g.edges() {
        for &a in e.vertices() {
            for &b in e.vertices() {
                covered[(a as usize - 1) * n + b as usize - 1] = true;
            }
        }
    }
    let p = super::poly::Polynomial::from_hypergraph(g);
    let mut grad = vec![0.0; n];
    'again: loop {
        p.grad(&x, &mut grad);
        for a in 0..n {
            for b in a + 1..n {
                if x[a] > 0.0 && x[b] > 0.0 && !covered[a * n + b] {
                    let (keep, drop) = if grad[a] >= grad[b] { (a, b) } else { (b, a) };
                    x[keep] += x[drop];
                    x[drop] = 0.0;
                    continue 'again;
                }
            }
        }
        break;
    }
    (0..n)
        .filter(|&i| x[i] > 0.0)
        .map(|i| i as u32 + 1)
        .collect()
}

impl From<Densified> for (Hypergraph, OptimumResult) {
    fn from(d: Densified) -> Self {
        (d.graph, d.optimum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, named, NamedGraph};

    #[test]
    fn dense_examples() {
        assert!(is_dense(&complete(5, 3).unwrap()));
        let k4 = complete(4, 3).unwrap().with_order(5).unwrap();
        assert!(!is_dense(&k4));
        assert!(!is_dense(&Hypergraph::empty(3, 4)));
    }

    #[test]
    fn densify_matching() {
        let d = densify(&named(NamedGraph::Matching { t: 2, r: 3 }));
        assert_eq!(d.graph, complete(3, 3).unwrap());
        assert!((d.optimum.value - 1.0 / 27.0).abs() < 1e-12);
        assert_eq!(d.vertices.len(), 3);
    }

    #[test]
    fn densify_drops_isolated() {
        let g = complete(6, 3).unwrap().with_order(7).unwrap();
        let d = densify(&g);
        assert_eq!(d.graph, complete(6, 3).unwrap());
        assert_eq!(d.vertices, vec![1, 2, 3, 4, 5, 6]);
    }
}
