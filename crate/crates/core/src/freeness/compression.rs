use serde::Serialize;

use super::contains_linear_path;
use crate::error::{Error, Result};
use crate::hypergraph::{complete, compress, is_left_compressed, link_diff, Hypergraph};
use crate::lagrangian::{densify_with, maximize, MaximizeOptions};

/// Iteration cap of [`left_compress_loop`].
pub const MAX_ROUNDS: usize = 10_000;

#[derive(Clone, Debug, Serialize)]
pub struct CompressionOutcome {
    pub graph: Hypergraph,
    pub lambda_before: f64,
    pub lambda_after: f64,
    /// Compressions applied, as `(i, j)` for `j` moved to `i`, in the labels
    /// current at that step.
    pub compressions: Vec<(u32, u32)>,
}

/// Default floor for `t = 4`: `lambda(K_8^3) - 0.005`.
pub fn default_floor(t: usize) -> Option<f64> {
    (t == 4).then(|| {
        let k8 = complete(8, 3).expect("valid");
        maximize(&k8, &MaximizeOptions::default()).value - 0.005
    })
}

fn path_name(t: usize) -> String {
    format!("P{t}")
}

/// Repeats: densify, relabel vertices by nonincreasing optimum weight (ties by
/// current id), stop if left-compressed, else apply the first compression
/// `pi_ij`, `i < j`, with `L(j \ i)` nonempty.
pub fn left_compress_loop(
    g: &Hypergraph,
    t: usize,
    lambda_floor: Option<f64>,
    options: &MaximizeOptions,
) -> Result<CompressionOutcome> {
    if g.r() != 3 {
        return Err(Error::UniformityMismatch {
            expected: 3,
            found: g.r(),
        });
    }
    if !(t == 3 || t == 4) {
        return Err(Error::InvalidArgument(format!(
            "path length must be 3 or 4, got {t}"
        )));
    }
    if let Some(w) = contains_linear_path(g, t)? {
        return Err(Error::NotFree {
            pattern: path_name(t),
            witness: w.assignment,
        });
    }
    let lambda_before = maximize(g, options).value;
    if let Some(floor) = lambda_floor.or_else(|| default_floor(t)) {
        if lambda_before < floor {
            return Err(Error::BelowFloor {
                lambda: lambda_before,
                floor,
            });
        }
    }
    let mut cur = g.clone();
    let mut compressions = Vec::new();
    for _ in 0..MAX_ROUNDS {
        let d = densify_with(&cur, options);
        let x = d.optimum.weights.to_f64();
        let mut order: Vec<u32> = d.graph.vertices().collect();
        order.sort_by(|&a, &b| {
            x[b as usize - 1]
                .total_cmp(&x[a as usize - 1])
                .then(a.cmp(&b))
        });
        let mut map = vec![0u32; d.graph.n()];
        for (rank, &v) in order.iter().enumerate() {
            map[v as usize - 1] = rank as u32 + 1;
        }
        let h = d.graph.relabel(&map, d.graph.n())?;
        if is_left_compressed(&h) {
            let lambda_after = maximize(&h, options).value;
            return Ok(CompressionOutcome {
                graph: h,
                lambda_before,
                lambda_after,
                compressions,
            });
        }
        let (i, j) = first_compressible(&h);
        let next = compress(&h, i, j)?;
        if let Some(w) = contains_linear_path(&next, t)? {
            return Err(Error::CompressionBrokeFreeness {
                target: i,
                moved: j,
                pattern: path_name(t),
                witness: w.assignment,
            });
        }
        compressions.push((i, j));
        cur = next;
    }
    Err(Error::NoProgress(MAX_ROUNDS))
}

fn first_compressible(g: &Hypergraph) -> (u32, u32) {
    for i in g.vertices() {
        for j in i + 1..=g.n() as u32 {
            if !link_diff(g, j, i).expect("valid pair").is_empty() {
                return (i, j);
            }
        }
    }
    unreachable!("graph is not left-compressed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::linear_path;
    use crate::lagrangian::is_dense;

    #[test]
    fn k6_with_isolated_vertex() {
        let g = complete(6, 3).unwrap().with_order(7).unwrap();
        let out = left_compress_loop(&g, 3, None, &MaximizeOptions::default()).unwrap();
        assert_eq!(out.graph, complete(6, 3).unwrap());
        assert!(out.compressions.is_empty());
    }

    #[test]
    fn fixed_point() {
        let g = complete(5, 3).unwrap();
        let out = left_compress_loop(&g, 3, None, &MaximizeOptions::default()).unwrap();
        assert_eq!(out.graph, g);
    }

    #[test]
    fn compresses_a_relabeled_graph() {
        // K_5^3 minus one edge, scrambled and padded.
        let g = Hypergraph::new(
            3,
            6,
            [
                [2, 4, 6],
                [2, 4, 5],
                [2, 5, 6],
                [4, 5, 6],
                [2, 3, 4],
                [3, 4, 6],
                [3, 5, 6],
                [2, 3, 6],
                [3, 4, 5],
            ],
        )
        .unwrap();
        let out = left_compress_loop(&g, 3, None, &MaximizeOptions::default()).unwrap();
        assert!(is_left_compressed(&out.graph));
        assert!(is_dense(&out.graph));
        assert!(contains_linear_path(&out.graph, 3).unwrap().is_none());
        assert!(out.lambda_after >= out.lambda_before - 1e-8);
    }

    #[test]
    fn preconditions() {
        let p3 = linear_path(3).unwrap();
        assert!(matches!(
            left_compress_loop(&p3, 3, None, &MaximizeOptions::default()),
            Err(Error::NotFree { .. })
        ));
        let k5 = complete(5, 3).unwrap();
        assert!(matches!(
            left_compress_loop(&k5, 4, None, &MaximizeOptions::default()),
            Err(Error::BelowFloor { .. })
        ));
        assert!(left_compress_loop(&k5, 5, None, &MaximizeOptions::default()).is_err());
    }
}
