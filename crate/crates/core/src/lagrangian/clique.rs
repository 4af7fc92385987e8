use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Clique number of a 2-graph on at most 64 vertices (0 for the null graph).
pub fn clique_number(g: &Hypergraph) -> Result<usize> {
    if g.r() != 2 {
        return Err(Error::UniformityMismatch {
            expected: 2,
            found: g.r(),
        });
    }
    let n = g.n();
    if n > 64 {
        return Err(Error::TooManyVertices { n, max: 64 });
    }
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        let (a, b) = (e.vertices()[0] as usize - 1, e.vertices()[1] as usize - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    fn grow(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut c = cand;
        while c != 0 {
            if size + c.count_ones() as usize <= *best {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            grow(adj, size + 1, c & adj[v], best);
        }
    }
    let mut best = 0;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    grow(&adj, 0, all, &mut best);
    Ok(best)
}

/// `(lambda, omega)` with `lambda = (1 - 1/omega) / 2`.
pub fn motzkin_straus(g: &Hypergraph) -> Result<(f64, usize)> {
    let w = clique_number(g)?;
    let lambda = if w == 0 {
        0.0
    } else {
        0.5 * (1.0 - 1.0 / w as f64)
    };
    Ok((lambda, w))
}
