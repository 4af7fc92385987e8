use super::{contains, EmbeddingMap};
use crate::error::{Error, Result};
use crate::hypergraph::{induced, Hypergraph};

/// A `p`-set `C` whose pairs are all covered by edges of `g` and whose induced
/// subgraph contains `f`, with the embedding into `g[C]` (relabeled `1..=p`).
pub fn find_core(
    g: &Hypergraph,
    f: &Hypergraph,
    p: usize,
) -> Result<Option<(Vec<u32>, EmbeddingMap)>> {
    super::check_uniformity(g, f)?;
    if p < f.n() {
        return Err(Error::InvalidArgument(format!(
            "core size {p} is smaller than the pattern's {} vertices",
            f.n()
        )));
    }
    if p > g.n() {
        return Ok(None);
    }
    let masks = g.edge_masks()?;
    let mut adj = vec![0u64; g.n()];
    for &m in &masks {
        let mut b = m;
        while b != 0 {
            let v = b.trailing_zeros() as usize;
            b &= b - 1;
            adj[v] |= m & !(1 << v);
        }
    }
    let mut found = None;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    cliques_of_size(&adj, 0, all, p, &mut |c| {
        let set: Vec<u32> = (0..64)
            .filter(|&v| c >> v & 1 == 1)
            .map(|v| v + 1)
            .collect();
        let h = induced(g, &set).expect("vertices in range");
        match contains(&h, f).expect("same uniformity") {
            Some(w) => {
                found = Some((set, w));
                true
            }
            None => false,
        }
    });
    Ok(found)
}

/// Calls `visit` on `p`-cliques in increasing order until it returns true.
fn cliques_of_size(
    adj: &[u64],
    current: u64,
    cand: u64,
    p: usize,
    visit: &mut dyn FnMut(u64) -> bool,
) -> bool {
    let size = current.count_ones() as usize;
    if size == p {
        return visit(current);
    }
    if size + (cand.count_ones() as usize) < p {
        return false;
    }
    let mut c = cand;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if cliques_of_size(adj, current | 1 << v, c & adj[v], p, visit) {
            return true;
        }
    }
    false
}

/// True iff `g` has a `p`-vertex core containing `f` in which every pair is
/// covered (by any edge of `g`).
pub fn contains_core(g: &Hypergraph, f: &Hypergraph, p: usize) -> Result<bool> {
    Ok(find_core(g, f, p)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, linear_path, turan_blowup};

    #[test]
    fn examples() {
        let p3 = linear_path(3).unwrap();
        assert!(contains_core(&complete(7, 3).unwrap(), &p3, 7).unwrap());
        assert!(!contains_core(&turan_blowup(6, 3, 12).unwrap(), &p3, 7).unwrap());
        assert!(!contains_core(&complete(7, 3).unwrap(), &p3, 8).unwrap());
        assert!(contains_core(&complete(7, 3).unwrap(), &p3, 6).is_err());
    }

    #[test]
    fn covering_edge_may_leave_the_core() {
        // P_1 inside {1,2,3}; pair 14 etc. covered only through vertex 5.
        let g = Hypergraph::new(3, 5, [[1, 2, 3], [1, 4, 5], [2, 4, 5], [3, 4, 5]]).unwrap();
        let (core, _) = find_core(&g, &linear_path(1).unwrap(), 4).unwrap().unwrap();
        assert_eq!(core, vec![1, 2, 3, 4]);
    }
}
