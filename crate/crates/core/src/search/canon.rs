use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};

/// Largest order for which canonical forms are computed.
pub const MAX_CANON_N: usize = 7;

/// The lexicographically smallest sorted edge list over all relabelings of
/// `g`. Two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Hypergraph) -> Result<Hypergraph> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CANON_N,
        });
    }
    let edges: Vec<&[u32]> = g.edges().iter().map(|e| e.vertices()).collect();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut image = Vec::with_capacity(edges.len());
    for perm in (1..=n as u32).permutations(n) {
        image.clear();
        for e in &edges {
            let mut v: Vec<u32> = e.iter().map(|&x| perm[x as usize - 1]).collect();
            v.sort_unstable();
            image.push(v);
        }
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
    }
    let edges = best
        .unwrap_or_default()
        .into_iter()
        .map(Edge::from_sorted)
        .collect();
    Ok(Hypergraph::from_edges(g.r(), n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, named, NamedGraph};

    #[test]
    fn relabelings_agree() {
        let f5 = named(NamedGraph::F5);
        let other = Hypergraph::new(3, 5, [[2, 4, 5], [1, 4, 5], [1, 2, 3]]).unwrap();
        assert_eq!(
            canonical_form(&f5).unwrap(),
            canonical_form(&other).unwrap()
        );
        let c = canonical_form(&f5).unwrap();
        assert_eq!(c.edges()[0].vertices(), &[1, 2, 3]);
        assert_ne!(c, canonical_form(&complete(5, 3).unwrap()).unwrap());
    }

    #[test]
    fn single_edge_goes_first() {
        let g = Hypergraph::new(3, 6, [[4, 5, 6]]).unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(c, Hypergraph::new(3, 6, [[1, 2, 3]]).unwrap());
        assert!(canonical_form(&Hypergraph::empty(3, 8)).is_err());
    }
}
