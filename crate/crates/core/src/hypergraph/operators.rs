use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{Edge, Hypergraph};
use crate::error::{Error, Result};

/// A partition of `1..=n` into disjoint nonempty classes, each sorted,
/// classes ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    classes: Vec<Vec<u32>>,
}

impl VertexPartition {
    pub fn new(mut classes: Vec<Vec<u32>>) -> Result<Self> {
        for c in &mut classes {
            c.sort_unstable();
            if c.is_empty() {
                return Err(Error::InvalidArgument("empty class in partition".into()));
            }
        }
        classes.sort_unstable_by_key(|c| c[0]);
        let mut all: Vec<u32> = classes.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            return Err(Error::InvalidArgument(
                "classes must partition 1..=n exactly".into(),
            ));
        }
        Ok(VertexPartition { classes })
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: u32) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    }

    /// Smallest member of each class.
    pub fn representatives(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

/// True iff every pair of vertices lies in a common edge.
pub fn covers_pairs(g: &Hypergraph) -> bool {
    uncovered_pairs(g).is_empty()
}

/// Uncovered pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn uncovered_pairs(g: &Hypergraph) -> Vec<(u32, u32)> {
    let n = g.n();
    let mut covered = vec![false; n * n];
    for e in g.edges() {
        let v = e.vertices();
        for (x, &a) in v.iter().enumerate() {
            for &b in &v[x + 1..] {
                covered[(a as usize - 1) * n + b as usize - 1] = true;
            }
        }
    }
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if !covered[(a - 1) * n + b - 1] {
                out.push((a as u32, b as u32));
            }
        }
    }
    out
}

/// The link of `i`: the `(r-1)`-graph `{e \ {i} : i in e}` on `1..=n`.
pub fn link(g: &Hypergraph, i: u32) -> Result<Hypergraph> {
    g.check_vertex(i)?;
    if g.r() < 2 {
        return Err(Error::InvalidArgument("link needs r >= 2".into()));
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| e.contains(i))
        .map(|e| Edge::from_sorted(e.without(i)))
        .collect();
    Ok(Hypergraph::from_edges(g.r() - 1, g.n(), edges))
}

/// `L(j \ i)`: the sets `f` avoiding `i, j` with `f + j` an edge and `f + i` not.
pub fn link_diff(g: &Hypergraph, j: u32, i: u32) -> Result<Vec<Vec<u32>>> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Err(Error::InvalidArgument(
            "link difference needs i != j".into(),
        ));
    }
    Ok(g.edges()
        .iter()
        .filter(|e| e.contains(j) && !e.contains(i))
        .filter(|e| !g.contains_edge(e.replace(j, i).vertices()))
        .map(|e| e.without(j))
        .collect())
}

/// `pi_ij(G)`: every edge `f + j` with `f` in `L(j \ i)` becomes `f + i`.
pub fn compress(g: &Hypergraph, i: u32, j: u32) -> Result<Hypergraph> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Err(Error::InvalidArgument("compression needs i != j".into()));
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            if e.contains(j) && !e.contains(i) {
                let moved = e.replace(j, i);
                if !g.contains_edge(moved.vertices()) {
                    return moved;
                }
            }
            e.clone()
        })
        .collect();
    Ok(Hypergraph::from_edges(g.r(), g.n(), edges))
}

/// True iff `L(j \ i)` is empty for all `i < j`.
pub fn is_left_compressed(g: &Hypergraph) -> bool {
    for e in g.edges() {
        for &j in e.vertices() {
            for i in 1..j {
                if !e.contains(i) && !g.contains_edge(e.replace(j, i).vertices()) {
                    return false;
                }
            }
        }
    }
    true
}

/// `G[U]` relabeled to `1..=|U|` in increasing order of the original ids.
pub fn induced(g: &Hypergraph, u: &[u32]) -> Result<Hypergraph> {
    let mut keep: Vec<u32> = u.to_vec();
    keep.sort_unstable();
    for &v in &keep {
        g.check_vertex(v)?;
    }
    if keep.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(
            "repeated vertex in induced set".into(),
        ));
    }
    let mut map = vec![0u32; g.n() + 1];
    for (k, &v) in keep.iter().enumerate() {
        map[v as usize] = k as u32 + 1;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| e.vertices().iter().all(|&v| map[v as usize] != 0))
        .map(|e| Edge::from_sorted(e.vertices().iter().map(|&v| map[v as usize]).collect()))
        .collect();
    Ok(Hypergraph::from_edges(g.r(), keep.len(), edges))
}

/// `G - v`, relabeled.
pub fn delete_vertex(g: &Hypergraph, v: u32) -> Result<Hypergraph> {
    g.check_vertex(v)?;
    let keep: Vec<u32> = g.vertices().filter(|&w| w != v).collect();
    induced(g, &keep)
}

fn twins(g: &Hypergraph, u: u32, v: u32) -> bool {
    g.edges().iter().all(|e| {
        let (hu, hv) = (e.contains(u), e.contains(v));
        if hu == hv {
            return true;
        }
        let swapped = if hu { e.replace(u, v) } else { e.replace(v, u) };
        g.contains_edge(swapped.vertices())
    })
}

/// Classes of vertices interchangeable by a transposition, i.e. `u ~ v` iff
/// `L(u \ v)` and `L(v \ u)` are both empty. For `K_t^r` this is one class.
pub fn equivalence_classes(g: &Hypergraph) -> VertexPartition {
    let mut classes: Vec<Vec<u32>> = Vec::new();
    'next: for v in g.vertices() {
        for c in classes.iter_mut() {
            if twins(g, c[0], v) {
                c.push(v);
                continue 'next;
            }
        }
        classes.push(vec![v]);
    }
    VertexPartition { classes }
}

/// Classes of vertices with identical links `L(u) = L(v)`. Members of a class
/// are pairwise nonadjacent.
pub fn link_classes(g: &Hypergraph) -> VertexPartition {
    let mut links: Vec<Vec<Vec<u32>>> = vec![Vec::new(); g.n()];
    for e in g.edges() {
        for &v in e.vertices() {
            links[v as usize - 1].push(e.without(v));
        }
    }
    let mut index: FxHashMap<&Vec<Vec<u32>>, usize> = FxHashMap::default();
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for (k, l) in links.iter().enumerate() {
        let c = *index.entry(l).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(k as u32 + 1);
    }
    VertexPartition { classes }
}

/// Replaces the link of `u` by a copy of the link of `v`: edges through `u`
/// are deleted and `{u} + A` is added for every `A` in `L(v)` that avoids `u`.
pub fn symmetrize(g: &Hypergraph, u: u32, v: u32) -> Result<Hypergraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("symmetrization needs u != v".into()));
    }
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !e.contains(u))
        .cloned()
        .collect();
    for e in g.edges() {
        if e.contains(v) && !e.contains(u) {
            edges.push(e.replace(v, u));
        }
    }
    Ok(Hypergraph::from_edges(g.r(), g.n(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, complete_minus, linear_path, named, NamedGraph};

    fn g3(n: usize, edges: &[[u32; 3]]) -> Hypergraph {
        Hypergraph::new(3, n, edges).unwrap()
    }

    #[test]
    fn covering() {
        assert!(covers_pairs(&complete(4, 3).unwrap()));
        let p3 = linear_path(3).unwrap();
        assert!(!covers_pairs(&p3));
        assert!(uncovered_pairs(&p3).contains(&(1, 4)));
        let f5 = named(NamedGraph::F5);
        assert!(uncovered_pairs(&f5).contains(&(1, 5)));
    }

    #[test]
    fn links() {
        let l = link(&complete(4, 3).unwrap(), 1).unwrap();
        assert_eq!(l, Hypergraph::new(2, 4, [[2, 3], [2, 4], [3, 4]]).unwrap());
        let l = link(&linear_path(3).unwrap(), 4).unwrap();
        assert_eq!(l, Hypergraph::new(2, 7, [[3, 5]]).unwrap());
        let g = g3(5, &[[1, 2, 3]]);
        assert!(link(&g, 5).unwrap().has_no_edges());
        assert!(link(&g, 6).is_err());
    }

    #[test]
    fn link_differences() {
        assert_eq!(
            link_diff(&g3(4, &[[2, 3, 4]]), 2, 1).unwrap(),
            vec![vec![3, 4]]
        );
        assert!(link_diff(&complete(4, 3).unwrap(), 2, 1)
            .unwrap()
            .is_empty());
        assert!(link_diff(&g3(4, &[[1, 2, 3], [1, 2, 4]]), 4, 3)
            .unwrap()
            .is_empty());
        assert!(link_diff(&complete(4, 3).unwrap(), 2, 2).is_err());
    }

    #[test]
    fn compressions() {
        assert_eq!(
            compress(&g3(4, &[[2, 3, 4]]), 1, 2).unwrap(),
            g3(4, &[[1, 3, 4]])
        );
        let k4 = complete(4, 3).unwrap();
        assert_eq!(compress(&k4, 1, 2).unwrap(), k4);
        assert_eq!(
            compress(&g3(5, &[[1, 2, 3], [1, 4, 5]]), 2, 4).unwrap(),
            g3(5, &[[1, 2, 3], [1, 2, 5]])
        );
    }

    #[test]
    fn left_compression() {
        assert!(is_left_compressed(&complete(5, 3).unwrap()));
        assert!(!is_left_compressed(&g3(5, &[[3, 4, 5]])));
        assert!(is_left_compressed(&g3(
            5,
            &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4]]
        )));
    }

    #[test]
    fn induced_subgraphs() {
        let k6 = complete(6, 3).unwrap();
        assert_eq!(
            induced(&k6, &[1, 2, 3, 4]).unwrap(),
            complete(4, 3).unwrap()
        );
        let p3 = linear_path(3).unwrap();
        assert_eq!(induced(&p3, &[4, 1, 2, 3]).unwrap(), g3(4, &[[1, 2, 3]]));
        let e = induced(&p3, &[]).unwrap();
        assert_eq!((e.n(), e.size()), (0, 0));
        assert!(induced(&p3, &[8]).is_err());
        assert_eq!(induced(&p3, &[3, 4, 5]).unwrap(), g3(3, &[[1, 2, 3]]));
    }

    #[test]
    fn twin_classes() {
        assert_eq!(equivalence_classes(&complete(5, 3).unwrap()).len(), 1);
        assert_eq!(
            equivalence_classes(&complete_minus(6, 3).unwrap()).classes(),
            &[vec![1, 2, 3], vec![4, 5, 6]]
        );
        assert_eq!(
            equivalence_classes(&linear_path(3).unwrap()).classes(),
            &[vec![1, 2], vec![3], vec![4], vec![5], vec![6, 7]]
        );
    }

    #[test]
    fn equal_link_classes() {
        // Adjacent vertices never share a link.
        assert_eq!(link_classes(&complete(4, 3).unwrap()).len(), 4);
        let g = g3(4, &[[1, 2, 3], [2, 3, 4]]);
        assert_eq!(link_classes(&g).classes(), &[vec![1, 4], vec![2], vec![3]]);
    }

    #[test]
    fn symmetrizations() {
        let g = g3(6, &[[1, 2, 3], [4, 5, 6]]);
        assert_eq!(
            symmetrize(&g, 1, 4).unwrap(),
            g3(6, &[[1, 5, 6], [4, 5, 6]])
        );
        assert_eq!(
            symmetrize(&g3(4, &[[1, 2, 3]]), 4, 1).unwrap(),
            g3(4, &[[1, 2, 3], [2, 3, 4]])
        );
        let same = g3(5, &[[1, 2, 3], [2, 3, 4]]);
        assert_eq!(symmetrize(&same, 1, 4).unwrap(), same);
        assert!(symmetrize(&same, 2, 2).is_err());
    }
}
