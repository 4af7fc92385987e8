//! Subgraph containment, forbidden-configuration detectors and the
//! compression / symmetrization procedures built on them.

mod compression;
mod core;
mod lemmas;
mod paths;
mod symmetrization;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use self::core::{contains_core, find_core};
pub use compression::{left_compress_loop, CompressionOutcome};
pub use lemmas::{check_lemma_structures, LemmaCheck, LemmaReport};
pub use paths::{contains_linear_path, contains_linear_path_through};
pub use symmetrization::{symmetrize_clean, SymmetrizationOutcome};

/// Injective, edge-preserving map `V(F) -> V(G)`; `assignment[i - 1]` is the
/// image of pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingMap {
    pub assignment: Vec<u32>,
}

impl EmbeddingMap {
    pub fn image(&self, v: u32) -> u32 {
        self.assignment[v as usize - 1]
    }

    /// True iff the map is injective and carries every edge of `f` into `g`.
    pub fn verify(&self, g: &Hypergraph, f: &Hypergraph) -> bool {
        if self.assignment.len() != f.n() {
            return false;
        }
        let mut seen = FxHashSet::default();
        if !self
            .assignment
            .iter()
            .all(|&v| v >= 1 && v as usize <= g.n() && seen.insert(v))
        {
            return false;
        }
        f.edges().iter().all(|e| {
            let mut img: Vec<u32> = e.vertices().iter().map(|&v| self.image(v)).collect();
            img.sort_unstable();
            g.contains_edge(&img)
        })
    }
}

pub(crate) fn check_uniformity(g: &Hypergraph, f: &Hypergraph) -> Result<()> {
    if g.r() != f.r() {
        return Err(Error::UniformityMismatch {
            expected: g.r(),
            found: f.r(),
        });
    }
    Ok(())
}

/// Backtracking embedder of a fixed pattern into a fixed host (`n <= 64`).
pub(crate) struct Matcher<'a> {
    f: &'a Hypergraph,
    host_edges: FxHashSet<u64>,
    host_adj: Vec<u64>,
    host_deg: Vec<usize>,
    pat_edges: Vec<Vec<u32>>,
    pat_deg: Vec<usize>,
    pat_adj: Vec<Vec<u32>>,
    host_n: usize,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(g: &Hypergraph, f: &'a Hypergraph) -> Result<Self> {
        check_uniformity(g, f)?;
        let masks = g.edge_masks()?;
        let mut host_adj = vec![0u64; g.n()];
        for &m in &masks {
            let mut b = m;
            while b != 0 {
                let v = b.trailing_zeros() as usize;
                b &= b - 1;
                host_adj[v] |= m & !(1 << v);
            }
        }
        let pat_edges: Vec<Vec<u32>> = f
            .edges()
            .iter()
            .map(|e| e.vertices().iter().map(|&v| v - 1).collect())
            .collect();
        let mut pat_adj = vec![Vec::new(); f.n()];
        for e in &pat_edges {
            for &a in e {
                for &b in e {
                    if a != b && !pat_adj[a as usize].contains(&b) {
                        pat_adj[a as usize].push(b);
                    }
                }
            }
        }
        Ok(Matcher {
            f,
            host_edges: masks.into_iter().collect(),
            host_adj,
            host_deg: g.degrees(),
            pat_edges,
            pat_deg: f.degrees(),
            pat_adj,
            host_n: g.n(),
        })
    }

    /// Pattern vertices in search order given those already placed: highest
    /// number of edges to placed vertices, then degree, then id.
    fn order(&self, placed: &[bool]) -> Vec<u32> {
        let k = self.f.n();
        let mut placed = placed.to_vec();
        let mut order = Vec::new();
        for _ in 0..k {
            let next = (0..k).filter(|&v| !placed[v]).max_by_key(|&v| {
                let conn = self
                    .pat_edges
                    .iter()
                    .filter(|e| e.contains(&(v as u32)) && e.iter().any(|&w| placed[w as usize]))
                    .count();
                (conn, self.pat_deg[v], std::cmp::Reverse(v))
            });
            let Some(v) = next else { break };
            placed[v] = true;
            order.push(v as u32);
        }
        order
    }

    /// First embedding extending `pre` (pairs of 1-based pattern/host ids).
    pub(crate) fn search(&self, pre: &[(u32, u32)]) -> Option<EmbeddingMap> {
        let k = self.f.n();
        if k > self.host_n {
            return None;
        }
        let mut map = vec![u32::MAX; k];
        let mut placed = vec![false; k];
        let mut used = 0u64;
        for &(p, h) in pre {
            let (p, h) = (p as usize - 1, h - 1);
            if placed[p] || used >> h & 1 == 1 {
                return None;
            }
            map[p] = h;
            placed[p] = true;
            used |= 1 << h;
        }
        // Pre-assigned edges must already hold.
        for e in &self.pat_edges {
            if e.iter().all(|&v| placed[v as usize])
                && !self.host_edges.contains(&self.mask(e, &map))
            {
                return None;
            }
        }
        let order = self.order(&placed);
        let mut pos = vec![usize::MAX; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        let checks: Vec<Vec<usize>> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..self.pat_edges.len())
                    .filter(|&x| {
                        let e = &self.pat_edges[x];
                        e.contains(&v)
                            && e.iter()
                                .all(|&w| placed[w as usize] || pos[w as usize] <= i)
                    })
                    .collect()
            })
            .collect();
        if self.extend(&order, &checks, 0, &mut map, used) {
            Some(EmbeddingMap {
                assignment: map.into_iter().map(|h| h + 1).collect(),
            })
        } else {
            None
        }
    }

    fn mask(&self, e: &[u32], map: &[u32]) -> u64 {
        e.iter().fold(0u64, |m, &v| m | 1 << map[v as usize])
    }

    fn extend(
        &self,
        order: &[u32],
        checks: &[Vec<usize>],
        i: usize,
        map: &mut [u32],
        used: u64,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i] as usize;
        let all = if self.host_n == 64 {
            u64::MAX
        } else {
            (1u64 << self.host_n) - 1
        };
        let mut cand = all & !used;
        for &w in &self.pat_adj[v] {
            if map[w as usize] != u32::MAX {
                cand &= self.host_adj[map[w as usize] as usize];
            }
        }
        while cand != 0 {
            let h = cand.trailing_zeros();
            cand &= cand - 1;
            if self.host_deg[h as usize] < self.pat_deg[v] {
                continue;
            }
            map[v] = h;
            let ok = checks[i].iter().all(|&x| {
                self.host_edges
                    .contains(&self.mask(&self.pat_edges[x], map))
            });
            if ok && self.extend(order, checks, i + 1, map, used | 1 << h) {
                return true;
            }
            map[v] = u32::MAX;
        }
        false
    }
}

/// A copy of `f` in `g`, if any. Hosts are limited to 64 vertices.
pub fn contains(g: &Hypergraph, f: &Hypergraph) -> Result<Option<EmbeddingMap>> {
    Ok(Matcher::new(g, f)?.search(&[]))
}

pub fn is_free(g: &Hypergraph, f: &Hypergraph) -> Result<bool> {
    Ok(contains(g, f)?.is_none())
}

/// A copy of `f` in `g` that uses the host edge `edge` (sorted vertices).
pub fn contains_through_edge(
    g: &Hypergraph,
    f: &Hypergraph,
    edge: &[u32],
) -> Result<Option<EmbeddingMap>> {
    let m = Matcher::new(g, f)?;
    for pe in f.edges() {
        for perm in permutations(edge) {
            let pre: Vec<(u32, u32)> = pe.vertices().iter().copied().zip(perm).collect();
            if let Some(found) = m.search(&pre) {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

pub(crate) fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Same order, same size and `g` contains `f`.
pub fn isomorphic(g: &Hypergraph, f: &Hypergraph) -> Result<bool> {
    if g.r() != f.r() || g.n() != f.n() || g.size() != f.size() {
        return Ok(false);
    }
    Ok(contains(g, f)?.is_some())
}
