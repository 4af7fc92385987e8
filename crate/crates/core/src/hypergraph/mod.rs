//! Uniform hypergraphs on the vertex set `1..=n`.
//!
//! A [`Hypergraph`] is kept in canonical form: every edge is a strictly
//! increasing vertex list and the edge list is sorted and duplicate free, so
//! derived `PartialEq` is structural equality. Isolated vertices are allowed
//! (`n` may exceed every id that appears in an edge).

mod constructions;
pub mod io;
mod operators;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use constructions::{
    blowup, complete, complete_minus, extension, linear_path, matching, named, turan_blowup,
    turan_count, turan_parts, NamedGraph,
};
pub use operators::{
    compress, covers_pairs, delete_vertex, equivalence_classes, induced, is_left_compressed, link,
    link_classes, link_diff, symmetrize, uncovered_pairs, VertexPartition,
};

/// A strictly increasing list of 1-based vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Edge(Vec<u32>);

impl Edge {
    /// Sorts the vertices; rejects repeats and the id 0.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.first() == Some(&0) {
            return Err(Error::InvalidEdge {
                edge: vertices,
                reason: "vertex ids are 1-based".into(),
            });
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                edge: vertices,
                reason: "repeated vertex".into(),
            });
        }
        Ok(Edge(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Bit `v - 1` set for every vertex `v`; requires ids `<= 64`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | 1u64 << (v - 1))
    }

    /// The edge with `from` replaced by `to` (re-sorted).
    pub(crate) fn replace(&self, from: u32, to: u32) -> Edge {
        let mut v: Vec<u32> = self
            .0
            .iter()
            .map(|&x| if x == from { to } else { x })
            .collect();
        v.sort_unstable();
        Edge(v)
    }

    pub(crate) fn without(&self, v: u32) -> Vec<u32> {
        self.0.iter().copied().filter(|&x| x != v).collect()
    }
}

impl TryFrom<Vec<u32>> for Edge {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Edge::new(v)
    }
}

impl From<Edge> for Vec<u32> {
    fn from(e: Edge) -> Self {
        e.0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        if self.0.iter().all(|&v| v < 10) {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// An `r`-uniform hypergraph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<u32>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;
    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.r, raw.n, raw.edges)
    }
}

impl Hypergraph {
    /// Validates and canonicalizes. Duplicate edges collapse.
    pub fn new<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if r == 0 {
            return Err(Error::ZeroUniformity);
        }
        let mut out = Vec::new();
        for e in edges {
            let raw = e.as_ref().to_vec();
            if raw.len() != r {
                return Err(Error::InvalidEdge {
                    edge: raw.clone(),
                    reason: format!("has {} vertices, expected {r}", raw.len()),
                });
            }
            let edge = Edge::new(raw)?;
            if let Some(&v) = edge.0.iter().find(|&&v| v as usize > n) {
                return Err(Error::InvalidEdge {
                    edge: edge.0.clone(),
                    reason: format!("vertex {v} exceeds n = {n}"),
                });
            }
            out.push(edge);
        }
        out.sort_unstable();
        out.dedup();
        Ok(Hypergraph { r, n, edges: out })
    }

    /// Builds from edges known to be valid; sorts and dedups.
    pub(crate) fn from_edges(r: usize, n: usize, mut edges: Vec<Edge>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == r && e.0.iter().all(|&v| v >= 1 && v as usize <= n)));
        edges.sort_unstable();
        edges.dedup();
        Hypergraph { r, n, edges }
    }

    pub fn empty(r: usize, n: usize) -> Self {
        Hypergraph {
            r,
            n,
            edges: Vec::new(),
        }
    }

    /// Uniformity.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_no_edges(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n as u32
    }

    /// Membership test; `vertices` must be sorted.
    pub fn contains_edge(&self, vertices: &[u32]) -> bool {
        self.edges
            .binary_search_by(|e| e.0.as_slice().cmp(vertices))
            .is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// `degrees()[v - 1]` is the degree of `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in &e.0 {
                d[v as usize - 1] += 1;
            }
        }
        d
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v as usize > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Vertex bitmasks of all edges; fails when `n > 64`.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooManyVertices { n: self.n, max: 64 });
        }
        Ok(self.edges.iter().map(Edge::mask).collect())
    }

    /// Same edges on a larger vertex set.
    pub fn with_order(&self, n: usize) -> Result<Self> {
        if let Some(max) = self.edges.iter().filter_map(|e| e.0.last()).max() {
            if *max as usize > n {
                return Err(Error::VertexOutOfRange { vertex: *max, n });
            }
        }
        Ok(Hypergraph {
            r: self.r,
            n,
            edges: self.edges.clone(),
        })
    }

    /// Applies a vertex map (`map[v - 1]` is the image of `v`) into `1..=n`.
    pub fn relabel(&self, map: &[u32], n: usize) -> Result<Self> {
        if map.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "relabeling has {} entries for {} vertices",
                map.len(),
                self.n
            )));
        }
        let edges = self.edges.iter().map(|e| {
            e.0.iter()
                .map(|&v| map[v as usize - 1])
                .collect::<Vec<u32>>()
        });
        let g = Hypergraph::new(self.r, n, edges)?;
        if g.size() != self.size() {
            return Err(Error::InvalidArgument("relabeling is not injective".into()));
        }
        Ok(g)
    }

    /// Adds an edge (no-op when present).
    pub fn insert(&mut self, vertices: &[u32]) -> Result<bool> {
        let g = Hypergraph::new(self.r, self.n, [vertices])?;
        let e = g.edges.into_iter().next().expect("one edge");
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.edges.insert(pos, e);
                Ok(true)
            }
        }
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "r={} n={} {{{}}}", self.r, self.n, parts.join(", "))
    }
}
